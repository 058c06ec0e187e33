//! Plain-text graph format.
//!
//! ```text
//! # the path on three vertices
//! a b c
//! a b
//! b c
//! ```
//!
//! The first line that is not a pure comment lists the vertices (it may be
//! blank, giving the empty graph). Every later non-blank line declares one
//! edge `u v`. `#` starts a comment anywhere on a line. Repeated edges are
//! accepted and merged.

use std::fmt;
use std::str::FromStr;

use super::SimpleGraph;
use crate::error::{Error, Result};

impl SimpleGraph {
    pub fn parse(input: &str) -> Result<Self> {
        let mut lines = input
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l, strip_comment(l)))
            .skip_while(|(_, raw, _)| raw.trim_start().starts_with('#'));

        let Some((vline, _, header)) = lines.next() else {
            return Ok(SimpleGraph::empty());
        };
        let names: Vec<&str> = header.split_whitespace().collect();
        let mut graph = SimpleGraph::new(names.iter().copied(), Vec::<(&str, &str)>::new())
            .map_err(|e| Error::parse(vline, e.to_string()))?;

        for (line, _, body) in lines {
            let tokens: Vec<&str> = body.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                [u, v] => {
                    let i = graph
                        .index_of(u)
                        .ok_or_else(|| Error::parse(line, format!("unknown vertex `{u}`")))?;
                    let j = graph
                        .index_of(v)
                        .ok_or_else(|| Error::parse(line, format!("unknown vertex `{v}`")))?;
                    if i == j {
                        return Err(Error::parse(line, format!("self-loop `{u} {v}`")));
                    }
                    graph.set_edge(i, j);
                }
                _ => {
                    return Err(Error::parse(
                        line,
                        format!("expected an edge `u v`, found {} tokens", tokens.len()),
                    ))
                }
            }
        }
        Ok(graph)
    }

    /// Renders the graph in the text format accepted by [`SimpleGraph::parse`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

impl FromStr for SimpleGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.vertices().join(" "))?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}
