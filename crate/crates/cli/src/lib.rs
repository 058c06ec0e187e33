//! Command-line front-end for `pcgroup`.
//!
//! Every command prints one JSON document on standard output (except
//! `intersect-free --format text|dot`) and diagnostics on standard error.
//! Exit codes: 0 on success, 2 on unreadable or malformed input. Yes/no
//! commands report their verdict in the JSON; with `--exit-status` a
//! negative verdict exits 1 instead of 0.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pcgroup::characterization::ExplicitCatalogEntry;
use pcgroup::{
    are_equal, certify_not_fg, classify, embeds_in, find_induced_embedding, normal_form,
    SimpleGraph, StallingsGraph, VertexRestriction, Word,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pcgroup",
    version,
    about = "Decide Howson and related properties of PC-groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify A(Γ) for a graph file.
    Classify { graph: String },
    /// Print the normal form of a word.
    NormalForm { graph: String, word: String },
    /// Decide whether two words are equal in A(Γ).
    Equal {
        graph: String,
        left: String,
        right: String,
        #[command(flatten)]
        status: ExitStatus,
    },
    /// Decide whether a word lies in the subgroup generated by a vertex set.
    MemberVisible {
        graph: String,
        word: String,
        /// Comma-separated vertices.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        subset: Vec<String>,
        #[command(flatten)]
        status: ExitStatus,
    },
    /// Decide whether A(pattern) embeds in A(host) for an explicit pattern.
    Embed {
        /// A catalog name (K3, P3, P4, C4, edgeless_2, ...) or a graph file.
        pattern: String,
        host: String,
        #[command(flatten)]
        status: ExitStatus,
    },
    /// Intersect two finitely generated subgroups of a free group.
    IntersectFree(IntersectArgs),
    /// Show that Z x F2 is not Howson, up to a bound.
    DemoNonhowson {
        #[arg(long)]
        m: u32,
    },
    /// Check the P3-free / transitive / clique-union equivalence on all
    /// labeled graphs with at most five vertices.
    SelfCheck,
}

#[derive(Debug, Args)]
struct ExitStatus {
    /// Exit 1 on a negative verdict.
    #[arg(long)]
    exit_status: bool,
}

#[derive(Debug, Args)]
struct IntersectArgs {
    /// Generator of the first subgroup (repeatable).
    #[arg(long = "h", value_name = "WORD")]
    h: Vec<String>,
    /// Generator of the second subgroup (repeatable).
    #[arg(long = "k", value_name = "WORD")]
    k: Vec<String>,
    /// Automaton file for the first subgroup, instead of `--h`.
    #[arg(long, conflicts_with = "h")]
    h_automaton: Option<String>,
    /// Automaton file for the second subgroup, instead of `--k`.
    #[arg(long, conflicts_with = "k")]
    k_automaton: Option<String>,
    /// Extra generators of the ambient free group (comma-separated).
    #[arg(long, value_delimiter = ',')]
    alphabet: Vec<String>,
    /// Words to test against the intersection (repeatable).
    #[arg(long = "member", value_name = "WORD")]
    members: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

/// An input problem, reported on standard error with exit code 2.
#[derive(Debug)]
struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn input_err(source: &str, e: impl fmt::Display) -> InputError {
    InputError(format!("{source}: {e}"))
}

/// Standard input and the file reader, swappable in tests.
struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    /// Reads a path, or standard input for `-`.
    fn read(&mut self, path: &str) -> Result<String, InputError> {
        if path == "-" {
            if self.stdin_used {
                return Err(InputError("standard input can only be read once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| input_err("<stdin>", e))?;
            return Ok(s);
        }
        std::fs::read_to_string(path).map_err(|e| input_err(path, e))
    }

    fn graph(&mut self, path: &str) -> Result<SimpleGraph, InputError> {
        let text = self.read(path)?;
        SimpleGraph::parse(&text).map_err(|e| input_err(path, e))
    }
}

fn word(s: &str) -> Result<Word, InputError> {
    Word::parse(s).map_err(|e| input_err("word", e))
}

/// The result of a command: what to print and the exit code.
struct Output {
    body: String,
    code: i32,
}

impl Output {
    fn json(value: &impl Serialize) -> Self {
        Self::verdict(value, true, false)
    }

    fn verdict(value: &impl Serialize, positive: bool, exit_status: bool) -> Self {
        let mut body = serde_json::to_string_pretty(value).expect("reports serialize");
        body.push('\n');
        let code = if exit_status && !positive {
            EXIT_NEGATIVE
        } else {
            EXIT_OK
        };
        Output { body, code }
    }
}

/// Runs the command line `argv` (program name first).
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_INPUT
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdin_used: false,
    };
    match dispatch(cli.command, &mut io) {
        Ok(out) => {
            let _ = stdout.write_all(out.body.as_bytes());
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Result<Output, InputError> {
    match command {
        Command::Classify { graph } => Ok(Output::json(&classify(&io.graph(&graph)?))),
        Command::NormalForm { graph, word: w } => normal_form_cmd(&io.graph(&graph)?, &w),
        Command::Equal {
            graph,
            left,
            right,
            status,
        } => {
            let g = io.graph(&graph)?;
            let equal =
                are_equal(&word(&left)?, &word(&right)?, &g).map_err(|e| input_err("word", e))?;
            #[derive(Serialize)]
            struct Report {
                left: String,
                right: String,
                equal: bool,
            }
            let report = Report { left, right, equal };
            Ok(Output::verdict(&report, equal, status.exit_status))
        }
        Command::MemberVisible {
            graph,
            word: w,
            subset,
            status,
        } => member_visible(io.graph(&graph)?, &w, &subset, status.exit_status),
        Command::Embed {
            pattern,
            host,
            status,
        } => embed(io, &pattern, &host, status.exit_status),
        Command::IntersectFree(args) => intersect_free(io, args),
        Command::DemoNonhowson { m } => {
            let cert = certify_not_fg(m).map_err(|e| InputError(e.to_string()))?;
            Ok(Output::json(&cert))
        }
        Command::SelfCheck => Ok(self_check()),
    }
}

fn normal_form_cmd(g: &SimpleGraph, w: &str) -> Result<Output, InputError> {
    let nf = normal_form(&word(w)?, g).map_err(|e| input_err("word", e))?;
    #[derive(Serialize)]
    struct Report {
        word: String,
        normal_form: String,
        length: usize,
    }
    Ok(Output::json(&Report {
        word: w.to_string(),
        normal_form: nf.as_word().to_string(),
        length: nf.len(),
    }))
}

fn member_visible(
    g: SimpleGraph,
    w: &str,
    subset: &[String],
    exit_status: bool,
) -> Result<Output, InputError> {
    let r = VertexRestriction::new(g, subset.iter().map(String::as_str))
        .map_err(|e| input_err("--subset", e))?;
    let nf = r
        .visible_normal_form(&word(w)?)
        .map_err(|e| input_err("word", e))?;
    #[derive(Serialize)]
    struct Report {
        word: String,
        subset: Vec<String>,
        member: bool,
        visible_normal_form: Option<String>,
    }
    let member = nf.is_some();
    let report = Report {
        word: w.to_string(),
        subset: r.subset().iter().cloned().collect(),
        member,
        visible_normal_form: nf.map(|n| n.as_word().to_string()),
    };
    Ok(Output::verdict(&report, member, exit_status))
}

fn embed(io: &mut Io, pattern: &str, host: &str, exit_status: bool) -> Result<Output, InputError> {
    // Existing files are graphs; anything else must be a catalog name.
    let entry = if pattern == "-" || std::path::Path::new(pattern).is_file() {
        let g = io.graph(pattern)?;
        ExplicitCatalogEntry::recognize(&g).map_err(|e| input_err(pattern, e))?
    } else {
        ExplicitCatalogEntry::by_name(pattern).map_err(|e| input_err(pattern, e))?
    };
    let host_graph = io.graph(host)?;
    let embeds = embeds_in(&entry, &host_graph);
    let witness = if embeds {
        find_induced_embedding(&entry.pattern, &host_graph)
            .map(|m| m.pairs().iter().cloned().collect())
    } else {
        None
    };
    #[derive(Serialize)]
    struct Report {
        pattern: String,
        embeds: bool,
        /// Pattern vertex to host vertex.
        witness: Option<BTreeMap<String, String>>,
    }
    let report = Report {
        pattern: entry.name(),
        embeds,
        witness,
    };
    Ok(Output::verdict(&report, embeds, exit_status))
}

fn subgroup(
    io: &mut Io,
    flag: &str,
    gens: &[String],
    file: Option<&str>,
    alphabet: &[String],
) -> Result<StallingsGraph, InputError> {
    let extra = alphabet.iter().map(String::as_str);
    match file {
        Some(path) => {
            let text = io.read(path)?;
            StallingsGraph::parse(&text, extra).map_err(|e| input_err(path, e))
        }
        None => {
            let words = gens
                .iter()
                .map(|g| word(g))
                .collect::<Result<Vec<_>, _>>()?;
            let mut letters: Vec<String> = words
                .iter()
                .flat_map(|w| {
                    w.generators()
                        .into_iter()
                        .map(str::to_string)
                        .collect::<Vec<_>>()
                })
                .collect();
            letters.extend(alphabet.iter().cloned());
            let g = StallingsGraph::from_generators(&words, letters.iter().map(String::as_str));
            g.map_err(|e| input_err(flag, e))
        }
    }
}

fn intersect_free(io: &mut Io, args: IntersectArgs) -> Result<Output, InputError> {
    let h = subgroup(
        io,
        "--h",
        &args.h,
        args.h_automaton.as_deref(),
        &args.alphabet,
    )?;
    let k = subgroup(
        io,
        "--k",
        &args.k,
        args.k_automaton.as_deref(),
        &args.alphabet,
    )?;
    // Both automata live over the union of the two alphabets.
    let h2 = h.with_alphabet(k.alphabet().iter().map(String::as_str));
    let k2 = k.with_alphabet(h.alphabet().iter().map(String::as_str));
    let inter = h2.intersect(&k2).map_err(|e| InputError(e.to_string()))?;

    let body = match args.format {
        Format::Text => inter.to_text(),
        Format::Dot => inter.to_dot(),
        Format::Json => {
            #[derive(Serialize)]
            struct Membership {
                word: String,
                member: bool,
            }
            #[derive(Serialize)]
            struct Report {
                alphabet: Vec<String>,
                states: usize,
                rank: usize,
                base: usize,
                edges: Vec<(usize, String, usize)>,
                members: Vec<Membership>,
            }
            let members = args
                .members
                .iter()
                .map(|m| {
                    Ok(Membership {
                        word: m.clone(),
                        member: inter.member(&word(m)?),
                    })
                })
                .collect::<Result<Vec<_>, InputError>>()?;
            let report = Report {
                alphabet: inter.alphabet().to_vec(),
                states: inter.state_count(),
                rank: inter.rank(),
                base: inter.base(),
                edges: inter
                    .edges()
                    .into_iter()
                    .map(|(f, g, t)| (f, g.to_string(), t))
                    .collect(),
                members,
            };
            return Ok(Output::json(&report));
        }
    };
    Ok(Output {
        body,
        code: EXIT_OK,
    })
}

fn self_check() -> Output {
    // One worker per vertex count; the sweeps share nothing.
    let results: Vec<(usize, usize, Vec<String>)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..=5)
            .map(|n| {
                s.spawn(move || {
                    let mut bad = Vec::new();
                    let mut count = 0;
                    for g in SimpleGraph::all_labeled(n) {
                        count += 1;
                        let p3_free = g.find_induced_p3().is_none();
                        if p3_free != g.reflexive_closure_is_transitive()
                            || p3_free != g.complete_decomposition().is_some()
                        {
                            bad.push(g.to_text());
                        }
                    }
                    (n, count, bad)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    #[derive(Serialize)]
    struct Report {
        max_vertices: usize,
        graphs_checked: usize,
        disagreements: Vec<String>,
        passed: bool,
    }
    let disagreements: Vec<String> = results.iter().flat_map(|r| r.2.clone()).collect();
    let passed = disagreements.is_empty();
    let report = Report {
        max_vertices: 5,
        graphs_checked: results.iter().map(|r| r.1).sum(),
        disagreements,
        passed,
    };
    Output::verdict(&report, passed, true)
}
