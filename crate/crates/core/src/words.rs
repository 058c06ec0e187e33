//! Words over signed generators and the word problem in A(Γ).
//!
//! A [`NormalWord`] is the canonical representative of a group element: it
//! is reduced (no `x^e ... x^-e` pair whose intervening letters all commute
//! with `x`), and among the words obtained from it by swapping adjacent
//! commuting letters it is the lexicographically least. Letters are ordered
//! by generator name, then `x` before `x^-1`.
//!
//! The reduction piles letters one at a time onto a stack: an incoming letter
//! looks back past the letters it commutes with and cancels against its
//! inverse if it finds one there. A reduced word then has the least
//! lexicographic ordering of its commutation class picked greedily.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: Arc<str>,
    pub sign: Sign,
}

impl Letter {
    pub fn new(generator: impl Into<Arc<str>>, sign: Sign) -> Self {
        Self {
            generator: generator.into(),
            sign,
        }
    }

    pub fn pos(generator: impl Into<Arc<str>>) -> Self {
        Self::new(generator, Sign::Pos)
    }

    pub fn neg(generator: impl Into<Arc<str>>) -> Self {
        Self::new(generator, Sign::Neg)
    }

    pub fn inverse(&self) -> Self {
        Self {
            generator: self.generator.clone(),
            sign: self.sign.flip(),
        }
    }
}

/// A finite sequence of letters, not necessarily reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `generator^exponent`; the empty word for exponent 0.
    pub fn power(generator: &str, exponent: i64) -> Self {
        let generator: Arc<str> = generator.into();
        let sign = if exponent < 0 { Sign::Neg } else { Sign::Pos };
        let letters = (0..exponent.unsigned_abs())
            .map(|_| Letter::new(generator.clone(), sign))
            .collect();
        Self { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn multiply(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The formal inverse: reversed, with every sign flipped.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// The commutator `x y x^-1 y^-1`.
    pub fn commutator(x: &str, y: &str) -> Word {
        Word::new(vec![
            Letter::pos(x),
            Letter::pos(y),
            Letter::neg(x),
            Letter::neg(y),
        ])
    }

    /// Exponent sum of one generator.
    pub fn exponent_sum(&self, generator: &str) -> i64 {
        self.letters
            .iter()
            .filter(|l| &*l.generator == generator)
            .map(|l| l.sign.as_i64())
            .sum()
    }

    /// Generators occurring in the word as written.
    pub fn generators(&self) -> BTreeSet<&str> {
        self.letters.iter().map(|l| &*l.generator).collect()
    }

    /// Free reduction: cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let free = SimpleGraph::edgeless(self.generators().into_iter().map(str::to_string))
            .expect("generator names are distinct");
        normal_form(self, &free)
            .expect("every generator is a vertex")
            .into_word()
    }

    /// Parses the textual word syntax: whitespace-separated tokens, each a
    /// generator name optionally followed by `^k` for a nonzero integer `k`.
    pub fn parse(input: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in input.split_whitespace() {
            let invalid = |reason: &str| Error::InvalidWord {
                token: token.to_string(),
                reason: reason.to_string(),
            };
            let (name, exponent) = match token.split_once('^') {
                None => (token, 1),
                Some((name, exp)) => {
                    let k: i64 = exp
                        .parse()
                        .map_err(|_| invalid("exponent is not an integer"))?;
                    if k == 0 {
                        return Err(invalid("exponent must be nonzero"));
                    }
                    (name, k)
                }
            };
            if name.is_empty() || name.contains('#') {
                return Err(invalid("missing generator name"));
            }
            letters.extend(Word::power(name, exponent).letters);
        }
        Ok(Word { letters })
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::new(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

/// Runs of equal letters are written as powers, e.g. `a^-2 b a^2`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut rest = self.letters.as_slice();
        while let Some(head) = rest.first() {
            let run = rest.iter().take_while(|l| *l == head).count();
            let exponent = run as i64 * head.sign.as_i64();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if exponent == 1 {
                write!(f, "{}", head.generator)?;
            } else {
                write!(f, "{}^{}", head.generator, exponent)?;
            }
            rest = &rest[run..];
        }
        Ok(())
    }
}

/// The canonical representative of an element of A(Γ).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalWord(Word);

impl NormalWord {
    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Letters encoded as `2 * vertex index + (sign is negative)`, so that code
/// order is generator order then `+` before `-`. Each code is paired with
/// its position in the input word.
fn encode(w: &Word, g: &SimpleGraph) -> Result<Vec<(usize, usize)>> {
    w.letters
        .iter()
        .enumerate()
        .map(|(pos, l)| {
            g.index_of(&l.generator)
                .map(|i| (2 * i + (l.sign == Sign::Neg) as usize, pos))
                .ok_or_else(|| Error::UnknownVertex(l.generator.to_string()))
        })
        .collect()
}

fn pile(codes: &[(usize, usize)], g: &SimpleGraph) -> Vec<(usize, usize)> {
    let mut stack: Vec<(usize, usize)> = Vec::with_capacity(codes.len());
    for &(c, pos) in codes {
        let gen = c >> 1;
        let mut cancel_at = None;
        for (at, &(prev, _)) in stack.iter().enumerate().rev() {
            if prev >> 1 == gen {
                if prev != c {
                    cancel_at = Some(at);
                }
                break;
            }
            if !g.adjacent(prev >> 1, gen) {
                break;
            }
        }
        match cancel_at {
            Some(at) => {
                stack.remove(at);
            }
            None => stack.push((c, pos)),
        }
    }
    stack
}

/// Least word in the commutation class: repeatedly emit the smallest letter
/// that every earlier remaining letter commutes with.
fn lex_least(mut rest: Vec<(usize, usize)>, g: &SimpleGraph) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..rest.len() {
            let gen = rest[i].0 >> 1;
            let movable = rest[..i]
                .iter()
                .all(|&(p, _)| p >> 1 != gen && g.adjacent(p >> 1, gen));
            if movable && best.is_none_or(|b| rest[i].0 < rest[b].0) {
                best = Some(i);
            }
        }
        out.push(rest.remove(best.expect("the first letter is always movable")));
    }
    out
}

/// Canonical representative of `w` in the group presented by `g`.
pub fn normal_form(w: &Word, g: &SimpleGraph) -> Result<NormalWord> {
    let codes = encode(w, g)?;
    let kept = lex_least(pile(&codes, g), g);
    Ok(NormalWord(
        kept.iter()
            .map(|&(_, pos)| w.letters[pos].clone())
            .collect(),
    ))
}

/// Whether `u` and `v` represent the same element of A(`g`).
pub fn are_equal(u: &Word, v: &Word, g: &SimpleGraph) -> Result<bool> {
    Ok(normal_form(&u.multiply(&v.inverse()), g)?.is_identity())
}

/// Generators occurring in the normal form of `w`.
pub fn support(w: &Word, g: &SimpleGraph) -> Result<BTreeSet<String>> {
    let codes = pile(&encode(w, g)?, g);
    Ok(codes
        .iter()
        .map(|&(c, _)| g.vertex(c >> 1).to_string())
        .collect())
}

/// Free reduction; the normal form over the edgeless graph.
pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}
