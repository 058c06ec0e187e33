//! Z × F2 is not Howson.
//!
//! Write Z × F2 = <t> × <a, b>. The subgroups `H = <a, b>` and
//! `K = <ta, b>` are both free of rank two, and `K` consists of the elements
//! `t^|w|_a w(a, b)` where `|w|_a` is the exponent sum of `a`. So `H ∩ K` is
//! the set of words with zero `a`-exponent sum: the normal closure of `b`,
//! freely generated by the conjugates `a^-k b a^k` for all integers `k`.
//!
//! That intersection is not finitely generated. This module produces one
//! finite certificate per bound `m`: the Stallings automaton of the `2m + 1`
//! conjugates with `|k| <= m` has rank `2m + 1` and rejects
//! `a^-(m+1) b a^(m+1)`, an element of the intersection.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::stallings::StallingsGraph;
use crate::words::{Letter, Word};

const ALPHABET: [&str; 2] = ["a", "b"];

/// An element of Z × F2: a power of `t` and a reduced word in `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZF2Element {
    pub t_exp: i64,
    pub word: Word,
}

impl ZF2Element {
    pub fn new(t_exp: i64, word: &Word) -> Self {
        Self {
            t_exp,
            word: word.free_reduce(),
        }
    }

    pub fn identity() -> Self {
        Self::new(0, &Word::empty())
    }

    /// Componentwise product; `t` is central.
    pub fn multiply(&self, other: &ZF2Element) -> ZF2Element {
        ZF2Element::new(self.t_exp + other.t_exp, &self.word.multiply(&other.word))
    }
}

/// Evaluates `w(ta, b)`: the image of a word in the generators of `K`.
pub fn eval_k_word(w: &Word) -> Result<ZF2Element> {
    check_alphabet(w)?;
    Ok(ZF2Element::new(w.exponent_sum("a"), w))
}

fn check_alphabet(w: &Word) -> Result<()> {
    match w
        .letters()
        .iter()
        .find(|l| !ALPHABET.contains(&&*l.generator))
    {
        Some(l) => Err(Error::UnknownVertex(l.generator.to_string())),
        None => Ok(()),
    }
}

/// Whether a word over `a, b` (an element of `H`) also lies in `K`.
pub fn in_intersection(w: &Word) -> Result<bool> {
    Ok(eval_k_word(w)?.t_exp == 0)
}

/// Every nontrivial reduced word of length at most `max_len` lying in
/// `H ∩ K`, shortest first, then lexicographically.
pub fn intersection_ball(max_len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = reduced_words(max_len)
        .into_iter()
        .filter(|w| !w.is_empty())
        .filter(|w| in_intersection(w).expect("words are over a, b"))
        .collect();
    out.sort_by(|u, v| u.len().cmp(&v.len()).then_with(|| u.cmp(v)));
    out
}

/// All freely reduced words over `a, b` of length at most `max_len`.
pub fn reduced_words(max_len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = ALPHABET
        .iter()
        .flat_map(|g| [Letter::pos(*g), Letter::neg(*g)])
        .collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * 3);
        for prefix in &layer {
            for letter in &letters {
                if prefix.last() == Some(&letter.inverse()) {
                    continue;
                }
                let mut word = prefix.clone();
                word.push(letter.clone());
                next.push(word);
            }
        }
        out.extend(next.iter().cloned().map(Word::new));
        layer = next;
    }
    out
}

/// The conjugates `a^-k b a^k` for `k = -m, ..., m`.
pub fn conjugate_generators(m: u32) -> Vec<Word> {
    let m = i64::from(m);
    (-m..=m).map(conjugate).collect()
}

fn conjugate(k: i64) -> Word {
    Word::power("a", -k)
        .multiply(&Word::power("b", 1))
        .multiply(&Word::power("a", k))
}

/// Finite evidence that `<a^-k b a^k : |k| <= m>` is a proper subgroup of
/// `H ∩ K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonFgCertificate {
    pub m: u32,
    /// `a^-(m+1) b a^(m+1)`.
    pub element: Word,
    pub generators: Vec<Word>,
    pub rank: usize,
    /// The element is rejected by the automaton; always true on a
    /// constructed certificate.
    pub not_member: bool,
}

impl Serialize for NonFgCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("NonFgCertificate", 4)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("rank", &self.rank)?;
        s.serialize_field("element", &self.element.to_string())?;
        s.serialize_field(
            "verdict",
            if self.not_member {
                "not_member"
            } else {
                "member"
            },
        )?;
        s.end()
    }
}

/// Builds and checks the certificate for bound `m`.
pub fn certify_not_fg(m: u32) -> Result<NonFgCertificate> {
    let fail = |reason: String| Error::Certificate { m, reason };
    let generators = conjugate_generators(m);
    let automaton = StallingsGraph::from_generators(&generators, ALPHABET)?;

    if let Some(g) = generators.iter().find(|g| !automaton.member(g)) {
        return Err(fail(format!(
            "generator `{g}` is rejected by its own automaton"
        )));
    }
    let rank = automaton.rank();
    if rank != 2 * m as usize + 1 {
        return Err(fail(format!("rank is {rank}, expected {}", 2 * m + 1)));
    }
    let element = conjugate(i64::from(m) + 1);
    if !in_intersection(&element)? {
        return Err(fail(format!("`{element}` is not in the intersection")));
    }
    if automaton.member(&element) {
        return Err(fail(format!("`{element}` is accepted by the automaton")));
    }
    Ok(NonFgCertificate {
        m,
        element,
        generators,
        rank,
        not_member: true,
    })
}
