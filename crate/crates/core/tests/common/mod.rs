//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the normal-form, clique, P3 or folding code it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use pcgroup::{Letter, Sign, SimpleGraph, Word};
use rand::Rng;

/// Letter code: `2 * vertex index + (1 if inverse)`.
pub type Code = u8;

pub fn to_word(codes: &[Code], g: &SimpleGraph) -> Word {
    codes
        .iter()
        .map(|&c| {
            let name = g.vertex((c >> 1) as usize);
            Letter::new(name, if c & 1 == 1 { Sign::Neg } else { Sign::Pos })
        })
        .collect()
}

pub fn to_codes(w: &Word, g: &SimpleGraph) -> Vec<Code> {
    w.letters()
        .iter()
        .map(|l| 2 * g.index_of(&l.generator).unwrap() as Code + (l.sign == Sign::Neg) as Code)
        .collect()
}

/// Closes `w` under deleting an adjacent `x^e x^-e` and swapping adjacent
/// letters on distinct commuting generators, and returns the least (by
/// length, then lexicographically) word reached.
pub fn bfs_canonical(w: &[Code], g: &SimpleGraph) -> Vec<Code> {
    let mut seen: HashSet<Vec<Code>> = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    let mut best = w.to_vec();
    while let Some(cur) = queue.pop_front() {
        if (cur.len(), &cur) < (best.len(), &best) {
            best = cur.clone();
        }
        for i in 0..cur.len().saturating_sub(1) {
            let (x, y) = (cur[i], cur[i + 1]);
            let mut next = None;
            if x ^ 1 == y {
                let mut shorter = cur.clone();
                shorter.drain(i..i + 2);
                next = Some(shorter);
            } else if x >> 1 != y >> 1 && g.adjacent((x >> 1) as usize, (y >> 1) as usize) {
                let mut swapped = cur.clone();
                swapped.swap(i, i + 1);
                next = Some(swapped);
            }
            if let Some(next) = next {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    best
}

/// Every word of length at most `max_len` over the signed generators of a
/// graph with `n` vertices.
pub fn all_words(n: usize, max_len: usize) -> Vec<Vec<Code>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for c in 0..2 * n as Code {
                let mut w2: Vec<Code> = w.clone();
                w2.push(c);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn random_codes(rng: &mut impl Rng, n: usize, max_len: usize) -> Vec<Code> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..2 * n) as Code).collect()
}

pub fn random_word_over(rng: &mut impl Rng, gens: &[String], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let g = gens[rng.gen_range(0..gens.len())].as_str();
            Letter::new(g, if rng.gen() { Sign::Neg } else { Sign::Pos })
        })
        .collect()
}

/// Adjacency bitmasks of a graph with at most 32 vertices.
pub fn adjacency_masks(g: &SimpleGraph) -> Vec<u32> {
    let n = g.vertex_count();
    (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| g.adjacent(i, j))
                .fold(0, |m, j| m | 1 << j)
        })
        .collect()
}

/// Clique number by checking every vertex subset.
pub fn brute_clique_number(adj: &[u32]) -> usize {
    let n = adj.len();
    let mut is_clique = vec![false; 1 << n];
    is_clique[0] = true;
    let mut best = 0;
    for s in 1usize..1 << n {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        is_clique[s] = is_clique[rest] && (rest as u32) & !adj[low] == 0;
        if is_clique[s] {
            best = best.max(s.count_ones() as usize);
        }
    }
    best
}

/// Least induced P3 triple by plain triple enumeration.
pub fn brute_p3(g: &SimpleGraph) -> Option<(usize, usize, usize)> {
    let n = g.vertex_count();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if x != y
                    && y != z
                    && x != z
                    && g.adjacent(x, y)
                    && g.adjacent(y, z)
                    && !g.adjacent(x, z)
                {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Free reduction over signed letters `(generator, inverse?)`, by a stack.
pub fn stack_reduce(w: &Word) -> Vec<(String, bool)> {
    let mut out: Vec<(String, bool)> = Vec::new();
    for l in w.letters() {
        let letter = (l.generator.to_string(), l.sign == Sign::Neg);
        match out.last() {
            Some((g, neg)) if *g == letter.0 && *neg != letter.1 => {
                out.pop();
            }
            _ => out.push(letter),
        }
    }
    out
}

/// Reduced forms of all products of at most `max_factors` generators and
/// inverses.
pub fn subgroup_ball(gens: &[Word], max_factors: usize) -> HashSet<Vec<(String, bool)>> {
    let factors: Vec<Word> = gens.iter().flat_map(|g| [g.clone(), g.inverse()]).collect();
    let mut all: HashSet<Vec<(String, bool)>> = HashSet::from([vec![]]);
    let mut layer: Vec<Vec<(String, bool)>> = vec![vec![]];
    for _ in 0..max_factors {
        let mut next = Vec::new();
        for elem in &layer {
            let prefix: Word = elem
                .iter()
                .map(|(g, neg)| Letter::new(g.as_str(), if *neg { Sign::Neg } else { Sign::Pos }))
                .collect();
            for f in &factors {
                let r = stack_reduce(&prefix.multiply(f));
                if all.insert(r.clone()) {
                    next.push(r);
                }
            }
        }
        layer = next;
    }
    all
}

/// All reduced words over `alphabet` of length at most `max_len`.
pub fn reduced_words(alphabet: &[&str], max_len: usize) -> Vec<Word> {
    let letters: Vec<(String, bool)> = alphabet
        .iter()
        .flat_map(|g| [(g.to_string(), false), (g.to_string(), true)])
        .collect();
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<(String, bool)>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in &letters {
                if let Some(last) = w.last() {
                    if last.0 == l.0 && last.1 != l.1 {
                        continue;
                    }
                }
                let mut w2 = w.clone();
                w2.push(l.clone());
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.into_iter()
        .map(|w| {
            w.into_iter()
                .map(|(g, neg)| Letter::new(g.as_str(), if neg { Sign::Neg } else { Sign::Pos }))
                .collect()
        })
        .collect()
}

pub fn vertex_subsets(g: &SimpleGraph) -> Vec<BTreeSet<String>> {
    let n = g.vertex_count();
    (0u32..1 << n)
        .map(|s| {
            (0..n)
                .filter(|&i| s >> i & 1 == 1)
                .map(|i| g.vertex(i).to_string())
                .collect()
        })
        .collect()
}
