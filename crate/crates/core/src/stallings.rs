//! Stallings automata for finitely generated subgroups of free groups.
//!
//! A subgroup `H = <w_1, ..., w_k>` of the free group on an alphabet is
//! represented by its folded core graph: start from a bouquet of loops at a
//! base state, one loop spelling each generator, identify the targets of
//! equally labeled edges leaving (or entering) a common state until the
//! automaton is deterministic, then prune hanging trees. A reduced word lies
//! in `H` iff it reads a closed path at the base.
//!
//! Every constructor returns states renumbered by breadth-first search from
//! the base (state 0), visiting labels in the order `a, a^-1, b, b^-1, ...`.
//! Two automata for the same subgroup are therefore structurally equal.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::words::{Letter, Sign, Word};

/// Labels are `2 * generator index + (1 if inverse)`.
type Label = usize;

#[inline]
fn inverse(label: Label) -> Label {
    label ^ 1
}

/// A folded, cored automaton representing a subgroup of a free group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StallingsGraph {
    alphabet: Vec<String>,
    /// `transitions[state][label]`; the base is state 0.
    transitions: Vec<Vec<Option<usize>>>,
}

/// Union-find over states plus per-representative outgoing edges, merging
/// states until no two equally labeled edges leave a common state.
struct Folder {
    parent: Vec<usize>,
    size: Vec<usize>,
    out: Vec<BTreeMap<Label, usize>>,
    pending: Vec<(usize, usize)>,
}

impl Folder {
    fn new() -> Self {
        Self {
            parent: Vec::new(),
            size: Vec::new(),
            out: Vec::new(),
            pending: Vec::new(),
        }
    }

    fn add_state(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        self.size.push(1);
        self.out.push(BTreeMap::new());
        id
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn link(&mut self, from: usize, label: Label, to: usize) {
        let from = self.find(from);
        match self.out[from].get(&label).copied() {
            Some(existing) => {
                if self.find(existing) != self.find(to) {
                    self.pending.push((existing, to));
                }
            }
            None => {
                self.out[from].insert(label, to);
            }
        }
    }

    fn add_edge(&mut self, from: usize, label: Label, to: usize) {
        self.link(from, label, to);
        self.link(to, inverse(label), from);
    }

    fn fold(&mut self) {
        while let Some((a, b)) = self.pending.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (root, child) = if self.size[a] >= self.size[b] {
                (a, b)
            } else {
                (b, a)
            };
            self.parent[child] = root;
            self.size[root] += self.size[child];
            for (label, target) in std::mem::take(&mut self.out[child]) {
                self.link(root, label, target);
            }
        }
    }

    /// Resolved adjacency of the representatives, keyed by representative.
    fn into_adjacency(mut self) -> HashMap<usize, BTreeMap<Label, usize>> {
        let mut adjacency = HashMap::new();
        for state in 0..self.parent.len() {
            if self.find(state) != state {
                continue;
            }
            let edges: Vec<(Label, usize)> =
                self.out[state].iter().map(|(&l, &t)| (l, t)).collect();
            let resolved = edges.into_iter().map(|(l, t)| (l, self.find(t))).collect();
            adjacency.insert(state, resolved);
        }
        adjacency
    }
}

/// Prunes non-base states of degree at most one, then renumbers the states
/// reachable from the base in breadth-first order.
fn finish(
    alphabet: Vec<String>,
    base: usize,
    mut adjacency: HashMap<usize, BTreeMap<Label, usize>>,
) -> StallingsGraph {
    let mut queue: Vec<usize> = adjacency
        .iter()
        .filter(|(&s, e)| s != base && e.len() <= 1)
        .map(|(&s, _)| s)
        .collect();
    while let Some(state) = queue.pop() {
        let Some(edges) = adjacency.remove(&state) else {
            continue;
        };
        for (label, target) in edges {
            if let Some(target_edges) = adjacency.get_mut(&target) {
                target_edges.remove(&inverse(label));
                if target != base && target_edges.len() <= 1 {
                    queue.push(target);
                }
            }
        }
    }

    let labels = 2 * alphabet.len();
    let mut id = HashMap::from([(base, 0usize)]);
    let mut order = vec![base];
    let mut frontier = VecDeque::from([base]);
    while let Some(state) = frontier.pop_front() {
        for &target in adjacency[&state].values() {
            if let std::collections::hash_map::Entry::Vacant(e) = id.entry(target) {
                e.insert(order.len());
                order.push(target);
                frontier.push_back(target);
            }
        }
    }
    let transitions = order
        .iter()
        .map(|s| {
            let mut row = vec![None; labels];
            for (&label, target) in &adjacency[s] {
                row[label] = Some(id[target]);
            }
            row
        })
        .collect();
    StallingsGraph {
        alphabet,
        transitions,
    }
}

fn normalize_alphabet<S: AsRef<str>>(alphabet: impl IntoIterator<Item = S>) -> Vec<String> {
    let set: BTreeSet<String> = alphabet
        .into_iter()
        .map(|a| a.as_ref().to_string())
        .collect();
    set.into_iter().collect()
}

impl StallingsGraph {
    /// The automaton of the subgroup generated by `generators`, which need
    /// not be reduced.
    pub fn from_generators<'a>(
        generators: &[Word],
        alphabet: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self> {
        let alphabet = normalize_alphabet(alphabet);
        let mut folder = Folder::new();
        let base = folder.add_state();
        for word in generators {
            let labels = encode(word, &alphabet)?;
            let Some((last, init)) = labels.split_last() else {
                continue;
            };
            let mut state = base;
            for &label in init {
                let next = folder.add_state();
                folder.add_edge(state, label, next);
                state = next;
            }
            folder.add_edge(state, *last, base);
        }
        folder.fold();
        let base = folder.find(base);
        Ok(finish(alphabet, base, folder.into_adjacency()))
    }

    /// The whole free group on `alphabet`.
    pub fn full<'a>(alphabet: impl IntoIterator<Item = &'a str>) -> Self {
        let alphabet = normalize_alphabet(alphabet);
        let generators: Vec<Word> = alphabet.iter().map(|a| Word::power(a, 1)).collect();
        Self::from_generators(&generators, alphabet.iter().map(String::as_str))
            .expect("generators are over the alphabet")
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn base(&self) -> usize {
        0
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    /// Number of (positively labeled) edges.
    pub fn edge_count(&self) -> usize {
        self.transitions
            .iter()
            .map(|row| row.iter().step_by(2).filter(|t| t.is_some()).count())
            .sum()
    }

    /// Edges `(from, generator, to)` in state order, then alphabet order.
    pub fn edges(&self) -> Vec<(usize, &str, usize)> {
        let mut out = Vec::new();
        for (from, row) in self.transitions.iter().enumerate() {
            for (g, name) in self.alphabet.iter().enumerate() {
                if let Some(to) = row[2 * g] {
                    out.push((from, name.as_str(), to));
                }
            }
        }
        out
    }

    /// Target of reading `letter` at `state`.
    pub fn step(&self, state: usize, letter: &Letter) -> Option<usize> {
        let g = self
            .alphabet
            .binary_search_by(|a| a.as_str().cmp(&letter.generator))
            .ok()?;
        self.transitions[state][2 * g + (letter.sign == Sign::Neg) as usize]
    }

    /// Rank of the represented free subgroup: edges - states + 1.
    pub fn rank(&self) -> usize {
        self.edge_count() + 1 - self.state_count()
    }

    /// Whether `w` lies in the subgroup.
    pub fn member(&self, w: &Word) -> bool {
        // Free reduction on the fly: `path` holds the letters read inside the
        // automaton with the state before each, `off` the reduced suffix that
        // left it.
        let mut path: Vec<(usize, &Letter)> = Vec::new();
        let mut off: Vec<&Letter> = Vec::new();
        let mut state = 0;
        let cancels = |x: &Letter, y: &Letter| x.generator == y.generator && x.sign != y.sign;
        for letter in w.letters() {
            if let Some(&top) = off.last() {
                if cancels(top, letter) {
                    off.pop();
                } else {
                    off.push(letter);
                }
                continue;
            }
            if let Some(&(before, top)) = path.last() {
                if cancels(top, letter) {
                    state = before;
                    path.pop();
                    continue;
                }
            }
            match self.step(state, letter) {
                Some(next) => {
                    path.push((state, letter));
                    state = next;
                }
                None => off.push(letter),
            }
        }
        off.is_empty() && state == 0
    }

    /// Same automaton over a larger alphabet.
    pub fn with_alphabet<'a>(&self, extra: impl IntoIterator<Item = &'a str>) -> Self {
        let alphabet = normalize_alphabet(
            self.alphabet
                .iter()
                .cloned()
                .chain(extra.into_iter().map(str::to_string)),
        );
        let mut folder = Folder::new();
        for _ in 0..self.state_count() {
            folder.add_state();
        }
        for (from, g, to) in self.edges() {
            let idx = alphabet.binary_search_by(|a| a.as_str().cmp(g)).unwrap();
            folder.add_edge(from, 2 * idx, to);
        }
        folder.fold();
        let base = folder.find(0);
        finish(alphabet, base, folder.into_adjacency())
    }

    /// The automaton of the intersection of the two subgroups: the core of
    /// the product automaton at the pair of bases.
    pub fn intersect(&self, other: &StallingsGraph) -> Result<Self> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.clone(),
                right: other.alphabet.clone(),
            });
        }
        let mut id: HashMap<(usize, usize), usize> = HashMap::from([((0, 0), 0)]);
        let mut pairs = vec![(0usize, 0usize)];
        let mut adjacency: HashMap<usize, BTreeMap<Label, usize>> = HashMap::new();
        let mut next = 0;
        while next < pairs.len() {
            let (p, q) = pairs[next];
            let mut edges = BTreeMap::new();
            for label in 0..2 * self.alphabet.len() {
                if let (Some(p2), Some(q2)) =
                    (self.transitions[p][label], other.transitions[q][label])
                {
                    let target = *id.entry((p2, q2)).or_insert_with(|| {
                        pairs.push((p2, q2));
                        pairs.len() - 1
                    });
                    edges.insert(label, target);
                }
            }
            adjacency.insert(next, edges);
            next += 1;
        }
        Ok(finish(self.alphabet.clone(), 0, adjacency))
    }

    /// Text serialization: the base state on the first line, then one
    /// `from generator to` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::from("0\n");
        for (from, g, to) in self.edges() {
            let _ = writeln!(out, "{from} {g} {to}");
        }
        out
    }

    /// Reads the text serialization. State names are arbitrary tokens; the
    /// input is folded and cored, so any automaton for the subgroup works.
    /// The alphabet is the set of labels used plus `extra_alphabet`.
    pub fn parse<'a>(
        input: &str,
        extra_alphabet: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self> {
        let mut lines = input
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let Some((_, base)) = lines.next() else {
            return Err(Error::parse(1, "missing base state"));
        };
        if base.split_whitespace().count() != 1 {
            return Err(Error::parse(
                1,
                "the first line must hold only the base state",
            ));
        }
        let mut edges = Vec::new();
        for (line, body) in lines {
            match body.split_whitespace().collect::<Vec<_>>().as_slice() {
                [from, g, to] => edges.push((*from, *g, *to)),
                tokens => {
                    return Err(Error::parse(
                        line,
                        format!(
                            "expected `from generator to`, found {} tokens",
                            tokens.len()
                        ),
                    ))
                }
            }
        }
        let alphabet = normalize_alphabet(
            edges
                .iter()
                .map(|e| e.1.to_string())
                .chain(extra_alphabet.into_iter().map(str::to_string)),
        );
        let mut folder = Folder::new();
        let mut states: HashMap<&str, usize> = HashMap::new();
        for name in std::iter::once(base).chain(edges.iter().flat_map(|e| [e.0, e.2])) {
            states.entry(name).or_insert_with(|| folder.add_state());
        }
        for (from, g, to) in &edges {
            let idx = alphabet.binary_search_by(|a| a.as_str().cmp(g)).unwrap();
            folder.add_edge(states[from], 2 * idx, states[to]);
        }
        folder.fold();
        let base_id = folder.find(states[base]);
        Ok(finish(alphabet, base_id, folder.into_adjacency()))
    }

    /// Graphviz rendering; the base is drawn as a double circle.
    pub fn to_dot(&self) -> String {
        let mut out =
            String::from("digraph stallings {\n  rankdir=LR;\n  0 [shape=doublecircle];\n");
        for (from, g, to) in self.edges() {
            let _ = writeln!(out, "  {from} -> {to} [label=\"{g}\"];");
        }
        out.push_str("}\n");
        out
    }
}

fn encode(word: &Word, alphabet: &[String]) -> Result<Vec<Label>> {
    word.free_reduce()
        .letters()
        .iter()
        .map(|l| {
            alphabet
                .binary_search_by(|a| a.as_str().cmp(&l.generator))
                .map(|g| 2 * g + (l.sign == Sign::Neg) as usize)
                .map_err(|_| Error::UnknownVertex(l.generator.to_string()))
        })
        .collect()
}
