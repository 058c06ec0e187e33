//! Finite simple graphs, the combinatorial side of partially commutative groups.
//!
//! A [`SimpleGraph`] is a finite set of named vertices together with a
//! symmetric, irreflexive adjacency relation. Each graph presents one
//! PC-group: generators are the vertices, and two generators commute exactly
//! when their vertices are adjacent.
//!
//! Vertex names are opaque strings ordered lexicographically. Internally the
//! vertices are kept sorted, so vertex indices follow the same order and every
//! "least witness" guarantee in this module is with respect to it.

mod clique;
mod embedding;
mod text;

pub use embedding::{find_induced_embedding, InducedEmbedding};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite simple graph with named vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    names: Vec<String>,
    // Row-major n x n adjacency matrix; symmetric with a false diagonal.
    matrix: Vec<bool>,
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("vertices", &self.names)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Default for SimpleGraph {
    fn default() -> Self {
        Self::empty()
    }
}

impl SimpleGraph {
    /// Builds a graph from vertex names and edges.
    ///
    /// Duplicate edges are merged. Fails on duplicate vertex names, edges that
    /// mention an unknown vertex, and self-loops.
    pub fn new<V, S, E, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        let mut graph = Self::edgeless_sorted(names);
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let i = graph.require(u)?;
            let j = graph.require(v)?;
            if i == j {
                return Err(Error::SelfLoop(u.to_string()));
            }
            graph.set_edge(i, j);
        }
        Ok(graph)
    }

    /// The graph with no vertices. It presents the trivial group.
    pub fn empty() -> Self {
        Self {
            names: Vec::new(),
            matrix: Vec::new(),
        }
    }

    /// Edgeless graph on the given names; presents a free group.
    pub fn edgeless<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(names, std::iter::empty::<(&str, &str)>())
    }

    /// Complete graph on the given names; presents a free-abelian group.
    pub fn complete<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut graph = Self::edgeless(names)?;
        let n = graph.vertex_count();
        for i in 0..n {
            for j in i + 1..n {
                graph.set_edge(i, j);
            }
        }
        Ok(graph)
    }

    /// Path visiting the names in the given order.
    pub fn path<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let edges: Vec<(String, String)> = names
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        Self::new(names, edges)
    }

    /// Cycle visiting the names in the given order. Needs at least three names.
    pub fn cycle<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut edges: Vec<(String, String)> = names
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        if names.len() >= 3 {
            edges.push((names[names.len() - 1].clone(), names[0].clone()));
        }
        Self::new(names, edges)
    }

    /// Labeled graph on `names` (which must be sorted and distinct) whose
    /// edge set is selected by the bits of `mask`, pairs `(i, j)` with `i < j`
    /// taken in lexicographic order.
    pub fn from_edge_mask(names: &[String], mask: u64) -> Self {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        let mut graph = Self::edgeless_sorted(names.to_vec());
        let n = names.len();
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    graph.set_edge(i, j);
                }
                bit += 1;
            }
        }
        graph
    }

    /// Every labeled graph on the vertices `a, b, c, ...` (at most 11 of them).
    pub fn all_labeled(n: usize) -> impl Iterator<Item = SimpleGraph> {
        assert!(n <= 11, "too many labeled graphs to enumerate");
        let names = default_names(n);
        let pairs = n * n.saturating_sub(1) / 2;
        (0..1u64 << pairs).map(move |mask| Self::from_edge_mask(&names, mask))
    }

    fn edgeless_sorted(names: Vec<String>) -> Self {
        let n = names.len();
        Self {
            names,
            matrix: vec![false; n * n],
        }
    }

    fn set_edge(&mut self, i: usize, j: usize) {
        let n = self.names.len();
        self.matrix[i * n + j] = true;
        self.matrix[j * n + i] = true;
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.matrix.iter().filter(|&&b| b).count() / 2
    }

    /// Vertex names in increasing order.
    pub fn vertices(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn contains_vertex(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// Adjacency by vertex index.
    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.matrix[i * self.names.len() + j]
    }

    /// Adjacency by vertex name; unknown names are never adjacent.
    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adjacent(i, j),
            _ => false,
        }
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.names.len()).filter(move |&j| self.adjacent(i, j))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).count()
    }

    /// Edges as name pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(&str, &str)> {
        let n = self.names.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adjacent(i, j) {
                    out.push((self.names[i].as_str(), self.names[j].as_str()));
                }
            }
        }
        out
    }

    /// The full subgraph spanned by `ys`: exactly the edges of `self` with
    /// both ends in `ys`.
    pub fn induced_subgraph<'a>(&self, ys: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut idx = BTreeSet::new();
        for y in ys {
            idx.insert(self.require(y)?);
        }
        Ok(self.induced_by_indices(&idx.into_iter().collect::<Vec<_>>()))
    }

    /// Full subgraph on the given sorted, distinct indices.
    pub(crate) fn induced_by_indices(&self, idx: &[usize]) -> Self {
        let mut graph = Self::edgeless_sorted(idx.iter().map(|&i| self.names[i].clone()).collect());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                if self.adjacent(i, j) {
                    graph.set_edge(a, b);
                }
            }
        }
        graph
    }

    /// Connected components, each sorted, ordered by their least vertex.
    pub fn connected_components(&self) -> Vec<Vec<String>> {
        self.component_indices()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.names[i].clone()).collect())
            .collect()
    }

    fn component_indices(&self) -> Vec<Vec<usize>> {
        let n = self.names.len();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut component = Vec::new();
            while let Some(v) = stack.pop() {
                component.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// Lexicographically least triple `(x, y, z)` spanning an induced path
    /// `x - y - z` (so `x` and `z` are not adjacent), if any.
    pub fn find_induced_p3(&self) -> Option<[String; 3]> {
        let n = self.names.len();
        for x in 0..n {
            for y in self.neighbors(x) {
                for z in self.neighbors(y) {
                    if z != x && !self.adjacent(x, z) {
                        return Some([
                            self.names[x].clone(),
                            self.names[y].clone(),
                            self.names[z].clone(),
                        ]);
                    }
                }
            }
        }
        None
    }

    /// Whether adjacency together with the identity relation is transitive.
    pub fn reflexive_closure_is_transitive(&self) -> bool {
        let n = self.names.len();
        let related = |i: usize, j: usize| i == j || self.adjacent(i, j);
        (0..n).all(|x| {
            (0..n).all(|y| !related(x, y) || (0..n).all(|z| !related(y, z) || related(x, z)))
        })
    }

    /// If every connected component is complete, the component sizes in
    /// descending order. These are the ranks of the free-abelian factors of
    /// the free product the graph presents.
    pub fn complete_decomposition(&self) -> Option<Vec<usize>> {
        let mut sizes = Vec::new();
        for component in self.component_indices() {
            let complete = component
                .iter()
                .enumerate()
                .all(|(a, &i)| component[a + 1..].iter().all(|&j| self.adjacent(i, j)));
            if !complete {
                return None;
            }
            sizes.push(component.len());
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Some(sizes)
    }

    /// Disjoint union; presents the free product. Vertex names must not clash
    /// (use [`SimpleGraph::rename`] first).
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<Self> {
        let names = self.names.iter().chain(&other.names).cloned();
        let edges = self.edges().into_iter().chain(other.edges());
        Self::new(names, edges)
    }

    /// Join: disjoint union plus every edge between the two sides; presents
    /// the direct product.
    pub fn join(&self, other: &SimpleGraph) -> Result<Self> {
        let union = self.disjoint_union(other)?;
        let cross: Vec<(&str, &str)> = self
            .names
            .iter()
            .flat_map(|u| other.names.iter().map(move |v| (u.as_str(), v.as_str())))
            .collect();
        let edges = union.edges().into_iter().chain(cross);
        Self::new(union.names.iter().cloned(), edges)
    }

    /// Relabels every vertex through `f`. Fails if two vertices collide.
    pub fn rename(&self, mut f: impl FnMut(&str) -> String) -> Result<Self> {
        let renamed: Vec<String> = self.names.iter().map(|n| f(n)).collect();
        let edges: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let i = self.index_of(u).unwrap();
                let j = self.index_of(v).unwrap();
                (renamed[i].clone(), renamed[j].clone())
            })
            .collect();
        Self::new(renamed, edges)
    }

    /// Prefixes every vertex name.
    pub fn with_prefix(&self, prefix: &str) -> Self {
        self.rename(|n| format!("{prefix}{n}"))
            .expect("prefixing preserves distinctness")
    }

    /// Size of a largest complete subgraph (0 for the empty graph).
    pub fn clique_number(&self) -> usize {
        clique::clique_number(self)
    }
}

/// Vertex names `a, b, c, ...` for small generated graphs.
pub fn default_names(n: usize) -> Vec<String> {
    assert!(n <= 26);
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}
