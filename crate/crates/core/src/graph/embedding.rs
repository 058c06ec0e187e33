//! Induced (full) subgraph search by backtracking.

use super::SimpleGraph;

/// An injective map from pattern vertices to host vertices preserving both
/// edges and non-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedEmbedding {
    /// `(pattern vertex, host vertex)` pairs, ordered by pattern vertex.
    mapping: Vec<(String, String)>,
}

impl InducedEmbedding {
    pub fn pairs(&self) -> &[(String, String)] {
        &self.mapping
    }

    pub fn get(&self, pattern_vertex: &str) -> Option<&str> {
        self.mapping
            .iter()
            .find(|(p, _)| p == pattern_vertex)
            .map(|(_, h)| h.as_str())
    }

    /// Host vertices hit by the embedding, in pattern order.
    pub fn image(&self) -> impl Iterator<Item = &str> {
        self.mapping.iter().map(|(_, h)| h.as_str())
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }
}

/// Finds an embedding of `pattern` as a full subgraph of `host`.
///
/// Pattern vertices are assigned in increasing order and host candidates are
/// tried in increasing order, so the returned embedding is the least one in
/// that order.
pub fn find_induced_embedding(
    pattern: &SimpleGraph,
    host: &SimpleGraph,
) -> Option<InducedEmbedding> {
    let p = pattern.vertex_count();
    if p > host.vertex_count() {
        return None;
    }
    let pattern_degree: Vec<usize> = (0..p).map(|v| pattern.degree(v)).collect();
    let host_degree: Vec<usize> = (0..host.vertex_count()).map(|v| host.degree(v)).collect();

    let mut assigned = Vec::with_capacity(p);
    let mut used = vec![false; host.vertex_count()];
    if !extend(
        pattern,
        host,
        &pattern_degree,
        &host_degree,
        &mut assigned,
        &mut used,
    ) {
        return None;
    }
    let mapping = assigned
        .iter()
        .enumerate()
        .map(|(v, &h)| (pattern.vertex(v).to_string(), host.vertex(h).to_string()))
        .collect();
    Some(InducedEmbedding { mapping })
}

fn extend(
    pattern: &SimpleGraph,
    host: &SimpleGraph,
    pattern_degree: &[usize],
    host_degree: &[usize],
    assigned: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let v = assigned.len();
    if v == pattern.vertex_count() {
        return true;
    }
    for h in 0..host.vertex_count() {
        if used[h] || host_degree[h] < pattern_degree[v] {
            continue;
        }
        let consistent = assigned
            .iter()
            .enumerate()
            .all(|(u, &hu)| pattern.adjacent(u, v) == host.adjacent(hu, h));
        if !consistent {
            continue;
        }
        assigned.push(h);
        used[h] = true;
        if extend(pattern, host, pattern_degree, host_degree, assigned, used) {
            return true;
        }
        used[h] = false;
        assigned.pop();
    }
    false
}
