//! Exact maximum clique size by branch and bound.

use super::SimpleGraph;

pub(super) fn clique_number(graph: &SimpleGraph) -> usize {
    let n = graph.vertex_count();
    // Higher-degree vertices first tends to find a large clique early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(graph.degree(v)));
    let mut best = 0;
    expand(graph, 0, &order, &mut best);
    best
}

fn expand(graph: &SimpleGraph, size: usize, candidates: &[usize], best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(size);
        return;
    }
    for (i, &v) in candidates.iter().enumerate() {
        // Even taking every remaining candidate cannot beat the incumbent.
        if size + candidates.len() - i <= *best {
            return;
        }
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&w| graph.adjacent(v, w))
            .collect();
        expand(graph, size + 1, &next, best);
    }
}
