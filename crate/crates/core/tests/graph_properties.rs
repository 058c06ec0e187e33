mod common;

use common::{adjacency_masks, brute_clique_number, brute_p3};
use pcgroup::graph::default_names;
use pcgroup::{find_induced_embedding, SimpleGraph};
use proptest::prelude::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_n, any::<u64>())
        .prop_map(|(n, mask)| SimpleGraph::from_edge_mask(&default_names(n), mask))
}

#[test]
fn lemma_conditions_agree_up_to_six_vertices() {
    let mut count = 0;
    for n in 0..=6 {
        for g in SimpleGraph::all_labeled(n) {
            let p3_free = g.find_induced_p3().is_none();
            assert_eq!(p3_free, g.reflexive_closure_is_transitive(), "{g:?}");
            assert_eq!(p3_free, g.complete_decomposition().is_some(), "{g:?}");
            count += 1;
        }
    }
    assert_eq!(count, 1 + 1 + 2 + 8 + 64 + 1024 + 32768);
}

#[test]
fn p3_witness_is_least_triple() {
    for n in 0..=5 {
        for g in SimpleGraph::all_labeled(n) {
            let expected = brute_p3(&g)
                .map(|(x, y, z)| [g.vertex(x), g.vertex(y), g.vertex(z)].map(str::to_string));
            assert_eq!(g.find_induced_p3(), expected);
        }
    }
}

#[test]
fn c4_witness() {
    let c4 = SimpleGraph::cycle(["a", "b", "c", "d"]).unwrap();
    assert_eq!(brute_p3(&c4), Some((0, 1, 2)));
}

#[test]
fn k2_plus_k3_is_transitive_by_triples() {
    let g = SimpleGraph::complete(["a", "b"])
        .unwrap()
        .disjoint_union(&SimpleGraph::complete(["c", "d", "e"]).unwrap())
        .unwrap();
    let n = g.vertex_count();
    let rel = |i: usize, j: usize| i == j || g.adjacent(i, j);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                assert!(!(rel(x, y) && rel(y, z)) || rel(x, z));
            }
        }
    }
    assert!(g.reflexive_closure_is_transitive());
}

#[test]
fn p3_embeds_in_c4_by_exhaustion() {
    let p3 = SimpleGraph::path(["x", "y", "z"]).unwrap();
    let c4 = SimpleGraph::cycle(["a", "b", "c", "d"]).unwrap();
    let mut found = 0;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let img = [i, j, k];
                if i == j || j == k || i == k {
                    continue;
                }
                let ok = (0..3).all(|u| {
                    (0..3).all(|v| u == v || p3.adjacent(u, v) == c4.adjacent(img[u], img[v]))
                });
                found += ok as usize;
            }
        }
    }
    assert!(found > 0);
    assert!(find_induced_embedding(&p3, &c4).is_some());
}

proptest! {
    #[test]
    fn p3_freeness_is_hereditary(g in small_graph(7), subset in any::<u32>()) {
        let ys: Vec<&str> = g.vertices().iter().enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .map(|(_, v)| v.as_str())
            .collect();
        let sub = g.induced_subgraph(ys).unwrap();
        if g.find_induced_p3().is_none() {
            prop_assert!(sub.find_induced_p3().is_none());
        }
    }

    #[test]
    fn decomposition_accounts_for_components(g in small_graph(8)) {
        if let Some(ranks) = g.complete_decomposition() {
            prop_assert_eq!(ranks.iter().sum::<usize>(), g.vertex_count());
            prop_assert_eq!(ranks.len(), g.connected_components().len());
            prop_assert!(ranks.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn components_partition_vertices(g in small_graph(8)) {
        let comps = g.connected_components();
        let mut all: Vec<String> = comps.iter().flatten().cloned().collect();
        all.sort();
        prop_assert_eq!(&all[..], g.vertices());
        let firsts: Vec<&String> = comps.iter().map(|c| &c[0]).collect();
        prop_assert!(firsts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn embeddings_are_induced(pattern in small_graph(4), host in small_graph(6)) {
        let host = host.with_prefix("h");
        if let Some(emb) = find_induced_embedding(&pattern, &host) {
            let image: Vec<&str> = emb.image().collect();
            let sub = host.induced_subgraph(image.iter().copied()).unwrap();
            prop_assert_eq!(sub.vertex_count(), pattern.vertex_count());
            for (p, h) in emb.pairs() {
                for (q, k) in emb.pairs() {
                    if p != q {
                        prop_assert_eq!(pattern.has_edge(p, q), host.has_edge(h, k));
                    }
                }
            }
        }
    }

    #[test]
    fn clique_number_of_join_and_union(g1 in small_graph(5), g2 in small_graph(5)) {
        let (l, r) = (g1.with_prefix("l"), g2.with_prefix("r"));
        let (c1, c2) = (g1.clique_number(), g2.clique_number());
        prop_assert_eq!(l.join(&r).unwrap().clique_number(), c1 + c2);
        prop_assert_eq!(l.disjoint_union(&r).unwrap().clique_number(), c1.max(c2));
        prop_assert_eq!(c1, brute_clique_number(&adjacency_masks(&g1)));
    }
}
