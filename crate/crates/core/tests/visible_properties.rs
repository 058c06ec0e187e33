mod common;

use std::collections::HashSet;

use common::{random_word_over, vertex_subsets};
use pcgroup::graph::default_names;
use pcgroup::{are_equal, normal_form, NormalWord, SimpleGraph, VertexRestriction, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Normal forms of all products of at most `max_len` letters over `ys`.
fn visible_ball(g: &SimpleGraph, ys: &[String], max_len: usize) -> HashSet<NormalWord> {
    let letters: Vec<Word> = ys
        .iter()
        .flat_map(|y| [Word::power(y, 1), Word::power(y, -1)])
        .collect();
    let mut all = HashSet::from([NormalWord::default()]);
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in &letters {
                let p = w.multiply(l);
                if all.insert(normal_form(&p, g).unwrap()) {
                    next.push(p);
                }
            }
        }
        layer = next;
    }
    all
}

#[test]
fn membership_agrees_with_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=4 {
        let bound = if n < 4 { 6 } else { 4 };
        for g in SimpleGraph::all_labeled(n) {
            // Y = all vertices is trivially the whole group.
            for ys in vertex_subsets(&g).into_iter().filter(|s| s.len() < n) {
                let ys: Vec<String> = ys.into_iter().collect();
                let r = VertexRestriction::new(g.clone(), ys.iter().map(String::as_str)).unwrap();
                let ball = visible_ball(&g, &ys, bound);
                for _ in 0..20 {
                    let w = random_word_over(&mut rng, g.vertices(), 8);
                    let nf = normal_form(&w, &g).unwrap();
                    if nf.len() > bound / 2 {
                        continue;
                    }
                    assert_eq!(
                        r.is_in_visible(&w).unwrap(),
                        ball.contains(&nf),
                        "{g:?} {ys:?} {w}"
                    );
                }
                // Every enumerated element is recognized.
                for nf in ball.iter().take(50) {
                    assert!(r.is_in_visible(nf.as_word()).unwrap());
                }
            }
        }
    }
}

#[test]
fn conjugate_by_commuting_generator() {
    let g = SimpleGraph::new(["x", "y"], [("x", "y")]).unwrap();
    let ball = visible_ball(&g, &["y".to_string()], 6);
    let w = Word::parse("x y x^-1").unwrap();
    assert!(ball.contains(&normal_form(&w, &g).unwrap()));
    let r = VertexRestriction::new(g, ["y"]).unwrap();
    assert!(r.is_in_visible(&w).unwrap());
}

#[test]
fn alpha_is_injective_and_visible() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in SimpleGraph::all_labeled(4) {
        for ys in vertex_subsets(&g).into_iter().filter(|s| !s.is_empty()) {
            let ys: Vec<String> = ys.into_iter().collect();
            let r = VertexRestriction::new(g.clone(), ys.iter().map(String::as_str)).unwrap();
            for _ in 0..5 {
                let u = random_word_over(&mut rng, &ys, 6);
                let v = random_word_over(&mut rng, &ys, 6);
                let (au, av) = (r.alpha_include(&u).unwrap(), r.alpha_include(&v).unwrap());
                assert_eq!(
                    are_equal(&u, &v, r.induced()).unwrap(),
                    are_equal(&au, &av, &g).unwrap()
                );
                assert!(r.is_in_visible(&au).unwrap());
                // rho is a homomorphism.
                let x = random_word_over(&mut rng, g.vertices(), 6);
                let y = random_word_over(&mut rng, g.vertices(), 6);
                assert!(are_equal(
                    &r.rho_retract(&x.multiply(&y)),
                    &r.rho_retract(&x).multiply(&r.rho_retract(&y)),
                    r.induced()
                )
                .unwrap());
            }
        }
    }
}

#[test]
fn alpha_after_rho_moves_outside_generators() {
    let names = default_names(4);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in SimpleGraph::all_labeled(4) {
        for ys in vertex_subsets(&g) {
            if ys.len() == names.len() {
                continue;
            }
            let r = VertexRestriction::new(g.clone(), ys.iter().map(String::as_str)).unwrap();
            let outside = names.iter().find(|n| !ys.contains(*n)).unwrap();
            let w = Word::power(outside, rng.gen_range(1..3));
            let back = r.alpha_include(&r.rho_retract(&w)).unwrap();
            assert!(!are_equal(&back, &w, &g).unwrap());
        }
    }
}
