//! Property tests: the structural invariants that must hold for every
//! graph, not just the curated examples.

use proptest::prelude::*;

use stringob::drawing::{crossing_vector, layout_moment_curve, layout_random};
use stringob::graph::{Graph, PairKind, barycentric_subdivision, pair_set};
use stringob::obstruction::{build_system, finger_move_vector};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let max_edges = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), max_edges).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if mask[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).expect("mask graph is simple")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn s_pairs_are_delta_pairs(g in arb_graph(8)) {
        let delta = pair_set(&g, PairKind::Delta);
        let s = pair_set(&g, PairKind::S);
        for &(e, f) in s.pairs() {
            prop_assert!(delta.index_of(e, f).is_some());
        }
    }

    #[test]
    fn sd_pairs_are_disjoint_star_edges(g in arb_graph(7)) {
        let sd = pair_set(&g, PairKind::Sd);
        let star = sd.base();
        let sub = sd.subdivision().unwrap();
        prop_assert_eq!(star.vertex_count(), g.vertex_count() + g.edge_count());
        prop_assert_eq!(star.edge_count(), 2 * g.edge_count());
        for &(e, f) in sd.pairs() {
            prop_assert!(star.edges_disjoint(e, f));
            let (v, _) = sub.edge_origin(e);
            let (w, _) = sub.edge_origin(f);
            prop_assert!(v != w && !g.has_edge(v, w));
        }
    }

    #[test]
    fn pair_sets_are_deterministic(g in arb_graph(8)) {
        for kind in [PairKind::Delta, PairKind::S, PairKind::Sd] {
            prop_assert_eq!(pair_set(&g, kind), pair_set(&g, kind));
        }
    }

    #[test]
    fn moment_layout_is_generic_for_every_graph(g in arb_graph(9)) {
        let d = layout_moment_curve(&g);
        prop_assert!(d.validate_generic().is_empty());
    }

    #[test]
    fn crossing_parity_is_signed_mod_two(g in arb_graph(7), seed in 0u64..512) {
        let d = layout_random(&g, seed).expect("random layout settles");
        let pairs = pair_set(&g, PairKind::Delta);
        let cv = crossing_vector(&d, &pairs).expect("generic");
        for (i, &s) in cv.signed().iter().enumerate() {
            prop_assert_eq!(cv.mod2().get(i), s.rem_euclid(2) == 1);
        }
    }

    #[test]
    fn system_rows_match_single_vectors(g in arb_graph(7)) {
        let pairs = pair_set(&g, PairKind::S);
        let sys = build_system(&pairs);
        for (i, &(omega, u)) in sys.rows().iter().enumerate() {
            let v = finger_move_vector(&g, &pairs, omega, u).unwrap();
            prop_assert_eq!(sys.mod2_row(i), v);
        }
    }

    #[test]
    fn subdivision_shape(g in arb_graph(9)) {
        let sub = barycentric_subdivision(&g);
        let star = sub.star();
        prop_assert_eq!(star.vertex_count(), g.vertex_count() + g.edge_count());
        prop_assert_eq!(star.edge_count(), 2 * g.edge_count());
        for e in 0..star.edge_count() {
            let (v, alpha) = sub.edge_origin(e);
            prop_assert!(g.edge_contains(alpha, v));
        }
    }
}
