use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use szeged_core::verify::{random_connected_graph, random_tree};
use szeged_core::SimpleGraph;

fn connected(seed: u64, order: usize) -> SimpleGraph {
    random_connected_graph(&mut ChaCha8Rng::seed_from_u64(seed), order).unwrap()
}

fn tree(seed: u64, order: usize) -> SimpleGraph {
    random_tree(&mut ChaCha8Rng::seed_from_u64(seed), order).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn side_counts_are_symmetric(seed: u64, order in 2usize..14) {
        let g = connected(seed, order);
        for &(a, b) in g.edges() {
            let (x, y) = g.edge_side_counts(a, b).unwrap();
            prop_assert_eq!(g.edge_side_counts(b, a).unwrap(), (y, x));
            prop_assert!(x >= 1 && y >= 1 && x + y <= order);
        }
    }

    #[test]
    fn indices_survive_relabeling(seed: u64, order in 1usize..14, shift in 0usize..14) {
        let g = connected(seed, order);
        let perm: Vec<usize> = (0..order).map(|v| (v + shift) % order).collect();
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(h.szeged_index().unwrap(), g.szeged_index().unwrap());
        prop_assert_eq!(h.wiener_index().unwrap(), g.wiener_index().unwrap());
        prop_assert_eq!(h.degree_sequence(), g.degree_sequence());
    }

    #[test]
    fn trees_have_szeged_equal_to_wiener(seed: u64, order in 1usize..60) {
        let t = tree(seed, order);
        prop_assert_eq!(t.size(), order.saturating_sub(1));
        prop_assert_eq!(t.szeged_index().unwrap(), t.wiener_index().unwrap());
    }

    #[test]
    fn szeged_bounds(seed: u64, order in 2usize..14) {
        let g = connected(seed, order);
        let sz = g.szeged_index().unwrap();
        let n = order as u64;
        prop_assert!(sz >= g.size() as u64);
        prop_assert!(sz <= g.size() as u64 * (n / 2) * n.div_ceil(2));
        prop_assert!(sz >= g.wiener_index().unwrap());
    }

    #[test]
    fn distances_form_a_metric(seed: u64, order in 1usize..12) {
        let g = connected(seed, order);
        let d = g.distance_matrix().unwrap();
        for u in 0..order {
            prop_assert_eq!(d.get(u, u), 0);
            for v in 0..order {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..order {
                    prop_assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }

    #[test]
    fn json_round_trips(seed: u64, order in 1usize..20) {
        let g = connected(seed, order);
        prop_assert_eq!(SimpleGraph::from_json(&g.to_json()).unwrap(), g);
    }
}

#[test]
fn complete_graphs_have_one_per_edge() {
    for k in 1..12 {
        let g = SimpleGraph::complete(k).unwrap();
        let pairs = (k * (k - 1) / 2) as u64;
        assert_eq!(g.szeged_index().unwrap(), pairs);
        assert_eq!(g.wiener_index().unwrap(), pairs);
    }
}
