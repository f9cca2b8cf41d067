use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use szeged_core::verify::{
    connected_graphs_up_to, explore_join_formula, random_join_spec, verify_join_random,
    ComponentKind,
};
use szeged_core::{
    build_generalized_join, szeged_join_corrected, szeged_join_formula, JoinSpec, SimpleGraph,
};

fn brute(spec: &JoinSpec) -> u64 {
    build_generalized_join(spec)
        .unwrap()
        .graph
        .szeged_index()
        .unwrap()
}

#[test]
fn closed_form_matches_on_complete_components() {
    for seed in 0..5 {
        let report = verify_join_random(200, seed, ComponentKind::Complete).unwrap();
        assert!(report.all_match(), "seed {seed}: {:?}", report.findings);
        assert!(report.summary.variant_divergences.is_empty());
    }
}

#[test]
fn corrected_form_matches_on_connected_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let spec = random_join_spec(&mut rng, 6, 6, ComponentKind::Connected).unwrap();
        assert_eq!(
            szeged_join_corrected(&spec).unwrap(),
            brute(&spec),
            "{}",
            spec.to_json()
        );
    }
}

#[test]
fn corrected_form_matches_on_every_small_diameter_two_base() {
    let graphs = connected_graphs_up_to(4);
    let small: Vec<_> = graphs.iter().filter(|g| g.order() <= 3).cloned().collect();
    for base in graphs.iter().filter(|g| g.diameter().unwrap() <= 2) {
        let mut choice = vec![0usize; base.order()];
        loop {
            let components = choice.iter().map(|&c| small[c].clone()).collect();
            let spec = JoinSpec::new(base.clone(), components).unwrap();
            assert_eq!(
                szeged_join_corrected(&spec).unwrap(),
                brute(&spec),
                "{}",
                spec.to_json()
            );
            let Some(slot) = choice.iter().position(|&c| c + 1 < small.len()) else {
                break;
            };
            choice[slot] += 1;
            choice[..slot].fill(0);
        }
    }
}

#[test]
fn closed_form_counterexamples_are_non_complete() {
    let k = |n| SimpleGraph::complete(n).unwrap();
    let p3 = SimpleGraph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
    let spec = JoinSpec::new(k(2), vec![p3, k(1)]).unwrap();
    assert_eq!(brute(&spec), 9);
    assert_eq!(szeged_join_formula(&spec).unwrap(), 7);
}

#[test]
fn exploration_reports_by_class() {
    let exploration = explore_join_formula(4, 3).unwrap();
    for class in &exploration.classes {
        if class.base_diameter <= 2 {
            assert_eq!(class.corrected_mismatches, 0);
            if class.components_complete {
                assert_eq!(class.closed_form_mismatches, 0);
            }
        }
    }
    assert!(exploration
        .classes
        .iter()
        .any(|c| !c.components_complete && c.closed_form_mismatches > 0));
    assert!(exploration.render_csv().lines().count() > 1);
}
