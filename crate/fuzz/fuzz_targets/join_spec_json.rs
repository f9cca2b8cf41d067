#![no_main]

use libfuzzer_sys::fuzz_target;
use szeged_core::{build_generalized_join, szeged_join_corrected, szeged_join_formula, JoinSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(spec) = JoinSpec::from_json(text) else {
        return;
    };
    assert_eq!(JoinSpec::from_json(&spec.to_json()).unwrap(), spec);
    let total: usize = spec.component_orders().iter().sum();
    if total > 48 {
        return;
    }
    let joined = build_generalized_join(&spec).unwrap();
    assert_eq!(joined.graph.order(), total);
    if !spec.base.is_connected() {
        assert!(szeged_join_formula(&spec).is_err());
        return;
    }
    // Exact for bases of diameter at most 2.
    if spec.base.diameter().unwrap() <= 2 {
        let brute = joined.graph.szeged_index().unwrap();
        assert_eq!(szeged_join_corrected(&spec).unwrap(), brute);
        if spec.components.iter().all(|g| g.is_complete()) {
            assert_eq!(szeged_join_formula(&spec).unwrap(), brute);
        }
    }
});
