#![no_main]

use libfuzzer_sys::fuzz_target;
use szeged_core::SimpleGraph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = SimpleGraph::from_json(text) else {
        return;
    };
    let again = SimpleGraph::from_json(&g.to_json()).expect("own output parses");
    assert_eq!(g, again);
    if g.order() <= 64 && g.is_connected() {
        let sz = g.szeged_index().unwrap();
        assert!(sz >= g.size() as u64);
        assert!(sz >= g.wiener_index().unwrap());
    }
});
