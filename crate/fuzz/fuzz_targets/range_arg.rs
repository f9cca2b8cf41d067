#![no_main]

use libfuzzer_sys::fuzz_target;
use szeged_cli::parse_range;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_range(text) {
        assert!(3 <= r.lo && r.lo <= r.hi);
        assert_eq!(parse_range(&format!("{}:{}", r.lo, r.hi)).unwrap(), r);
    }
});
