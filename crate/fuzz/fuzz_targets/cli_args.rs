#![no_main]

use libfuzzer_sys::fuzz_target;

// Arguments are NUL-separated; the program name is prepended.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let args: Vec<&str> = text.split('\0').collect();
    if args.len() > 12 {
        return;
    }
    let _ = szeged_cli::parse_args(std::iter::once("szeged").chain(args));
});
