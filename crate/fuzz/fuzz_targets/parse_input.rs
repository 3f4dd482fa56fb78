#![no_main]

use libfuzzer_sys::fuzz_target;
use p3dist::error::Error;
use p3dist::input::parse_input;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Err(e) = parse_input(text) {
        assert!(!e.is_internal(), "input errors are never internal: {e}");
        if let Error::Parse(p) = e {
            assert!(p.line >= 1);
        }
    }
});
