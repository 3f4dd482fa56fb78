#![no_main]

use libfuzzer_sys::fuzz_target;
use p3dist::parse::parse_poly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_poly(text) {
        // printing is canonical, so a second round trip is a fixed point
        let printed = p.to_string();
        let again = parse_poly(&printed).expect("printed polynomials parse");
        assert_eq!(again, p);
        assert_eq!(again.to_string(), printed);
    }
});
