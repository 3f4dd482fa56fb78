#![no_main]

use libfuzzer_sys::fuzz_target;
use p3dist::distribution::validate_oneform;
use p3dist::exterior::common_degree;
use p3dist::input::{parse_input, InputDoc};
use p3dist::logarithmic::build_log_form;

// Keep the Gröbner work bounded: only small forms reach validation.
const MAX_DEGREE: u32 = 2;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse_input(text) else { return };
    let form = match doc {
        InputDoc::OneForm(w) => w,
        InputDoc::VField(v) => {
            let _ = v.degree();
            return;
        }
        InputDoc::LogType(t) => match build_log_form(&t) {
            Ok(w) => w,
            Err(e) => {
                assert!(!e.is_internal());
                return;
            }
        },
    };
    let small = common_degree(form.coeffs()).map_or(false, |k| k <= MAX_DEGREE + 1);
    if small {
        if let Err(e) = validate_oneform(&form) {
            assert!(!e.is_internal(), "validation raised an internal error: {e}");
        }
    }
});
