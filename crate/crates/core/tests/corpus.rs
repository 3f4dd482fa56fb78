//! Corpus-level checks: pinned fixtures, subfoliation containments and
//! modular agreement.

use p3dist::corpus::{fixture, fixture_oneform, fixture_vfield, verify_paper_examples, FIXTURES};
use p3dist::curves::{contraction_check, sing_scheme_v};
use p3dist::distribution::{classify, singular_scheme};
use p3dist::exterior::{ExtForm, VField};
use p3dist::groebner::modp::{check_leading_ideal, DEFAULT_PRIME};
use p3dist::groebner::Ideal;
use p3dist::parse::parse_poly;
use p3dist::sections::compute_tf;
use sha2::{Digest, Sha256};

fn sha256(text: &str) -> String {
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

#[test]
fn maximal_order_fixtures_are_pinned() {
    assert_eq!(
        sha256(fixture("example1.json").unwrap()),
        "9af0063015a1e22a5c8f6757a96a7d110e5642a27aa2c9f1f8343d3aff58744a"
    );
    assert_eq!(
        sha256(fixture("example2.json").unwrap()),
        "7915a3cc7d4ef97c03b4d030a3dd2661bf3ee4fee50a46052e6b4adeadb9bc0d"
    );
}

#[test]
fn bundled_fixtures_match_files_on_disk() {
    for (name, text) in FIXTURES {
        let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
        assert_eq!(std::fs::read_to_string(path).unwrap(), *text, "{name}");
    }
}

#[test]
fn verification_run_passes() {
    let checks = verify_paper_examples();
    for c in &checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
    assert_eq!(checks.len(), 10);
}

/// `ι_T ι_S ι_R (dx0 ∧ dx1 ∧ dx2 ∧ dx3)`: the distribution spanned by `S` and `T`.
fn spanned_by(s: [&str; 4], t: [&str; 4]) -> ExtForm {
    let field = |c: [&str; 4]| VField::new(c.map(|p| parse_poly(p).unwrap())).unwrap();
    let vol = ExtForm::basis(&[0, 1, 2, 3]);
    vol.contract(&VField::radial()).unwrap().contract(&field(s)).unwrap().contract(&field(t)).unwrap()
}

fn split_cases() -> Vec<(&'static str, ExtForm)> {
    vec![
        ("line pencil", fixture_oneform("line_pencil.json")),
        ("diagonal", spanned_by(["0", "x1", "2*x2", "3*x3"], ["x1", "x0", "0", "0"])),
        ("constant and quadratic", spanned_by(["1", "0", "0", "0"], ["x1^2", "x0*x2", "x3^2", "x0*x1"])),
        ("two linear", spanned_by(["x1", "-x0", "0", "0"], ["0", "x2", "x3", "x0"])),
    ]
}

#[test]
fn subfoliation_singularities_lie_in_sing_f() {
    for (name, w) in split_cases() {
        let r = classify(&w).unwrap();
        assert!(r.split_type.is_some(), "{name} should split");
        assert!(contraction_check(&r.minimal_section, &w).unwrap(), "{name}");
        let sing_f = singular_scheme(&w).unwrap();
        let sing_g = sing_scheme_v(&r.minimal_section).unwrap();
        assert!(sing_g.contains_ideal(&sing_f), "{name}: Sing(G) not inside Sing(F)");
    }
}

#[test]
fn family_one_section_vanishes_on_its_line() {
    let w = fixture_oneform("example1.json");
    let s = compute_tf(&w).unwrap();
    assert!(contraction_check(&s.section, &w).unwrap());
    let line = Ideal::new(["y", "w"].map(|c| parse_poly(c).unwrap()));
    let sing_g = sing_scheme_v(&s.section).unwrap();
    assert!(line.contains_ideal(&sing_g));
}

#[test]
fn modular_leading_ideals_agree_on_corpus() {
    for name in ["example1.json", "example2.json", "null_correlation.json", "line_pencil.json"] {
        let check = check_leading_ideal(&singular_scheme(&fixture_oneform(name)).unwrap(), DEFAULT_PRIME).unwrap();
        assert!(check.agrees, "{name}: {check:?}");
    }
    for name in ["vf_generic.json", "vf_line.json", "vf_double_line.json", "vf_skew.json"] {
        let check = check_leading_ideal(&sing_scheme_v(&fixture_vfield(name)).unwrap(), 32003).unwrap();
        assert!(check.agrees, "{name}: {check:?}");
    }
}
