//! Bundled fixture files for the CLI tests, plus their regenerator.
//!
//! `cargo test --test fixtures -- --ignored regenerate_fixtures` rewrites
//! the files under `tests/fixtures/` from the library constructors. The
//! non-ignored test checks the bundled files are in sync with the code.

mod common;

use nonassoc::construct::{builtin, unitize, Builtin};
use nonassoc::io::{algebra_to_file, canonical_json, parse_algebra_file};
use nonassoc::matrix::Matrix;
use nonassoc::sample;
use nonassoc::scalar::{Mode, Scalar};
use std::path::PathBuf;

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn fixture_contents() -> Vec<(&'static str, String)> {
    let mut out = Vec::new();
    let named = [
        ("complexes.json", Builtin::Complexes),
        ("quaternions.json", Builtin::Quaternions),
        ("octonions.json", Builtin::Octonions),
        ("sedenions.json", Builtin::Sedenions),
    ];
    for (file, which) in named {
        let alg = builtin(which, Mode::Rational).unwrap();
        let name = file.trim_end_matches(".json");
        out.push((file, canonical_json(&algebra_to_file(name, &alg))));
    }

    let real_oct = builtin(Builtin::Octonions, Mode::Real).unwrap();
    out.push((
        "real_octonions.json",
        canonical_json(&algebra_to_file("real_octonions", &real_oct)),
    ));

    // A fixed seeded scramble of the quaternions; classifies to Quaternion.
    let h = builtin(Builtin::Quaternions, Mode::Rational).unwrap();
    let mut rng = sample::rng(424242);
    let p = sample::random_unimodular_matrix(4, Mode::Rational, &mut rng);
    let scrambled = h.change_of_basis(&p).unwrap();
    out.push((
        "scrambled_quaternions.json",
        canonical_json(&algebra_to_file("scrambled_quaternions", &scrambled)),
    ));

    // Quaternion table with one sign flipped and the standard unit declared:
    // the declared unit fails verification.
    let mut file = algebra_to_file("broken_unit", &h);
    for e in &mut file.table {
        if (e.i, e.j, e.k) == (0, 1, 1) {
            e.c = "-1".into();
        }
    }
    out.push(("broken_unit.json", canonical_json(&file)));

    // Unitized strictly-upper-triangular algebra: unital but not quadratic.
    let mode = Mode::Rational;
    let mut table = vec![Scalar::zero(mode); 27];
    table[7] = Scalar::one(mode); // (i, j, k) = (0, 2, 1): E12 * E23 = E13
    let nil = nonassoc::algebra::Algebra::new(3, mode, table).unwrap();
    out.push((
        "nonquadratic.json",
        canonical_json(&algebra_to_file("nonquadratic", &unitize(&nil))),
    ));

    out
}

#[test]
#[ignore = "rewrites the bundled fixtures"]
fn regenerate_fixtures() {
    let dir = fixtures_dir();
    std::fs::create_dir_all(&dir).unwrap();
    for (name, text) in fixture_contents() {
        std::fs::write(dir.join(name), format!("{text}\n")).unwrap();
    }
}

#[test]
fn bundled_fixtures_are_in_sync() {
    let dir = fixtures_dir();
    for (name, expected) in fixture_contents() {
        let bytes = std::fs::read(dir.join(name))
            .unwrap_or_else(|e| panic!("missing fixture {name}: {e}; run the regenerator"));
        let on_disk = String::from_utf8(bytes).unwrap();
        assert_eq!(on_disk.trim_end(), expected, "fixture {name} is stale");
    }
}

#[test]
fn bundled_fixtures_parse_or_fail_as_designed() {
    let dir = fixtures_dir();
    for name in [
        "complexes.json",
        "quaternions.json",
        "octonions.json",
        "sedenions.json",
        "real_octonions.json",
        "scrambled_quaternions.json",
        "nonquadratic.json",
    ] {
        let text = std::fs::read_to_string(dir.join(name)).unwrap();
        let (alg, file) = parse_algebra_file(&text).unwrap();
        assert_eq!(alg.dim(), file.dim);
        // Canonical round trip is byte-identical.
        assert_eq!(canonical_json(&file), text.trim_end());
    }
    let text = std::fs::read_to_string(dir.join("broken_unit.json")).unwrap();
    assert!(matches!(
        parse_algebra_file(&text),
        Err(nonassoc::io::FileError::UnitVerification(1))
    ));
    // Fixture table sanity: the scramble is a quaternion algebra in
    // disguise (the identity map is not an isomorphism onto it).
    let h = builtin(Builtin::Quaternions, Mode::Rational).unwrap();
    let text = std::fs::read_to_string(dir.join("scrambled_quaternions.json")).unwrap();
    let (scrambled, _) = parse_algebra_file(&text).unwrap();
    let id = Matrix::identity(4, Mode::Rational);
    assert!(!nonassoc::classify::verify_isomorphism(&h, &scrambled, &id)
        .unwrap()
        .passed());
}
