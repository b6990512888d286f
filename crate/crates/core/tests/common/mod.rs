//! Shared test fixtures: the printed octonion multiplication tables used as
//! entry-for-entry regression oracles, and the quadratic-algebra corpus.

use nonassoc::algebra::Algebra;
use nonassoc::construct::{builtin, Builtin};
use nonassoc::sample;
use nonassoc::scalar::{Mode, Scalar};

/// The classical real octonion table: `entry(i, j) = (coefficient, k)`
/// meaning `e_i e_j = coefficient * e_k`, transcribed row by row.
/// Rows/columns 0 are the identity. This is the generalized table with all
/// norm parameters 1.
pub fn printed_octonion_entry(i: usize, j: usize) -> (i64, usize) {
    let one = Scalar::from_i64(1, Mode::Rational);
    let (c, k) = generalized_octonion_entry(i, j, &one, &one, &one);
    let c_int = if c == Scalar::from_i64(1, Mode::Rational) {
        1
    } else if c == Scalar::from_i64(-1, Mode::Rational) {
        -1
    } else {
        panic!("unit-parameter table has coefficients +-1, got {c}")
    };
    (c_int, k)
}

/// The generalized octonion table over parameters
/// `n1 = n_p, n2 = n_q, n4 = n_r` with `n3 = n1 n2`, `n5 = n1 n4`,
/// `n6 = n2 n4`, `n7 = n1 n2 n4`, transcribed from the printed source.
pub fn generalized_octonion_entry(
    i: usize,
    j: usize,
    n1: &Scalar,
    n2: &Scalar,
    n4: &Scalar,
) -> (Scalar, usize) {
    let mode = n1.mode();
    let one = Scalar::one(mode);
    let m = |s: &Scalar| -> Scalar { -s };
    let n3 = n1 * n2;
    let n5 = n1 * n4;
    let n6 = n2 * n4;
    let n7 = &n3 * n4;
    if i == 0 {
        return (one, j);
    }
    if j == 0 {
        return (one, i);
    }
    let row: [[(Scalar, usize); 7]; 7] = [
        // e1 * (e1..e7)
        [
            (m(n1), 0),
            (one.clone(), 3),
            (m(n1), 2),
            (one.clone(), 5),
            (m(n1), 4),
            (m(&one), 7),
            (n1.clone(), 6),
        ],
        // e2
        [
            (m(&one), 3),
            (m(n2), 0),
            (n2.clone(), 1),
            (one.clone(), 6),
            (one.clone(), 7),
            (m(n2), 4),
            (m(n2), 5),
        ],
        // e3
        [
            (n1.clone(), 2),
            (m(n2), 1),
            (m(&n3), 0),
            (one.clone(), 7),
            (m(n1), 6),
            (n2.clone(), 5),
            (m(&n3), 4),
        ],
        // e4
        [
            (m(&one), 5),
            (m(&one), 6),
            (m(&one), 7),
            (m(n4), 0),
            (n4.clone(), 1),
            (n4.clone(), 2),
            (n4.clone(), 3),
        ],
        // e5
        [
            (n1.clone(), 4),
            (m(&one), 7),
            (n1.clone(), 6),
            (m(n4), 1),
            (m(&n5), 0),
            (m(n4), 3),
            (n5.clone(), 2),
        ],
        // e6
        [
            (one.clone(), 7),
            (n2.clone(), 4),
            (m(n2), 5),
            (m(n4), 2),
            (n4.clone(), 3),
            (m(&n6), 0),
            (m(&n6), 1),
        ],
        // e7
        [
            (m(n1), 6),
            (n2.clone(), 5),
            (n3.clone(), 4),
            (m(n4), 3),
            (m(&n5), 2),
            (n6.clone(), 1),
            (m(&n7), 0),
        ],
    ];
    row[i - 1][j - 1].clone()
}

/// Asserts a built algebra's table equals the printed one entry for entry
/// on the leading `dim x dim` block (the doubling tower nests).
pub fn assert_matches_printed_table(alg: &Algebra, dim: usize) {
    assert_eq!(alg.dim(), dim);
    for i in 0..dim {
        for j in 0..dim {
            let (c, k) = printed_octonion_entry(i, j);
            for kk in 0..dim {
                let expected = if kk == k {
                    Scalar::from_i64(c, alg.mode())
                } else {
                    Scalar::zero(alg.mode())
                };
                assert_eq!(
                    alg.table_entry(i, j, kk),
                    &expected,
                    "entry e{i} e{j} component {kk} (dim {dim})"
                );
            }
        }
    }
}

/// The dim-3 quadratic but non-flexible example: basis {1, u, v} with
/// u^2 = v^2 = -1, uv = u, vu = -u.
pub fn dim3_nonflexible() -> Algebra {
    let mode = Mode::Rational;
    let n = 3;
    let mut table = vec![Scalar::zero(mode); n * n * n];
    let mut set = |i: usize, j: usize, k: usize, c: i64| {
        table[(i * n + j) * n + k] = Scalar::from_i64(c, mode);
    };
    set(0, 0, 0, 1);
    set(0, 1, 1, 1);
    set(1, 0, 1, 1);
    set(0, 2, 2, 1);
    set(2, 0, 2, 1);
    set(1, 1, 0, -1);
    set(2, 2, 0, -1);
    set(1, 2, 1, 1);
    set(2, 1, 1, -1);
    Algebra::new(n, mode, table).unwrap()
}

/// The quadratic corpus demanded by the acceptance criteria: the
/// Cayley-Dickson ladder, generalized parameters, the dim-3 example, and
/// seeded change-of-basis images. Every member is unital and quadratic.
pub fn quadratic_corpus() -> Vec<(String, Algebra)> {
    let mode = Mode::Rational;
    let s = |v: i64| Scalar::from_i64(v, mode);
    let mut corpus: Vec<(String, Algebra)> = vec![
        ("complexes".into(), builtin(Builtin::Complexes, mode).unwrap()),
        ("quaternions".into(), builtin(Builtin::Quaternions, mode).unwrap()),
        ("octonions".into(), builtin(Builtin::Octonions, mode).unwrap()),
        ("sedenions".into(), builtin(Builtin::Sedenions, mode).unwrap()),
        ("dim3-nonflexible".into(), dim3_nonflexible()),
    ];
    let generalized: [(&str, Vec<Scalar>); 8] = [
        ("quad(-7)", vec![s(-7)]),
        ("quad(2)", vec![s(2)]),
        ("quat(-1,-2)", vec![s(-1), s(-2)]),
        ("quat(-3,-5)", vec![s(-3), s(-5)]),
        ("quat(2,3)", vec![s(2), s(3)]),
        ("oct(-1,-1,-2)", vec![s(-1), s(-1), s(-2)]),
        ("oct(-2,-3,-5)", vec![s(-2), s(-3), s(-5)]),
        ("oct(1,1,1)", vec![s(1), s(1), s(1)]),
    ];
    for (name, levels) in generalized {
        let alg = nonassoc::construct::cayley_dickson(&levels, mode).unwrap().0;
        corpus.push((name.into(), alg));
    }
    // Seeded change-of-basis images of the division ladder.
    let scramble_targets = [
        (Builtin::Complexes, 2usize),
        (Builtin::Quaternions, 4),
        (Builtin::Octonions, 8),
    ];
    for (seed, (which, dim)) in (0u64..).zip(scramble_targets.iter().cycle().take(7)) {
        let alg = builtin(which.clone(), mode).unwrap();
        let mut rng = sample::rng(1000 + seed);
        let p = sample::random_unimodular_matrix(*dim, mode, &mut rng);
        corpus.push((
            format!("scrambled-dim{dim}-seed{seed}"),
            alg.change_of_basis(&p).unwrap(),
        ));
    }
    assert!(corpus.len() >= 20, "corpus must have at least 20 members");
    corpus
}
