//! Seeded random elements, matrices, and the signed-basis-pair zero-divisor
//! search used as an oracle in tests and probes.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::matrix::Matrix;
use crate::scalar::{Mode, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Element with small integer coordinates drawn from `-bound..=bound`.
pub fn random_element(alg: &Algebra, rng: &mut ChaCha8Rng, bound: i64) -> Element {
    let mode = alg.mode();
    let coords = (0..alg.dim())
        .map(|_| {
            let n = rng.gen_range(-bound..=bound);
            if mode.is_complex() {
                let m = rng.gen_range(-bound..=bound);
                &Scalar::from_i64(n, mode) + &(&Scalar::i(mode) * &Scalar::from_i64(m, mode))
            } else {
                Scalar::from_i64(n, mode)
            }
        })
        .collect();
    Element::new(coords)
}

/// Nonzero variant of [`random_element`].
pub fn random_nonzero_element(alg: &Algebra, rng: &mut ChaCha8Rng, bound: i64) -> Element {
    loop {
        let e = random_element(alg, rng, bound);
        if !e.is_zero() {
            return e;
        }
    }
}

/// Random unimodular matrix: a product of integer shears, swaps and sign
/// flips of the identity. The determinant is +-1, so both the matrix and its
/// inverse have integer entries and exact-mode scrambles stay cheap.
pub fn random_unimodular_matrix(dim: usize, mode: Mode, rng: &mut ChaCha8Rng) -> Matrix {
    let mut m = Matrix::identity(dim, mode);
    if dim == 1 {
        if rng.gen_bool(0.5) {
            m.set(0, 0, Scalar::from_i64(-1, mode));
        }
        return m;
    }
    let ops = 3 * dim;
    for _ in 0..ops {
        match rng.gen_range(0..3) {
            0 => {
                // row_i += c * row_j
                let i = rng.gen_range(0..dim);
                let mut j = rng.gen_range(0..dim);
                while j == i {
                    j = rng.gen_range(0..dim);
                }
                let c = Scalar::from_i64(*[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).unwrap(), mode);
                for col in 0..dim {
                    let v = m.get(i, col) + &(&c * m.get(j, col));
                    m.set(i, col, v);
                }
            }
            1 => {
                let i = rng.gen_range(0..dim);
                let mut j = rng.gen_range(0..dim);
                while j == i {
                    j = rng.gen_range(0..dim);
                }
                for col in 0..dim {
                    let a = m.get(i, col).clone();
                    let b = m.get(j, col).clone();
                    m.set(i, col, b);
                    m.set(j, col, a);
                }
            }
            _ => {
                let i = rng.gen_range(0..dim);
                for col in 0..dim {
                    let v = -m.get(i, col);
                    m.set(i, col, v);
                }
            }
        }
    }
    m
}

/// Searches products of signed basis pairs `(e_i +- e_j)(e_k +- e_l)` for a
/// joint zero divisor and returns the first left factor in lexicographic
/// order. This is the independent oracle for sedenion-style zero divisors.
pub fn sedenion_zero_divisor_witness(alg: &Algebra) -> Option<Element> {
    let n = alg.dim();
    let signs = [1i64, -1];
    for i in 1..n {
        for j in i + 1..n {
            for &si in &signs {
                let mut a = alg.zero_element();
                a.set(i, Scalar::one(alg.mode()));
                a.set(j, Scalar::from_i64(si, alg.mode()));
                for k in 1..n {
                    for l in k + 1..n {
                        for &sk in &signs {
                            let mut b = alg.zero_element();
                            b.set(k, Scalar::one(alg.mode()));
                            b.set(l, Scalar::from_i64(sk, alg.mode()));
                            let ab = alg.multiply(&a, &b).ok()?;
                            if ab.is_zero_tol(alg.tol()) {
                                let ba = alg.multiply(&b, &a).ok()?;
                                if ba.is_zero_tol(alg.tol()) {
                                    return Some(a);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
