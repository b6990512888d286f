//! Algebra constructors: Cayley-Dickson doubling, the built-in ladder from
//! the reals through the sedenions, complexification and unitization.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::matrix::Matrix;
use crate::scalar::{Mode, Scalar};
use crate::{Error, Result};

/// Doubles `alg` with parameter `gamma` and involution `star`:
///
/// ```text
/// (a, b)(c, d) = (ac + gamma d* b,  da + b c*),    (a, b)* = (a*, -b)
/// ```
///
/// The unit is `(1, 0)`. Returns the doubled algebra and its induced
/// involution matrix. With all parameters `-1` the ladder runs through the
/// reals, complexes, quaternions, octonions, sedenions, and the produced
/// tables match the classical printed multiplication tables entry for entry.
pub fn cayley_dickson_double(
    alg: &Algebra,
    star: &Matrix,
    gamma: &Scalar,
) -> Result<(Algebra, Matrix)> {
    if gamma.is_zero() {
        return Err(Error::Invalid("doubling parameter gamma must be nonzero".into()));
    }
    if gamma.mode() != alg.mode() {
        return Err(Error::MixedModes(alg.mode(), gamma.mode()));
    }
    let unit = alg.find_unit().ok_or(Error::NotUnital)?;
    let n = alg.dim();
    if star.rows() != n || star.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: star.rows(),
        });
    }
    let mode = alg.mode();
    let star_of = |i: usize| Element::new(star.column(i));

    let d = 2 * n;
    let mut table = vec![Scalar::zero(mode); d * d * d];
    let mut write = |i: usize, j: usize, low: &Element, high: &Element| {
        for k in 0..n {
            table[(i * d + j) * d + k] = low.get(k).clone();
            table[(i * d + j) * d + n + k] = high.get(k).clone();
        }
    };
    let zero = alg.zero_element();
    for i in 0..n {
        let ei = alg.basis_element(i);
        for j in 0..n {
            let ej = alg.basis_element(j);
            let ej_star = star_of(j);
            // (e_i, 0)(e_j, 0) = (e_i e_j, 0)
            write(i, j, &alg.basis_product(i, j), &zero);
            // (e_i, 0)(0, e_j) = (0, e_j e_i)
            write(i, n + j, &zero, &alg.multiply(&ej, &ei)?);
            // (0, e_i)(e_j, 0) = (0, e_i e_j*)
            write(n + i, j, &zero, &alg.multiply(&ei, &ej_star)?);
            // (0, e_i)(0, e_j) = (gamma e_j* e_i, 0)
            let low = alg.multiply(&ej_star, &ei)?.scale(gamma);
            write(n + i, n + j, &low, &zero);
        }
    }

    let mut new_unit = Element::zero(d, mode);
    for k in 0..n {
        new_unit.set(k, unit.get(k).clone());
    }
    let doubled = Algebra::new(d, mode, table)?
        .with_tolerance(alg.tol())
        .with_unit(new_unit)?;

    // (a, b)* = (a*, -b): block diagonal of `star` and `-I`.
    let induced = Matrix::from_fn(d, d, mode, |r, c| {
        if r < n && c < n {
            star.get(r, c).clone()
        } else if r >= n && c >= n && r == c {
            Scalar::from_i64(-1, mode)
        } else {
            Scalar::zero(mode)
        }
    });
    Ok((doubled, induced))
}

/// Iterated doubling from the ground field with one parameter per level.
/// Returns the final algebra and involution.
pub fn cayley_dickson(levels: &[Scalar], mode: Mode) -> Result<(Algebra, Matrix)> {
    let mut alg = ground_field(mode)?;
    let mut star = Matrix::identity(1, mode);
    for gamma in levels {
        let (next, next_star) = cayley_dickson_double(&alg, &star, gamma)?;
        alg = next;
        star = next_star;
    }
    let dim = alg.dim();
    Ok((alg.with_labels(standard_labels(dim)), star))
}

fn ground_field(mode: Mode) -> Result<Algebra> {
    let alg = Algebra::new(1, mode, vec![Scalar::one(mode)])?;
    alg.with_unit(Element::new(vec![Scalar::one(mode)]))
}

fn standard_labels(dim: usize) -> Vec<String> {
    (0..dim)
        .map(|i| if i == 0 { "1".to_string() } else { format!("e{i}") })
        .collect()
}

/// The built-in algebras.
#[derive(Debug, Clone, PartialEq)]
pub enum Builtin {
    Reals,
    Complexes,
    Quaternions,
    Octonions,
    Sedenions,
    /// `i^2 = alpha`, `j^2 = beta`.
    GenQuaternion(Scalar, Scalar),
    /// Three doubling parameters.
    GenOctonion(Scalar, Scalar, Scalar),
}

impl Builtin {
    pub fn parse(name: &str) -> Option<Builtin> {
        match name {
            "reals" => Some(Builtin::Reals),
            "complexes" => Some(Builtin::Complexes),
            "quaternions" => Some(Builtin::Quaternions),
            "octonions" => Some(Builtin::Octonions),
            "sedenions" => Some(Builtin::Sedenions),
            _ => None,
        }
    }
}

/// Builds a built-in algebra by iterated doubling. Generalized parameters
/// must be nonzero.
pub fn builtin(which: Builtin, mode: Mode) -> Result<Algebra> {
    let minus_one = Scalar::from_i64(-1, mode);
    let levels: Vec<Scalar> = match which {
        Builtin::Reals => vec![],
        Builtin::Complexes => vec![minus_one],
        Builtin::Quaternions => vec![minus_one.clone(), minus_one],
        Builtin::Octonions => vec![minus_one.clone(), minus_one.clone(), minus_one],
        Builtin::Sedenions => vec![minus_one.clone(), minus_one.clone(), minus_one.clone(), minus_one],
        Builtin::GenQuaternion(alpha, beta) => vec![alpha, beta],
        Builtin::GenOctonion(alpha, beta, gamma) => vec![alpha, beta, gamma],
    };
    for g in &levels {
        if g.is_zero() {
            return Err(Error::Invalid("doubling parameter must be nonzero".into()));
        }
    }
    let (alg, _) = cayley_dickson(&levels, mode)?;
    Ok(alg)
}

/// Algebraic complexification: the same structure tensor reinterpreted over
/// complex scalars. Conjugation is componentwise ([`Element::conj`]), and
/// left/right alternativity carries over from the input.
pub fn complexify(alg: &Algebra) -> Algebra {
    let target = alg.mode().complexified();
    alg.convert(target)
        .expect("real and rational tensors embed into their complexifications")
}

/// Adjoins an identity at index 0: `(r, a)(s, b) = (rs, sa + rb + ab)`.
/// The input embeds as the ideal of trailing coordinates. Legal on already
/// unital input as well, where it simply adds a new external identity.
pub fn unitize(alg: &Algebra) -> Algebra {
    let n = alg.dim();
    let d = n + 1;
    let mode = alg.mode();
    let mut table = vec![Scalar::zero(mode); d * d * d];
    let mut set = |i: usize, j: usize, k: usize, v: Scalar| {
        table[(i * d + j) * d + k] = v;
    };
    set(0, 0, 0, Scalar::one(mode));
    for i in 0..n {
        // (1,0)(0,e_i) = (0,e_i) and (0,e_i)(1,0) = (0,e_i)
        set(0, i + 1, i + 1, Scalar::one(mode));
        set(i + 1, 0, i + 1, Scalar::one(mode));
        for j in 0..n {
            for k in 0..n {
                let c = alg.table_entry(i, j, k);
                if !c.is_zero() {
                    set(i + 1, j + 1, k + 1, c.clone());
                }
            }
        }
    }
    let unit = Element::basis(d, 0, mode);
    Algebra::new(d, mode, table)
        .expect("unitization tensor is well-formed")
        .with_tolerance(alg.tol())
        .with_unit(unit)
        .expect("adjoined unit verifies by construction")
}
