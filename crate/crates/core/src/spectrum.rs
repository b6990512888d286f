//! Finite-dimensional spectra through multiplication operators.
//!
//! For an alternative unital algebra, `z1 - a` is invertible exactly when
//! `L_{z1-a}` is, so the spectrum of `a` is the eigenvalue set of the matrix
//! of `L_a`. Exact modes report the characteristic polynomial; the real
//! modes report numeric roots. Real algebras are complexified first, and for
//! quadratic algebras the result is cross-checked against the closed form
//! `trace(a) +- sqrt(trace(a)^2 - norm(a))`.

use crate::algebra::{Algebra, Side};
use crate::construct::complexify;
use crate::element::Element;
use crate::identities::require_alternative;
use crate::poly;
use crate::quadratic::{self, Extraction};
use crate::scalar::{Mode, Scalar};
use crate::{Error, Result};
use num_complex::Complex64;

/// Whether both one-sided notions coincide (alternative algebras) or only
/// one side was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SpectrumSide {
    TwoSided,
    LeftOnly,
    RightOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SpectrumMode {
    ExactCharPoly,
    NumericRoots,
}

/// A computed spectrum: exact monic characteristic polynomial (ascending
/// coefficients, degree = dimension) or clustered numeric roots.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SpectrumResult {
    pub mode: SpectrumMode,
    pub side: SpectrumSide,
    pub char_poly: Option<Vec<Scalar>>,
    pub roots: Option<Vec<SpectrumRoot>>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct SpectrumRoot {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
}

impl SpectrumResult {
    pub fn roots_as_complex(&self) -> Vec<(Complex64, usize)> {
        self.roots
            .as_ref()
            .map(|rs| {
                rs.iter()
                    .map(|r| (Complex64::new(r.re, r.im), r.multiplicity))
                    .collect()
            })
            .unwrap_or_default()
    }
}

fn operator_spectrum(alg: &Algebra, matrix: &crate::Matrix, side: SpectrumSide) -> SpectrumResult {
    match alg.mode() {
        Mode::ComplexRational => SpectrumResult {
            mode: SpectrumMode::ExactCharPoly,
            side,
            char_poly: Some(matrix.charpoly()),
            roots: None,
        },
        Mode::ComplexReal => {
            let coeffs: Vec<Complex64> = matrix
                .charpoly()
                .iter()
                .map(|s| {
                    let (re, im) = s.to_c64();
                    Complex64::new(re, im)
                })
                .collect();
            let roots = poly::roots(&coeffs)
                .into_iter()
                .map(|(z, m)| SpectrumRoot {
                    re: z.re,
                    im: z.im,
                    multiplicity: m,
                })
                .collect();
            SpectrumResult {
                mode: SpectrumMode::NumericRoots,
                side,
                char_poly: None,
                roots: Some(roots),
            }
        }
        _ => unreachable!("operator_spectrum runs on complexified algebras"),
    }
}

/// Spectrum of `a` in a complex-scalar unital alternative algebra, through
/// the characteristic polynomial of `L_a`.
pub fn spectrum_complex(alg: &Algebra, a: &Element) -> Result<SpectrumResult> {
    if !alg.mode().is_complex() {
        return Err(Error::Invalid(
            "spectrum_complex expects a complex-scalar algebra; use spectrum_real".into(),
        ));
    }
    if alg.find_unit().is_none() {
        return Err(Error::NotUnital);
    }
    require_alternative(alg)?;
    let l = alg.mult_operator(a, Side::Left)?;
    Ok(operator_spectrum(alg, &l, SpectrumSide::TwoSided))
}

/// Spectrum of a real-algebra element: delegates to the complexification,
/// enforces conjugation closure, and cross-checks the quadratic closed form.
pub fn spectrum_real(alg: &Algebra, a: &Element) -> Result<SpectrumResult> {
    if alg.mode().is_complex() {
        return Err(Error::Invalid(
            "spectrum_real expects a real or rational algebra".into(),
        ));
    }
    let cx = complexify(alg);
    let mut result = spectrum_complex(&cx, &a.complexified())?;

    if let Some(coeffs) = &result.char_poly {
        // Real input: every coefficient must be real; demote to rationals.
        let real_coeffs: Option<Vec<Scalar>> = coeffs
            .iter()
            .map(|c| {
                if c.imag_part().is_zero() {
                    Some(c.real_part())
                } else {
                    None
                }
            })
            .collect();
        match real_coeffs {
            Some(cs) => result.char_poly = Some(cs),
            None => {
                return Err(Error::Invalid(
                    "characteristic polynomial of a real element has nonreal coefficients".into(),
                ))
            }
        }
    }
    if let Some(roots) = &mut result.roots {
        enforce_conjugation_closure(roots, alg.tol())?;
    }

    // Quadratic cross-check: sigma(a) = {p +- sqrt(p^2 - n)}.
    if let Extraction::Quadratic(q) = quadratic::extract(alg)? {
        let p = q.trace_of(a);
        let n = q.norm(a);
        match (&result.char_poly, &result.roots) {
            (Some(coeffs), _) => {
                let quad = vec![n.clone(), -&(&p * &Scalar::from_i64(2, alg.mode())), Scalar::one(alg.mode())];
                let expected = poly_power(&quad, alg.dim() / 2, alg.mode());
                if alg.dim() >= 2 && coeffs != &expected {
                    return Err(Error::Invalid(
                        "exact spectrum disagrees with the quadratic closed form".into(),
                    ));
                }
            }
            (None, Some(roots)) => {
                let closed = closed_form_roots(p.to_f64(), n.to_f64());
                for r in roots {
                    let z = Complex64::new(r.re, r.im);
                    let near = closed.iter().any(|c| (z - c).norm() <= 1e-8 * (1.0 + z.norm()));
                    if !near {
                        return Err(Error::Invalid(format!(
                            "numeric root {z} disagrees with the quadratic closed form"
                        )));
                    }
                }
            }
            _ => {}
        }
    }
    Ok(result)
}

/// `{p + sqrt(p^2 - n), p - sqrt(p^2 - n)}` as complex numbers.
pub fn closed_form_roots(p: f64, n: f64) -> Vec<Complex64> {
    let disc = p * p - n;
    if disc >= 0.0 {
        let s = disc.sqrt();
        vec![Complex64::new(p - s, 0.0), Complex64::new(p + s, 0.0)]
    } else {
        let s = (-disc).sqrt();
        vec![Complex64::new(p, -s), Complex64::new(p, s)]
    }
}

fn poly_power(base: &[Scalar], exp: usize, mode: Mode) -> Vec<Scalar> {
    let mut acc = vec![Scalar::one(mode)];
    for _ in 0..exp {
        let mut next = vec![Scalar::zero(mode); acc.len() + base.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in base.iter().enumerate() {
                next[i + j] = &next[i + j] + &(a * b);
            }
        }
        acc = next;
    }
    acc
}

/// Verifies the root multiset is closed under conjugation and symmetrizes
/// the stored values exactly.
fn enforce_conjugation_closure(roots: &mut Vec<SpectrumRoot>, tol: f64) -> Result<()> {
    let list = roots.clone();
    for r in roots.iter_mut() {
        if r.im.abs() <= tol.max(1e-8) * (1.0 + r.re.abs()) {
            r.im = 0.0;
            continue;
        }
        let partner = list.iter().find(|s| {
            s.multiplicity == r.multiplicity
                && (s.re - r.re).abs() <= tol.max(1e-8) * (1.0 + r.re.abs())
                && (s.im + r.im).abs() <= tol.max(1e-8) * (1.0 + r.im.abs())
        });
        if partner.is_none() {
            return Err(Error::Invalid(format!(
                "real spectrum is not closed under conjugation near {} + {}i",
                r.re, r.im
            )));
        }
    }
    // Canonical pairing: mirror the positive-imaginary representative.
    let mut symmetrized = roots.clone();
    symmetrized.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let mut upper: Vec<SpectrumRoot> = symmetrized.iter().filter(|r| r.im > 0.0).cloned().collect();
    for r in symmetrized.iter_mut().filter(|r| r.im < 0.0) {
        if let Some(pos) = upper.iter().position(|u| {
            u.multiplicity == r.multiplicity && (u.re - r.re).abs() <= 1e-7 * (1.0 + r.re.abs())
        }) {
            let u = upper.remove(pos);
            r.re = u.re;
            r.im = -u.im;
        }
    }
    *roots = symmetrized;
    Ok(())
}

/// One-sided spectrum through `L_a` or `R_a`; does not presume
/// alternativity, so the verdict is labeled per side. Real algebras are
/// complexified first.
pub fn one_sided_spectrum(alg: &Algebra, a: &Element, side: Side) -> Result<SpectrumResult> {
    let (cx, ax);
    let (alg_ref, a_ref) = if alg.mode().is_complex() {
        (alg, a)
    } else {
        cx = complexify(alg);
        ax = a.complexified();
        (&cx, &ax)
    };
    if alg_ref.find_unit().is_none() {
        return Err(Error::NotUnital);
    }
    let m = alg_ref.mult_operator(a_ref, side)?;
    let tag = match side {
        Side::Left => SpectrumSide::LeftOnly,
        Side::Right => SpectrumSide::RightOnly,
    };
    Ok(operator_spectrum(alg_ref, &m, tag))
}

/// Experimental probe of `sigma(ab) u {0} = sigma(ba) u {0}` on seeded
/// random pairs; reported as observations, never asserted.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ProductSpectrumProbe {
    pub samples: u32,
    pub agreements: u32,
    pub disagreements: u32,
}

pub fn product_spectrum_probe(alg: &Algebra, seed: u64, samples: u32) -> Result<ProductSpectrumProbe> {
    let real = match alg.mode() {
        Mode::Rational => alg.convert(Mode::Real).expect("rational embeds in real"),
        Mode::Real => alg.clone(),
        _ => {
            return Err(Error::Invalid(
                "the product-spectrum probe runs on real or rational algebras".into(),
            ))
        }
    };
    let cx = complexify(&real);
    if cx.find_unit().is_none() {
        return Err(Error::NotUnital);
    }
    require_alternative(&cx)?;
    let mut rng = crate::sample::rng(seed);
    let mut agreements = 0;
    let mut disagreements = 0;
    for _ in 0..samples {
        let a = crate::sample::random_element(&cx, &mut rng, 3);
        let b = crate::sample::random_element(&cx, &mut rng, 3);
        let ab = cx.multiply(&a, &b)?;
        let ba = cx.multiply(&b, &a)?;
        let ra = spectrum_complex(&cx, &ab)?.roots_as_complex();
        let rb = spectrum_complex(&cx, &ba)?.roots_as_complex();
        // Compare as sets after adjoining zero.
        let mut sa: Vec<Complex64> = ra.iter().map(|(z, _)| *z).collect();
        let mut sb: Vec<Complex64> = rb.iter().map(|(z, _)| *z).collect();
        sa.push(Complex64::new(0.0, 0.0));
        sb.push(Complex64::new(0.0, 0.0));
        let subset = |xs: &[Complex64], ys: &[Complex64]| {
            xs.iter()
                .all(|x| ys.iter().any(|y| (x - y).norm() <= 1e-6 * (1.0 + x.norm())))
        };
        if subset(&sa, &sb) && subset(&sb, &sa) {
            agreements += 1;
        } else {
            disagreements += 1;
        }
    }
    Ok(ProductSpectrumProbe {
        samples,
        agreements,
        disagreements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{builtin, Builtin};

    #[test]
    fn complexified_complex_numbers_have_conjugate_spectrum_for_i() {
        // The real algebra C complexifies to a split algebra; the embedded
        // imaginary unit has sigma = {i, -i}: its characteristic polynomial
        // is z^2 + 1, in line with conjugation closure and the closed form
        // trace 0, norm 1.
        let c = builtin(Builtin::Complexes, Mode::Rational).unwrap();
        let result = spectrum_real(&c, &c.basis_element(1)).unwrap();
        let coeffs = result.char_poly.unwrap();
        assert_eq!(
            coeffs,
            vec![
                Scalar::from_i64(1, Mode::Rational),
                Scalar::from_i64(0, Mode::Rational),
                Scalar::from_i64(1, Mode::Rational),
            ]
        );
    }

    #[test]
    fn scalar_elements_have_singleton_spectrum() {
        let r = builtin(Builtin::Reals, Mode::Real).unwrap();
        let five = Element::from_i64(&[5], Mode::Real);
        let res = spectrum_real(&r, &five).unwrap();
        let roots = res.roots.unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].re - 5.0).abs() < 1e-12 && roots[0].im == 0.0);
        assert_eq!(roots[0].multiplicity, 1);
    }

    #[test]
    fn quaternion_spectrum_matches_closed_form() {
        let h = builtin(Builtin::Quaternions, Mode::Real).unwrap();
        // a = 2 + 3 e1: trace 2, norm 13, sigma = {2 +- 3i}.
        let a = Element::from_i64(&[2, 3, 0, 0], Mode::Real);
        let res = spectrum_real(&h, &a).unwrap();
        let roots = res.roots.unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].re - 2.0).abs() < 1e-9);
        assert!((roots[0].im + 3.0).abs() < 1e-9);
        assert!((roots[1].im - 3.0).abs() < 1e-9);
        assert_eq!(roots[0].multiplicity, 2);
        assert_eq!(roots[1].multiplicity, 2);
    }

    #[test]
    fn exact_quaternion_spectrum_is_the_quadratic_power() {
        let h = builtin(Builtin::Quaternions, Mode::Rational).unwrap();
        let a = Element::from_i64(&[2, 3, 0, 0], Mode::Rational);
        let res = spectrum_real(&h, &a).unwrap();
        // (z^2 - 4z + 13)^2 = z^4 - 8z^3 + 42z^2 - 104z + 169.
        let q = |v: i64| Scalar::from_i64(v, Mode::Rational);
        assert_eq!(
            res.char_poly.unwrap(),
            vec![q(169), q(-104), q(42), q(-8), q(1)]
        );
    }

    #[test]
    fn octonion_e7_has_spectrum_plus_minus_i() {
        let o = builtin(Builtin::Octonions, Mode::Real).unwrap();
        let res = spectrum_real(&o, &o.basis_element(7)).unwrap();
        let roots = res.roots.unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].im + 1.0).abs() < 1e-9 && roots[0].re.abs() < 1e-9);
        assert!((roots[1].im - 1.0).abs() < 1e-9);
        assert_eq!(roots[0].multiplicity, 4);
    }

    #[test]
    fn one_sided_spectra_agree_with_two_sided_on_alternative_algebras() {
        let h = builtin(Builtin::Quaternions, Mode::Rational).unwrap();
        let a = Element::from_i64(&[1, 2, -1, 3], Mode::Rational);
        let two = spectrum_real(&h, &a).unwrap().char_poly.unwrap();
        let left = one_sided_spectrum(&h, &a, Side::Left).unwrap().char_poly.unwrap();
        let right = one_sided_spectrum(&h, &a, Side::Right).unwrap().char_poly.unwrap();
        let demote = |v: Vec<Scalar>| -> Vec<Scalar> {
            v.iter().map(|c| c.real_part()).collect()
        };
        assert_eq!(demote(left), two);
        assert_eq!(demote(right), two);

        let one = h.find_unit().unwrap();
        let res = one_sided_spectrum(&h, &one, Side::Left).unwrap();
        // charpoly of identity is (z - 1)^4.
        let q = |v: i64| Scalar::from_i64(v, Mode::ComplexRational);
        assert_eq!(res.char_poly.unwrap(), vec![q(1), q(-4), q(6), q(-4), q(1)]);
    }

    #[test]
    fn sedenion_zero_divisor_puts_zero_in_both_one_sided_spectra() {
        let s = builtin(Builtin::Sedenions, Mode::Rational).unwrap();
        let witness = crate::sample::sedenion_zero_divisor_witness(&s).unwrap();
        for side in [Side::Left, Side::Right] {
            let res = one_sided_spectrum(&s, &witness, side).unwrap();
            let coeffs = res.char_poly.unwrap();
            // Constant coefficient zero means 0 is an eigenvalue.
            assert!(coeffs[0].is_zero());
        }
        // Two-sided spectrum refuses: sedenions are not alternative.
        let cx = complexify(&s);
        assert!(spectrum_complex(&cx, &s.basis_element(1).complexified()).is_err());
    }

    #[test]
    fn spectra_are_nonempty_and_conjugation_closed_on_random_octonions() {
        let o = builtin(Builtin::Octonions, Mode::Real).unwrap();
        let mut rng = crate::sample::rng(9);
        for _ in 0..10 {
            let a = crate::sample::random_element(&o, &mut rng, 4);
            let res = spectrum_real(&o, &a).unwrap();
            let roots = res.roots.unwrap();
            assert!(!roots.is_empty());
            let total: usize = roots.iter().map(|r| r.multiplicity).sum();
            assert_eq!(total, 8);
            for r in &roots {
                if r.im != 0.0 {
                    assert!(roots
                        .iter()
                        .any(|s| (s.re - r.re).abs() < 1e-9 && (s.im + r.im).abs() < 1e-9));
                }
            }
        }
    }

    #[test]
    fn spectral_mapping_for_squares_in_closed_form() {
        // sigma(a^2) = {lambda^2} on the two distinguished roots.
        let h = builtin(Builtin::Quaternions, Mode::Rational).unwrap();
        let q = crate::quadratic::extract(&h).unwrap().ok().unwrap();
        let mut rng = crate::sample::rng(31);
        for _ in 0..20 {
            let a = crate::sample::random_element(&h, &mut rng, 5);
            let sq = h.multiply(&a, &a).unwrap();
            let roots_a = closed_form_roots(q.trace_of(&a).to_f64(), q.norm(&a).to_f64());
            let roots_sq = closed_form_roots(q.trace_of(&sq).to_f64(), q.norm(&sq).to_f64());
            for z in &roots_a {
                let z2 = z * z;
                assert!(
                    roots_sq.iter().any(|w| (w - z2).norm() < 1e-6 * (1.0 + z2.norm())),
                    "lambda^2 = {z2} missing from sigma(a^2) = {roots_sq:?}"
                );
            }
        }
    }

    #[test]
    fn product_spectrum_probe_runs() {
        let h = builtin(Builtin::Quaternions, Mode::Rational).unwrap();
        let probe = product_spectrum_probe(&h, 1, 5).unwrap();
        assert_eq!(probe.samples, 5);
        // Associative case: the identity is a theorem, so no disagreements.
        assert_eq!(probe.disagreements, 0);
    }
}
