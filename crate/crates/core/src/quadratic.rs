//! The unique bilinear form of a quadratic algebra and everything built on
//! it: the involution, properness/composition checks, Gram-Schmidt, Riesz
//! representation, adjoints and the natural norm.
//!
//! A unital algebra is quadratic when every element satisfies a monic
//! degree-two relation `a^2 - 2<a,1> a + <a,a> 1 = 0`. The form is recovered
//! from the basis squares and then certified by full polarization (basis
//! vectors plus all pairwise sums), which decides the quadratic defect map
//! exactly over characteristic-zero fields.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::identities::Check;
use crate::matrix::Matrix;
use crate::scalar::{Mode, Scalar};
use crate::{Error, Result};

/// The trace functional `<., 1>` and Gram matrix of the bilinear form.
#[derive(Debug, Clone)]
pub struct QuadraticStructure {
    trace: Vec<Scalar>,
    gram: Matrix,
    unit: Element,
}

/// Result of [`extract`]: either the certified structure or a witness whose
/// square escapes `span{1, a}`.
#[derive(Debug, Clone)]
pub enum Extraction {
    Quadratic(QuadraticStructure),
    NotQuadratic { witness: Element },
}

impl Extraction {
    pub fn ok(self) -> Option<QuadraticStructure> {
        match self {
            Extraction::Quadratic(q) => Some(q),
            Extraction::NotQuadratic { .. } => None,
        }
    }
}

/// Properness, composition, local-field-extension and signature flags of a
/// quadratic algebra's form.
#[derive(Debug, Clone)]
pub struct FormFlags {
    pub proper: Check,
    pub permits_composition: Check,
    pub locally_field_extension: Check,
    pub positive_definite_on_unit_perp: Check,
}

impl QuadraticStructure {
    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn trace_vector(&self) -> &[Scalar] {
        &self.trace
    }

    /// `<a, 1>`.
    pub fn trace_of(&self, a: &Element) -> Scalar {
        let mut acc = Scalar::zero(a.mode());
        for (t, c) in self.trace.iter().zip(a.coords()) {
            if !t.is_zero() && !c.is_zero() {
                acc = &acc + &(t * c);
            }
        }
        acc
    }

    /// `<a, b>`.
    pub fn bilinear(&self, a: &Element, b: &Element) -> Scalar {
        let gb = self.gram.matvec(b.coords());
        let mut acc = Scalar::zero(a.mode());
        for (x, y) in a.coords().iter().zip(&gb) {
            if !x.is_zero() && !y.is_zero() {
                acc = &acc + &(x * y);
            }
        }
        acc
    }

    /// `n(a) = <a, a>`.
    pub fn norm(&self, a: &Element) -> Scalar {
        self.bilinear(a, a)
    }

    /// The involution `a* = 2<a,1>1 - a`.
    pub fn involution(&self, a: &Element) -> Element {
        let two_trace = &self.trace_of(a) * &Scalar::from_i64(2, a.mode());
        self.unit.scale(&two_trace).sub(a)
    }

    /// Matrix of the involution in the standard basis.
    pub fn involution_matrix(&self) -> Matrix {
        let n = self.unit.dim();
        let mode = self.unit.mode();
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                self.involution(&Element::basis(n, i, mode))
                    .into_coords()
            })
            .collect();
        Matrix::from_columns(&cols, mode)
    }

    /// Trace-zero component `a - <a,1> 1`.
    pub fn trace_zero_part(&self, a: &Element) -> Element {
        a.sub(&self.unit.scale(&self.trace_of(a)))
    }
}

/// Recovers the unique symmetric bilinear form of a quadratic unital
/// algebra, or a witness element whose square leaves `span{1, a}`.
pub fn extract(alg: &Algebra) -> Result<Extraction> {
    let unit = alg.find_unit().ok_or(Error::NotUnital)?;
    let n = alg.dim();
    let mode = alg.mode();
    let tol = alg.tol();

    // Per-basis trace and norm values from e_i^2 = 2 p_i e_i - n_i 1.
    let mut p = vec![Scalar::zero(mode); n];
    let mut nv = vec![Scalar::zero(mode); n];
    for i in 0..n {
        let ei = alg.basis_element(i);
        let sq = alg.multiply(&ei, &ei)?;
        if let Some(t) = scalar_multiple_of(&ei, &unit, tol) {
            p[i] = t.clone();
            nv[i] = &t * &t;
            continue;
        }
        // Solve the n x 2 system [2 e_i | -1] (p, n)^T = e_i^2; the columns
        // are independent, so a solution is unique if it exists.
        let two = Scalar::from_i64(2, mode);
        let cols = vec![
            ei.scale(&two).into_coords(),
            unit.neg().into_coords(),
        ];
        let m = Matrix::from_columns(&cols, mode);
        match m.solve(sq.coords(), tol) {
            Some(sol) => {
                p[i] = sol[0].clone();
                nv[i] = sol[1].clone();
            }
            None => return Ok(Extraction::NotQuadratic { witness: ei }),
        }
    }

    // The trace functional must send the unit to 1.
    let trace_of = |a: &Element| -> Scalar {
        let mut acc = Scalar::zero(mode);
        for (t, c) in p.iter().zip(a.coords()) {
            if !t.is_zero() && !c.is_zero() {
                acc = &acc + &(t * c);
            }
        }
        acc
    };
    if !(&trace_of(&unit) - &Scalar::one(mode)).is_zero_tol(tol) {
        return Ok(Extraction::NotQuadratic { witness: unit });
    }

    // Gram matrix from <e_i, e_j> = 2 p_i p_j - (1/2) <e_ie_j + e_je_i, 1>.
    let half = Scalar::from_ratio(1, 2, mode);
    let two = Scalar::from_i64(2, mode);
    let mut gram = Matrix::zeros(n, n, mode);
    for i in 0..n {
        for j in i..n {
            let anti = alg.basis_product(i, j).add(&alg.basis_product(j, i));
            let val = &(&(&two * &p[i]) * &p[j]) - &(&half * &trace_of(&anti));
            gram.set(i, j, val.clone());
            gram.set(j, i, val);
        }
    }
    let q = QuadraticStructure {
        trace: p.clone(),
        gram,
        unit: unit.clone(),
    };

    // Certify the defect map Q(a) = a^2 - 2<a,1>a + <a,a>1 on all basis
    // vectors and pairwise sums; polarization then gives Q = 0 everywhere.
    let defect = |a: &Element| -> Result<Element> {
        let sq = alg.multiply(a, a)?;
        let lin = a.scale(&(&two * &q.trace_of(a)));
        let con = unit.scale(&q.norm(a));
        Ok(sq.sub(&lin).add(&con))
    };
    for i in 0..n {
        let ei = alg.basis_element(i);
        if !defect(&ei)?.is_zero_tol(tol) {
            return Ok(Extraction::NotQuadratic { witness: ei });
        }
        for j in i + 1..n {
            let a = ei.add(&alg.basis_element(j));
            if !defect(&a)?.is_zero_tol(tol) {
                return Ok(Extraction::NotQuadratic { witness: a });
            }
        }
    }
    Ok(Extraction::Quadratic(q))
}

/// `Some(t)` when `a = t * b` (with `b` nonzero).
fn scalar_multiple_of(a: &Element, b: &Element, tol: f64) -> Option<Scalar> {
    let k = (0..b.dim()).find(|&k| !b.get(k).is_zero_tol(tol))?;
    let t = a.get(k) / b.get(k);
    if a.sub(&b.scale(&t)).is_zero_tol(tol) {
        Some(t)
    } else {
        None
    }
}

/// Enumerates basis vectors followed by pairwise sums `e_i + e_j` (i < j):
/// the evaluation set that decides a quadratic slot by polarization.
pub(crate) fn basis_and_pair_sums(alg: &Algebra) -> Vec<Element> {
    let n = alg.dim();
    let mut out = Vec::with_capacity(n + n * (n - 1) / 2);
    for i in 0..n {
        out.push(alg.basis_element(i));
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(alg.basis_element(i).add(&alg.basis_element(j)));
        }
    }
    out
}

/// Properness, composition and field-extension checks of the form.
pub fn form_property_checks(alg: &Algebra, q: &QuadraticStructure) -> Result<FormFlags> {
    let tol = alg.tol();
    let n = alg.dim();
    let quadratic_slot = basis_and_pair_sums(alg);

    // proper: <ab, b> = <b, b><a, 1>, linear in a, quadratic in b.
    let mut proper = Check::Holds;
    'proper: for i in 0..n {
        let a = alg.basis_element(i);
        for b in &quadratic_slot {
            let ab = alg.multiply(&a, b)?;
            let defect = &q.bilinear(&ab, b) - &(&q.norm(b) * &q.trace_of(&a));
            if !defect.is_zero_tol(tol) {
                proper = Check::fails(vec![a.clone(), b.clone()]);
                break 'proper;
            }
        }
    }

    // composition: n(ab) = n(a) n(b), biquadratic polarization over both
    // slots.
    let mut permits_composition = Check::Holds;
    'comp: for a in &quadratic_slot {
        for b in &quadratic_slot {
            let ab = alg.multiply(a, b)?;
            let defect = &q.norm(&ab) - &(&q.norm(a) * &q.norm(b));
            if !defect.is_zero_tol(tol) {
                permits_composition = Check::fails(vec![a.clone(), b.clone()]);
                break 'comp;
            }
        }
    }

    let (positive_definite_on_unit_perp, _) = unit_perp_signature(alg, q)?;
    let locally_field_extension = locally_field_extension_check(alg, q)?;

    Ok(FormFlags {
        proper,
        permits_composition,
        locally_field_extension,
        positive_definite_on_unit_perp,
    })
}

/// Positive definiteness of the form restricted to the orthogonal
/// complement of the unit, with a non-positive direction as witness.
pub fn positive_definite_on_unit_perp_check(
    alg: &Algebra,
    q: &QuadraticStructure,
) -> Result<Check> {
    Ok(unit_perp_signature(alg, q)?.0)
}

/// Local field-extension criterion. A positive-definite form certifies it:
/// for trace-zero a the discriminant is -<a,a> < 0, never a square.
/// Otherwise the diagonalization directions, basis directions and signed
/// pair sums are scanned for an explicit split direction, a trace-zero v
/// with -<v,v> zero or a rational square (such a v yields the zero-divisor
/// pair (v - s1)(v + s1) = 0). In real mode positive definiteness on the
/// unit's orthocomplement is the whole criterion.
pub fn locally_field_extension_check(alg: &Algebra, q: &QuadraticStructure) -> Result<Check> {
    let tol = alg.tol();
    let n = alg.dim();
    let (posdef, perp_witnesses) = unit_perp_signature(alg, q)?;
    if matches!(posdef, Check::Holds) {
        return Ok(Check::Holds);
    }
    if !alg.mode().is_exact() {
        return Ok(posdef);
    }
    let mut candidates: Vec<Element> = perp_witnesses;
    for i in 0..n {
        candidates.push(q.trace_zero_part(&alg.basis_element(i)));
    }
    for i in 0..n {
        for j in i + 1..n {
            let s = alg.basis_element(i).add(&alg.basis_element(j));
            let d = alg.basis_element(i).sub(&alg.basis_element(j));
            candidates.push(q.trace_zero_part(&s));
            candidates.push(q.trace_zero_part(&d));
        }
    }
    for v in &candidates {
        if v.is_zero_tol(tol) {
            continue;
        }
        let minus_norm = -&q.norm(v);
        if minus_norm.is_zero() || minus_norm.exact_sqrt().is_some() {
            return Ok(Check::fails(vec![v.clone()]));
        }
    }
    Ok(Check::Holds)
}

/// Decides positive definiteness of the gram matrix restricted to the
/// orthogonal complement of the unit, via exact congruence diagonalization.
/// On failure also returns the non-positive directions as algebra elements.
fn unit_perp_signature(alg: &Algebra, q: &QuadraticStructure) -> Result<(Check, Vec<Element>)> {
    let n = alg.dim();
    let tol = alg.tol();
    if n == 1 {
        return Ok((Check::Holds, vec![]));
    }
    // Basis of {a : <a, 1> = 0} as the kernel of the row vector G u.
    let gu = q.gram.matvec(q.unit.coords());
    let row = Matrix::from_rows(&[gu], alg.mode());
    let perp: Vec<Vec<Scalar>> = row.kernel_basis(tol);
    if perp.len() != n - 1 {
        return Ok((
            Check::fails(vec![q.unit.clone()]),
            vec![],
        ));
    }
    let b = Matrix::from_columns(&perp, alg.mode());
    let restricted = b.transpose().matmul(&q.gram).matmul(&b);
    let (p, d) = restricted.congruence_diagonalize(tol);
    let mut witnesses = Vec::new();
    for (k, dk) in d.iter().enumerate() {
        let positive = if alg.mode().is_exact() {
            dk.signum() > 0
        } else {
            dk.to_f64() > tol
        };
        if !positive {
            let v = Element::new(b.matvec(&p.column(k)));
            witnesses.push(v);
        }
    }
    if witnesses.is_empty() {
        Ok((Check::Holds, vec![]))
    } else {
        Ok((Check::fails(vec![witnesses[0].clone()]), witnesses))
    }
}

/// Gram-Schmidt orthogonalization against the algebra's bilinear form:
/// `b_{i+1} = a_{i+1} - sum <a_{i+1}, b_j>/<b_j, b_j> b_j`. Inputs must be
/// linearly independent and no intermediate may be isotropic. With
/// `normalize_if_positive` in real mode and a positive-definite form, the
/// outputs are scaled to `<b, b> = 1`.
pub fn gram_schmidt(
    q: &QuadraticStructure,
    vectors: &[Element],
    normalize_if_positive: bool,
    tol: f64,
) -> Result<Vec<Element>> {
    if vectors.is_empty() {
        return Ok(vec![]);
    }
    let mode = vectors[0].mode();
    let cols: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    let m = Matrix::from_columns(&cols, mode);
    if m.rank(tol) < vectors.len() {
        let kernel = m.kernel_basis(tol);
        let relation = kernel
            .first()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero_tol(tol))
                    .map(|(i, c)| format!("{c} * v{i}"))
                    .collect::<Vec<_>>()
                    .join(" + ")
            })
            .unwrap_or_default();
        return Err(Error::DependentInput(format!("{relation} = 0")));
    }
    let mut out: Vec<Element> = Vec::with_capacity(vectors.len());
    let mut norms: Vec<Scalar> = Vec::with_capacity(vectors.len());
    for (idx, a) in vectors.iter().enumerate() {
        let mut b = a.clone();
        for (bj, nj) in out.iter().zip(&norms) {
            let coeff = &q.bilinear(a, bj) / nj;
            b = b.sub(&bj.scale(&coeff));
        }
        let nb = q.norm(&b);
        if nb.is_zero_tol(tol) {
            return Err(Error::IsotropicStep(idx));
        }
        out.push(b);
        norms.push(nb);
    }
    if normalize_if_positive && mode == Mode::Real {
        if norms.iter().all(|n| n.to_f64() > 0.0) {
            for (b, n) in out.iter_mut().zip(&norms) {
                let scale = Scalar::Real(1.0 / n.to_f64().sqrt());
                *b = b.scale(&scale);
            }
        }
    }
    Ok(out)
}

/// Riesz representation (`phi(a) = <a, r>`) and/or the unique adjoint
/// `T* = G^{-1} T^T G`, both verified on basis pairs. Requires a
/// nondegenerate gram matrix.
pub fn riesz_and_adjoint(
    q: &QuadraticStructure,
    functional: Option<&[Scalar]>,
    operator: Option<&Matrix>,
    tol: f64,
) -> Result<(Option<Element>, Option<Matrix>)> {
    let n = q.unit.dim();
    let riesz = match functional {
        Some(phi) => {
            if phi.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: phi.len(),
                });
            }
            let x = q
                .gram
                .solve(phi, tol)
                .ok_or(Error::DegenerateForm)?;
            let r = Element::new(x);
            for i in 0..n {
                let ei = Element::basis(n, i, r.mode());
                if !(&q.bilinear(&ei, &r) - &phi[i]).is_zero_tol(tol) {
                    return Err(Error::DegenerateForm);
                }
            }
            Some(r)
        }
        None => None,
    };
    let adjoint = match operator {
        Some(t) => {
            if t.rows() != n || t.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: t.rows(),
                });
            }
            let g_inv = q.gram.inverse(tol).map_err(|_| Error::DegenerateForm)?;
            let t_star = g_inv.matmul(&t.transpose()).matmul(&q.gram);
            // <T e_i, e_j> = <e_i, T* e_j> on all basis pairs.
            let lhs = t.transpose().matmul(&q.gram);
            let rhs = q.gram.matmul(&t_star);
            if !lhs.sub(&rhs).is_zero_tol(tol) {
                return Err(Error::DegenerateForm);
            }
            Some(t_star)
        }
        None => None,
    };
    Ok((riesz, adjoint))
}

/// Natural norm: `n(a)` exactly, plus the real square root in real mode.
/// Requires the form to be positive definite on the unit's orthocomplement.
pub fn natural_norm(
    alg: &Algebra,
    q: &QuadraticStructure,
    a: &Element,
) -> Result<(Scalar, Option<f64>)> {
    let (posdef, _) = unit_perp_signature(alg, q)?;
    if !matches!(posdef, Check::Holds) {
        return Err(Error::Invalid(
            "natural norm requires a positive-definite form on the unit's orthocomplement".into(),
        ));
    }
    let n = q.norm(a);
    let value = if alg.mode() == Mode::Real {
        Some(n.to_f64().max(0.0).sqrt())
    } else {
        None
    };
    Ok((n, value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Side;
    use crate::construct::{builtin, unitize, Builtin};
    use crate::DEFAULT_TOL;

    fn quat() -> (Algebra, QuadraticStructure) {
        let alg = builtin(Builtin::Quaternions, Mode::Rational).unwrap();
        let q = extract(&alg).unwrap().ok().unwrap();
        (alg, q)
    }

    fn qs(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d, Mode::Rational)
    }

    #[test]
    fn trace_and_norm_of_a_shifted_generator() {
        let (_, q) = quat();
        // a = 2 + 3 e1 has trace 2 and norm 13: a^2 = -5 + 12 e1.
        let a = Element::from_i64(&[2, 3, 0, 0], Mode::Rational);
        assert_eq!(q.trace_of(&a), qs(2, 1));
        assert_eq!(q.norm(&a), qs(13, 1));
        // Scalars: p(t 1) = t, n(t 1) = t^2.
        let t = Element::from_i64(&[-7, 0, 0, 0], Mode::Rational);
        assert_eq!(q.trace_of(&t), qs(-7, 1));
        assert_eq!(q.norm(&t), qs(49, 1));
    }

    #[test]
    fn involution_examples() {
        let (_, q) = quat();
        let e1 = Element::basis(4, 1, Mode::Rational);
        assert_eq!(q.involution(&e1), e1.neg());
        let one = Element::basis(4, 0, Mode::Rational);
        assert_eq!(q.involution(&one), one);
        let a = Element::from_i64(&[2, 3, 0, 0], Mode::Rational);
        assert_eq!(
            q.involution(&a),
            Element::from_i64(&[2, -3, 0, 0], Mode::Rational)
        );
        // (a*)* = a and a a* = <a,a> 1.
        let (alg, _) = quat();
        assert_eq!(q.involution(&q.involution(&a)), a);
        let prod = alg.multiply(&a, &q.involution(&a)).unwrap();
        assert_eq!(prod, one.scale(&q.norm(&a)));
    }

    #[test]
    fn nonquadratic_witness_from_unitized_nilpotent_algebra() {
        // Strictly upper-triangular 3x3 matrices: E12 E23 = E13, all other
        // products zero. Unitization is unital but not quadratic.
        let mode = Mode::Rational;
        let mut table = vec![Scalar::zero(mode); 27];
        table[7] = Scalar::one(mode); // (i, j, k) = (0, 2, 1): E12 * E23 = E13
        let nil = Algebra::new(3, mode, table).unwrap();
        let unitized = unitize(&nil);
        match extract(&unitized).unwrap() {
            Extraction::NotQuadratic { witness } => {
                // The witness's square really does leave span{1, witness}.
                let sq = unitized.multiply(&witness, &witness).unwrap();
                let unit = unitized.find_unit().unwrap();
                let m = Matrix::from_columns(
                    &[unit.into_coords(), witness.into_coords()],
                    mode,
                );
                assert!(m.solve(sq.coords(), DEFAULT_TOL).is_none());
            }
            Extraction::Quadratic(_) => panic!("unitized nilpotent algebra is not quadratic"),
        }
    }

    #[test]
    fn extract_requires_a_unit() {
        let zero = Algebra::new(2, Mode::Rational, vec![Scalar::zero(Mode::Rational); 8]).unwrap();
        assert!(matches!(extract(&zero), Err(Error::NotUnital)));
    }

    #[test]
    fn octonions_are_proper_composition_locally_complex() {
        let alg = builtin(Builtin::Octonions, Mode::Rational).unwrap();
        let q = extract(&alg).unwrap().ok().unwrap();
        let flags = form_property_checks(&alg, &q).unwrap();
        assert!(matches!(flags.proper, Check::Holds));
        assert!(matches!(flags.permits_composition, Check::Holds));
        assert!(matches!(flags.locally_field_extension, Check::Holds));
        assert!(matches!(flags.positive_definite_on_unit_perp, Check::Holds));
    }

    #[test]
    fn sedenions_fail_composition_with_a_reproducible_witness() {
        let alg = builtin(Builtin::Sedenions, Mode::Rational).unwrap();
        let q = extract(&alg).unwrap().ok().unwrap();
        let flags = form_property_checks(&alg, &q).unwrap();
        assert!(matches!(flags.proper, Check::Holds));
        assert!(matches!(flags.locally_field_extension, Check::Holds));
        match &flags.permits_composition {
            Check::Fails { witness } => {
                let (a, b) = (&witness[0], &witness[1]);
                let ab = alg.multiply(a, b).unwrap();
                assert_ne!(q.norm(&ab), &q.norm(a) * &q.norm(b));
            }
            Check::Holds => panic!("sedenion form must not permit composition"),
        }
    }

    #[test]
    fn dim3_example_is_quadratic_but_not_proper() {
        // Basis {1, u, v} with u^2 = v^2 = -1, uv = u, vu = -u.
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
        set(1, 2, 1, 1); // uv = u
        set(2, 1, 1, -1); // vu = -u
        let alg = Algebra::new(n, mode, table).unwrap();
        let q = extract(&alg).unwrap().ok().expect("algebra is quadratic");
        let flags = form_property_checks(&alg, &q).unwrap();
        match &flags.proper {
            Check::Fails { witness } => {
                let (a, b) = (&witness[0], &witness[1]);
                let ab = alg.multiply(a, b).unwrap();
                let defect = &q.bilinear(&ab, b) - &(&q.norm(b) * &q.trace_of(a));
                assert!(!defect.is_zero());
            }
            Check::Holds => panic!("the dim-3 example is not proper"),
        }
    }

    #[test]
    fn gram_schmidt_example_and_errors() {
        let (_, q) = quat();
        let one_plus_e1 = Element::from_i64(&[1, 1, 0, 0], Mode::Rational);
        let e1 = Element::from_i64(&[0, 1, 0, 0], Mode::Rational);
        let out = gram_schmidt(&q, &[one_plus_e1.clone(), e1.clone()], false, DEFAULT_TOL).unwrap();
        assert_eq!(out[0], one_plus_e1);
        let expected = Element::new(vec![qs(-1, 2), qs(1, 2), qs(0, 1), qs(0, 1)]);
        assert_eq!(out[1], expected);
        assert!(q.bilinear(&out[0], &out[1]).is_zero());

        // Already orthogonal input comes back unchanged.
        let e2 = Element::from_i64(&[0, 0, 1, 0], Mode::Rational);
        let out = gram_schmidt(&q, &[e1.clone(), e2.clone()], false, DEFAULT_TOL).unwrap();
        assert_eq!(out, vec![e1.clone(), e2.clone()]);

        // Dependent input is an error carrying the dependency relation.
        let one = Element::from_i64(&[1, 0, 0, 0], Mode::Rational);
        let err = gram_schmidt(&q, &[one, e1, one_plus_e1], false, DEFAULT_TOL).unwrap_err();
        assert!(matches!(err, Error::DependentInput(_)));
    }

    #[test]
    fn riesz_and_adjoint_examples() {
        let (alg, q) = quat();
        // The trace functional is represented by the unit.
        let phi: Vec<Scalar> = q.trace_vector().to_vec();
        let (r, _) = riesz_and_adjoint(&q, Some(&phi), None, DEFAULT_TOL).unwrap();
        assert_eq!(r.unwrap(), alg.find_unit().unwrap());

        // (L_{e1})* = L_{e1*} = L_{-e1}.
        let e1 = alg.basis_element(1);
        let l = alg.mult_operator(&e1, Side::Left).unwrap();
        let (_, t_star) = riesz_and_adjoint(&q, None, Some(&l), DEFAULT_TOL).unwrap();
        let l_neg = alg.mult_operator(&e1.neg(), Side::Left).unwrap();
        assert_eq!(t_star.unwrap(), l_neg);

        // Identity is self-adjoint.
        let id = Matrix::identity(4, Mode::Rational);
        let (_, t_star) = riesz_and_adjoint(&q, None, Some(&id), DEFAULT_TOL).unwrap();
        assert_eq!(t_star.unwrap(), id);
    }

    #[test]
    fn natural_norm_examples() {
        let (alg, q) = quat();
        let a = Element::from_i64(&[2, 3, 0, 0], Mode::Rational);
        let (n, root) = natural_norm(&alg, &q, &a).unwrap();
        assert_eq!(n, qs(13, 1));
        assert!(root.is_none());
        let one = alg.find_unit().unwrap();
        assert_eq!(natural_norm(&alg, &q, &one).unwrap().0, qs(1, 1));

        let real = builtin(Builtin::Quaternions, Mode::Real).unwrap();
        let qr = extract(&real).unwrap().ok().unwrap();
        let ar = Element::from_i64(&[2, 3, 0, 0], Mode::Real);
        let (_, root) = natural_norm(&real, &qr, &ar).unwrap();
        assert!((root.unwrap() - 13f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn power_norm_identity_on_sedenions() {
        let alg = builtin(Builtin::Sedenions, Mode::Rational).unwrap();
        let q = extract(&alg).unwrap().ok().unwrap();
        let mut rng = crate::sample::rng(11);
        let a = crate::sample::random_element(&alg, &mut rng, 3);
        let a5 = alg.power_left_normed(&a, 5).unwrap();
        let n = q.norm(&a);
        let n5 = &(&(&n * &n) * &(&n * &n)) * &n;
        assert_eq!(q.norm(&a5), n5);
    }

    #[test]
    fn uniqueness_under_change_of_basis() {
        let (alg, q) = quat();
        let mut rng = crate::sample::rng(3);
        let p = crate::sample::random_unimodular_matrix(4, Mode::Rational, &mut rng);
        let b = alg.change_of_basis(&p).unwrap();
        let qb = extract(&b).unwrap().ok().unwrap();
        // Pulling the scrambled form back along P recovers the original:
        // <x, y>_B = <Px, Py>_A, so G_B = P^T G_A P.
        let pulled = p.transpose().matmul(q.gram()).matmul(&p);
        assert_eq!(qb.gram(), &pulled);
    }
}
