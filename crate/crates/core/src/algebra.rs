//! Structure-constant algebras and their elementwise operations.

use crate::element::Element;
use crate::matrix::Matrix;
use crate::quadratic::QuadraticStructure;
use crate::scalar::{Mode, Scalar};
use crate::{Error, Result, DEFAULT_TOL};

/// Which multiplication operator: `L_a x = ax` or `R_a x = xa`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Null spaces attached to an element: `ab = 0`, `ba = 0`, and both at once.
/// The element is a nontrivial joint zero divisor iff `joint` is nonempty.
#[derive(Debug, Clone)]
pub struct ZeroDivisorKernels {
    pub left: Vec<Element>,
    pub right: Vec<Element>,
    pub joint: Vec<Element>,
}

/// The smallest (optionally unital) subalgebra containing a generator set,
/// together with its structure tensor in the returned basis.
#[derive(Debug, Clone)]
pub struct SubalgebraClosure {
    pub basis: Vec<Element>,
    pub restricted: Algebra,
}

/// A finite-dimensional algebra given by its structure-constant tensor
/// `e_i e_j = sum_k table[i][j][k] e_k`.
#[derive(Debug, Clone)]
pub struct Algebra {
    dim: usize,
    mode: Mode,
    /// Dense tensor, row-major `[i][j][k]`.
    table: Vec<Scalar>,
    unit: Option<Element>,
    labels: Option<Vec<String>>,
    tol: f64,
}

impl Algebra {
    /// Builds an algebra from a dense tensor. All entries must share `mode`.
    pub fn new(dim: usize, mode: Mode, table: Vec<Scalar>) -> Result<Algebra> {
        if dim == 0 {
            return Err(Error::Invalid("algebra dimension must be positive".into()));
        }
        if table.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: table.len(),
            });
        }
        if let Some(bad) = table.iter().find(|s| s.mode() != mode) {
            return Err(Error::MixedModes(mode, bad.mode()));
        }
        Ok(Algebra {
            dim,
            mode,
            table,
            unit: None,
            labels: None,
            tol: DEFAULT_TOL,
        })
    }

    /// Declares the identity element; verified against every basis vector.
    pub fn with_unit(mut self, unit: Element) -> Result<Algebra> {
        self.check_element(&unit)?;
        for j in 0..self.dim {
            let ej = Element::basis(self.dim, j, self.mode);
            let left = self.multiply(&unit, &ej)?;
            let right = self.multiply(&ej, &unit)?;
            if !left.sub(&ej).is_zero_tol(self.tol) || !right.sub(&ej).is_zero_tol(self.tol) {
                return Err(Error::UnitVerification(j));
            }
        }
        self.unit = Some(unit);
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Algebra {
        self.labels = Some(labels);
        self
    }

    /// Overrides the zero tolerance used by rank decisions in the real
    /// modes. Exact modes ignore it.
    pub fn with_tolerance(mut self, tol: f64) -> Algebra {
        self.tol = tol;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn table_entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    /// Tensor equality, bit-exact.
    pub fn same_table(&self, other: &Algebra) -> bool {
        self.dim == other.dim && self.mode == other.mode && self.table == other.table
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i, self.mode)
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.dim, self.mode)
    }

    pub fn scalar_zero(&self) -> Scalar {
        Scalar::zero(self.mode)
    }

    pub fn scalar_one(&self) -> Scalar {
        Scalar::one(self.mode)
    }

    /// The product `e_i e_j` as an element.
    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        let base = (i * self.dim + j) * self.dim;
        Element::new(self.table[base..base + self.dim].to_vec())
    }

    fn check_element(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        if x.mode() != self.mode {
            return Err(Error::MixedModes(self.mode, x.mode()));
        }
        Ok(())
    }

    /// Bilinear product `xy = sum_{i,j} x_i y_j (e_i e_j)`. Zero coordinates
    /// are skipped, so products of sparse elements stay cheap.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        let n = self.dim;
        let mut acc = vec![Scalar::zero(self.mode); n];
        for i in 0..n {
            let xi = x.get(i);
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                let yj = y.get(j);
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                let base = (i * n + j) * n;
                for (k, acc_k) in acc.iter_mut().enumerate() {
                    let t = &self.table[base + k];
                    if !t.is_zero() {
                        *acc_k = &*acc_k + &(&c * t);
                    }
                }
            }
        }
        Ok(Element::new(acc))
    }

    /// The matrix of `L_a` (columns `a e_j`) or `R_a` (columns `e_j a`) in
    /// the standard basis.
    pub fn mult_operator(&self, a: &Element, side: Side) -> Result<Matrix> {
        self.check_element(a)?;
        let n = self.dim;
        let mut columns = Vec::with_capacity(n);
        for j in 0..n {
            let ej = self.basis_element(j);
            let col = match side {
                Side::Left => self.multiply(a, &ej)?,
                Side::Right => self.multiply(&ej, a)?,
            };
            columns.push(col.into_coords());
        }
        Ok(Matrix::from_columns(&columns, self.mode))
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(self.multiply(a, b)?.sub(&self.multiply(b, a)?))
    }

    /// `(ab)c - a(bc)`.
    pub fn associator(&self, a: &Element, b: &Element, c: &Element) -> Result<Element> {
        let ab_c = self.multiply(&self.multiply(a, b)?, c)?;
        let a_bc = self.multiply(a, &self.multiply(b, c)?)?;
        Ok(ab_c.sub(&a_bc))
    }

    /// Commutator when `c` is absent, associator otherwise.
    pub fn commutator_associator(
        &self,
        a: &Element,
        b: &Element,
        c: Option<&Element>,
    ) -> Result<Element> {
        match c {
            None => self.commutator(a, b),
            Some(c) => self.associator(a, b, c),
        }
    }

    /// Jordan product `(ab + ba) / 2`; commutative by construction.
    pub fn jordan_product(&self, a: &Element, b: &Element) -> Result<Element> {
        let s = self.multiply(a, b)?.add(&self.multiply(b, a)?);
        let half = Scalar::from_ratio(1, 2, self.mode);
        Ok(s.scale(&half))
    }

    /// `a^1 = a`, `a^{k+1} = a * a^k`.
    pub fn power_left_normed(&self, a: &Element, k: i64) -> Result<Element> {
        if k < 1 {
            return Err(Error::BadExponent(k));
        }
        self.check_element(a)?;
        let mut acc = a.clone();
        for _ in 1..k {
            acc = self.multiply(a, &acc)?;
        }
        Ok(acc)
    }

    /// The unique two-sided identity, if one exists. A declared unit is
    /// returned as-is (it was verified at construction).
    pub fn find_unit(&self) -> Option<Element> {
        if let Some(u) = &self.unit {
            return Some(u.clone());
        }
        // Stack the conditions e * e_j = e_j and e_j * e = e_j over all j:
        // rows indexed by (side, j, k), unknowns the coordinates of e.
        let n = self.dim;
        let mut m = Matrix::zeros(2 * n * n, n, self.mode);
        let mut rhs = vec![Scalar::zero(self.mode); 2 * n * n];
        for j in 0..n {
            for k in 0..n {
                for i in 0..n {
                    m.set(j * n + k, i, self.table_entry(i, j, k).clone());
                    m.set(n * n + j * n + k, i, self.table_entry(j, i, k).clone());
                }
                if j == k {
                    rhs[j * n + k] = Scalar::one(self.mode);
                    rhs[n * n + j * n + k] = Scalar::one(self.mode);
                }
            }
        }
        let candidate = Element::new(m.solve(&rhs, self.tol)?);
        // A two-sided identity is unique, so the solution, if consistent, is
        // it; verify to guard against tolerance artifacts in real mode.
        for j in 0..n {
            let ej = self.basis_element(j);
            let l = self.multiply(&candidate, &ej).ok()?;
            let r = self.multiply(&ej, &candidate).ok()?;
            if !l.sub(&ej).is_zero_tol(self.tol) || !r.sub(&ej).is_zero_tol(self.tol) {
                return None;
            }
        }
        Some(candidate)
    }

    /// Builds the identity element from an algebraic element with a known
    /// vanishing relation `a^m + c_{m-1} a^{m-1} + ... + c_1 a = 0`
    /// (`relation = [c_1, ..., c_{m-1}]`, leading coefficient monic,
    /// `c_1 != 0`). Powers are taken left-normed, the relation is verified,
    /// the subalgebra generated by `a` is checked to be associative, and the
    /// constructed idempotent is verified to be an identity for it.
    pub fn unit_from_element(&self, a: &Element, relation: &[Scalar]) -> Result<Element> {
        self.check_element(a)?;
        let m = relation.len() + 1;
        if m < 2 {
            return Err(Error::Invalid(
                "relation must have degree at least 2".into(),
            ));
        }
        let c1 = &relation[0];
        if c1.is_zero() {
            return Err(Error::Invalid("relation has c_1 = 0".into()));
        }
        // Left-normed powers a^1 .. a^m.
        let mut powers = Vec::with_capacity(m);
        powers.push(a.clone());
        for _ in 1..m {
            powers.push(self.multiply(a, powers.last().unwrap())?);
        }
        let mut defect = powers[m - 1].clone();
        for (i, c) in relation.iter().enumerate() {
            defect = defect.add(&powers[i].scale(c));
        }
        if !defect.is_zero_tol(self.tol) {
            return Err(Error::Invalid(format!(
                "relation does not annihilate the element (defect {defect})"
            )));
        }
        // The construction presumes the subalgebra generated by `a` is
        // associative; decide it on the closure's structure tensor.
        let closure = self.subalgebra_closure(&[a.clone()], false)?;
        let r = &closure.restricted;
        for i in 0..r.dim() {
            for j in 0..r.dim() {
                for k in 0..r.dim() {
                    let d = r.associator(
                        &r.basis_element(i),
                        &r.basis_element(j),
                        &r.basis_element(k),
                    )?;
                    if !d.is_zero_tol(self.tol) {
                        return Err(Error::Invalid(format!(
                            "subalgebra generated by the element is not associative \
                             (associator defect at basis triple ({i},{j},{k}))"
                        )));
                    }
                }
            }
        }
        // e := -c1^{-1} (a^{m-1} + c_{m-1} a^{m-2} + ... + c_2 a).
        let c1_inv = c1.inv().expect("c_1 is nonzero");
        let mut e = powers[m - 2].clone();
        for i in 2..m {
            e = e.add(&powers[i - 2].scale(&relation[i - 1]));
        }
        e = e.scale(&(-&c1_inv));
        // Verify e^2 = e, ea = ae = a, and that e is an identity for the
        // generated subalgebra.
        let ee = self.multiply(&e, &e)?;
        if !ee.sub(&e).is_zero_tol(self.tol) {
            return Err(Error::Invalid("constructed element is not idempotent".into()));
        }
        let ea = self.multiply(&e, a)?;
        let ae = self.multiply(a, &e)?;
        if !ea.sub(a).is_zero_tol(self.tol) || !ae.sub(a).is_zero_tol(self.tol) {
            return Err(Error::Invalid("constructed idempotent does not fix the element".into()));
        }
        for b in &closure.basis {
            let eb = self.multiply(&e, b)?;
            let be = self.multiply(b, &e)?;
            if !eb.sub(b).is_zero_tol(self.tol) || !be.sub(b).is_zero_tol(self.tol) {
                return Err(Error::Invalid(
                    "constructed idempotent is not an identity on the generated subalgebra".into(),
                ));
            }
        }
        Ok(e)
    }

    /// Two-sided inverse of `a`, or `None`. Solves `L_a b = 1`, then demands
    /// `ba = 1` and `L_a L_b = L_b L_a = I` (so the inverse is unique even
    /// without associativity). With a quadratic structure and `<a,a> != 0`
    /// the closed form `(2<a,1>1 - a) / <a,a>` is used and verified.
    pub fn inverse(&self, a: &Element, q: Option<&QuadraticStructure>) -> Result<Option<Element>> {
        self.check_element(a)?;
        let unit = self.find_unit().ok_or(Error::NotUnital)?;
        if let Some(q) = q {
            let norm = q.norm(a);
            if !norm.is_zero_tol(self.tol) {
                let twice_trace = &q.trace_of(a) * &Scalar::from_i64(2, self.mode);
                let b = unit
                    .scale(&twice_trace)
                    .sub(a)
                    .scale(&norm.inv().expect("nonzero norm"));
                if self.verifies_as_inverse(a, &b, &unit)? {
                    return Ok(Some(b));
                }
            }
        }
        let l = self.mult_operator(a, Side::Left)?;
        let Some(b) = l.solve(unit.coords(), self.tol) else {
            return Ok(None);
        };
        let b = Element::new(b);
        if self.verifies_as_inverse(a, &b, &unit)? {
            Ok(Some(b))
        } else {
            Ok(None)
        }
    }

    fn verifies_as_inverse(&self, a: &Element, b: &Element, unit: &Element) -> Result<bool> {
        let ab = self.multiply(a, b)?;
        let ba = self.multiply(b, a)?;
        if !ab.sub(unit).is_zero_tol(self.tol) || !ba.sub(unit).is_zero_tol(self.tol) {
            return Ok(false);
        }
        let la = self.mult_operator(a, Side::Left)?;
        let lb = self.mult_operator(b, Side::Left)?;
        let id = Matrix::identity(self.dim, self.mode);
        Ok(la.matmul(&lb).sub(&id).is_zero_tol(self.tol)
            && lb.matmul(&la).sub(&id).is_zero_tol(self.tol))
    }

    /// Exact (or rank-revealing, in real mode) bases of the null spaces of
    /// `L_a`, `R_a`, and of the stacked system.
    pub fn zero_divisor_kernels(&self, a: &Element) -> Result<ZeroDivisorKernels> {
        self.check_element(a)?;
        if a.is_zero() {
            return Err(Error::ZeroElement());
        }
        let l = self.mult_operator(a, Side::Left)?;
        let r = self.mult_operator(a, Side::Right)?;
        let n = self.dim;
        let stacked = Matrix::from_fn(2 * n, n, self.mode, |row, c| {
            if row < n {
                l.get(row, c).clone()
            } else {
                r.get(row - n, c).clone()
            }
        });
        let to_elements = |vs: Vec<Vec<Scalar>>| vs.into_iter().map(Element::new).collect();
        Ok(ZeroDivisorKernels {
            left: to_elements(l.kernel_basis(self.tol)),
            right: to_elements(r.kernel_basis(self.tol)),
            joint: to_elements(stacked.kernel_basis(self.tol)),
        })
    }

    /// Smallest subalgebra containing the generators (and the identity when
    /// `adjoin_unit` is set), plus its structure tensor in the returned
    /// basis. The basis is the reduced row-echelon basis of the closed span,
    /// so it is canonical for a given generator list.
    pub fn subalgebra_closure(
        &self,
        generators: &[Element],
        adjoin_unit: bool,
    ) -> Result<SubalgebraClosure> {
        if generators.is_empty() {
            return Err(Error::Invalid("generator list is empty".into()));
        }
        for g in generators {
            self.check_element(g)?;
        }
        let mut span: Vec<Element> = Vec::new();
        if adjoin_unit {
            span.push(self.find_unit().ok_or(Error::NotUnital)?);
        }
        span.extend(generators.iter().cloned());
        let mut basis = self.reduce_span(&span);
        loop {
            let mut extended: Vec<Element> = basis.clone();
            for x in &basis {
                for y in &basis {
                    extended.push(self.multiply(x, y)?);
                }
            }
            let new_basis = self.reduce_span(&extended);
            if new_basis.len() == basis.len() {
                basis = new_basis;
                break;
            }
            basis = new_basis;
        }
        // Structure tensor of the restriction: coordinates of each pairwise
        // product in the closure basis, read off one augmented reduction.
        let d = basis.len();
        let b = Matrix::from_columns(
            &basis.iter().map(|e| e.coords().to_vec()).collect::<Vec<_>>(),
            self.mode,
        );
        let mut aug_cols: Vec<Vec<Scalar>> = Vec::with_capacity(d + d * d);
        for c in 0..d {
            aug_cols.push(b.column(c));
        }
        for x in &basis {
            for y in &basis {
                aug_cols.push(self.multiply(x, y)?.into_coords());
            }
        }
        let aug = Matrix::from_columns(&aug_cols, self.mode);
        let (rref, pivots) = aug.rref(self.tol);
        if pivots.len() != d || pivots.iter().any(|&(_, c)| c >= d) {
            return Err(Error::Invalid(
                "closure basis failed to express its own products".into(),
            ));
        }
        let mut table = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                let col = d + i * d + j;
                for k in 0..d {
                    table.push(rref.get(k, col).clone());
                }
            }
        }
        let restricted = Algebra::new(d, self.mode, table)?.with_tolerance(self.tol);
        Ok(SubalgebraClosure { basis, restricted })
    }

    /// Canonical basis (reduced row-echelon rows) of the span of `vectors`.
    fn reduce_span(&self, vectors: &[Element]) -> Vec<Element> {
        let rows: Vec<Vec<Scalar>> = vectors.iter().map(|e| e.coords().to_vec()).collect();
        let m = Matrix::from_rows(&rows, self.mode);
        let (rref, pivots) = m.rref(self.tol);
        pivots
            .iter()
            .map(|&(r, _)| Element::new(rref.row(r)))
            .collect()
    }

    /// Exact null-space bases of the centre conditions `[a, e_i] = 0` and of
    /// the three associator slots against all basis pairs.
    pub fn center_and_nucleus(&self) -> (Vec<Element>, Vec<Element>) {
        let n = self.dim;
        // Centre: (L_{e_i} - R_{e_i}) a = 0 for all i.
        let mut center_rows: Vec<Vec<Scalar>> = Vec::with_capacity(n * n);
        for i in 0..n {
            let ei = self.basis_element(i);
            let l = self.mult_operator(&ei, Side::Left).expect("basis element");
            let r = self.mult_operator(&ei, Side::Right).expect("basis element");
            let diff = l.sub(&r);
            for row in 0..n {
                center_rows.push(diff.row(row));
            }
        }
        let center = Matrix::from_rows(&center_rows, self.mode)
            .kernel_basis(self.tol)
            .into_iter()
            .map(Element::new)
            .collect();

        // Nucleus: vanishing of [a, e_i, e_j], [e_i, a, e_j], [e_i, e_j, a].
        let mut ops: Vec<Matrix> = Vec::new();
        let l_op: Vec<Matrix> = (0..n)
            .map(|i| self.mult_operator(&self.basis_element(i), Side::Left).unwrap())
            .collect();
        let r_op: Vec<Matrix> = (0..n)
            .map(|i| self.mult_operator(&self.basis_element(i), Side::Right).unwrap())
            .collect();
        for i in 0..n {
            for j in 0..n {
                let prod = self.basis_product(i, j);
                let l_prod = self.mult_operator(&prod, Side::Left).unwrap();
                let r_prod = self.mult_operator(&prod, Side::Right).unwrap();
                // (a e_i) e_j - a (e_i e_j)
                ops.push(r_op[j].matmul(&r_op[i]).sub(&r_prod));
                // (e_i a) e_j - e_i (a e_j)
                ops.push(r_op[j].matmul(&l_op[i]).sub(&l_op[i].matmul(&r_op[j])));
                // (e_i e_j) a - e_i (e_j a)
                ops.push(l_prod.sub(&l_op[i].matmul(&l_op[j])));
            }
        }
        let mut nucleus_rows: Vec<Vec<Scalar>> = Vec::with_capacity(ops.len() * n);
        for op in &ops {
            for row in 0..n {
                nucleus_rows.push(op.row(row));
            }
        }
        let nucleus = Matrix::from_rows(&nucleus_rows, self.mode)
            .kernel_basis(self.tol)
            .into_iter()
            .map(Element::new)
            .collect();
        (center, nucleus)
    }

    /// Conjugates the structure tensor: the result `B` multiplies by
    /// `x *_B y = P^{-1}(Px *_A Py)`, so `P` is an isomorphism from `B`
    /// onto `A`.
    pub fn change_of_basis(&self, p: &Matrix) -> Result<Algebra> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.rows(),
            });
        }
        if p.mode() != self.mode {
            return Err(Error::MixedModes(self.mode, p.mode()));
        }
        let p_inv = p.inverse(self.tol)?;
        let n = self.dim;
        let images: Vec<Element> = (0..n).map(|j| Element::new(p.column(j))).collect();
        let mut table = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let prod = self.multiply(&images[i], &images[j])?;
                let back = p_inv.matvec(prod.coords());
                table.extend(back);
            }
        }
        let mut out = Algebra::new(n, self.mode, table)?.with_tolerance(self.tol);
        if let Some(u) = &self.unit {
            let back = Element::new(p_inv.matvec(u.coords()));
            out = out.with_unit(back)?;
        }
        Ok(out)
    }

    /// Reinterprets the tensor over the given mode (entrywise conversion).
    pub fn convert(&self, mode: Mode) -> Option<Algebra> {
        let table: Option<Vec<Scalar>> = self.table.iter().map(|s| s.convert(mode)).collect();
        let mut out = Algebra {
            dim: self.dim,
            mode,
            table: table?,
            unit: None,
            labels: self.labels.clone(),
            tol: self.tol,
        };
        if let Some(u) = &self.unit {
            out.unit = Some(u.convert(mode)?);
        }
        Some(out)
    }
}
