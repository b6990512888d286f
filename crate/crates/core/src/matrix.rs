//! Dense matrices over [`Scalar`] with exact and tolerance-based row
//! reduction.
//!
//! The exact modes clear each row to integer (or Gaussian-integer) entries
//! and run fraction-free (Bareiss) forward elimination, so every intermediate
//! entry is a minor of the cleared matrix and all divisions are exact. The
//! floating-point modes use partial pivoting with a zero tolerance.

use crate::scalar::{denominator_lcm, Mode, Scalar};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    mode: Mode,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, mode: Mode) -> Matrix {
        Matrix {
            rows,
            cols,
            mode,
            data: vec![Scalar::zero(mode); rows * cols],
        }
    }

    pub fn identity(n: usize, mode: Mode) -> Matrix {
        let mut m = Matrix::zeros(n, n, mode);
        for i in 0..n {
            m.set(i, i, Scalar::one(mode));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mode: Mode, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut m = Matrix::zeros(rows, cols, mode);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// Builds a matrix whose j-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<Scalar>], mode: Mode) -> Matrix {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        Matrix::from_fn(rows, cols, mode, |r, c| columns[c][r].clone())
    }

    pub fn from_rows(rows_data: &[Vec<Scalar>], mode: Mode) -> Matrix {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, Vec::len);
        Matrix::from_fn(rows, cols, mode, |r, c| rows_data[r][c].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.mode(), self.mode);
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.mode, |r, c| self.get(c, r).clone())
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols, self.mode);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c) + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matvec shape mismatch");
        let mut out = vec![Scalar::zero(self.mode); self.rows];
        for c in 0..self.cols {
            if v[c].is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, c);
                if a.is_zero() {
                    continue;
                }
                out[r] = &out[r] + &(a * &v[c]);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, self.mode, |r, c| self.get(r, c) + rhs.get(r, c))
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, self.mode, |r, c| self.get(r, c) - rhs.get(r, c))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.mode, |r, c| self.get(r, c) * s)
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero(self.mode);
        for i in 0..self.rows.min(self.cols) {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.data.iter().all(|v| v.is_zero_tol(tol))
    }

    /// Row reduction. Exact modes run fraction-free elimination after
    /// clearing each row to integer entries; real modes pivot by magnitude
    /// with `tol` as the zero threshold.
    pub fn row_reduce(&self, tol: f64) -> Reduction {
        let mut work = self.clone();
        let mut row_scale_det_factor: Option<BigRational> = None;
        if self.mode.is_exact() {
            // Scaling a row by a nonzero constant preserves rank, kernel and
            // row space; the determinant is corrected afterwards.
            let mut factor = BigRational::new(1.into(), 1.into());
            for r in 0..work.rows {
                let refs: Vec<&Scalar> = (0..work.cols).map(|c| work.get(r, c)).collect();
                let lcm = denominator_lcm(&refs).expect("exact mode");
                if lcm != BigInt::from(1) {
                    let s = match self.mode {
                        Mode::Rational => Scalar::Rat(BigRational::from_integer(lcm.clone())),
                        Mode::ComplexRational => Scalar::CRat(
                            BigRational::from_integer(lcm.clone()),
                            BigRational::new(0.into(), 1.into()),
                        ),
                        _ => unreachable!(),
                    };
                    for c in 0..work.cols {
                        let v = work.get(r, c) * &s;
                        work.set(r, c, v);
                    }
                    factor = factor * BigRational::from_integer(lcm);
                }
            }
            row_scale_det_factor = Some(factor);
        }

        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut sign = 1i32;
        let mut prev = Scalar::one(self.mode);
        let mut rank = 0usize;
        for col in 0..work.cols {
            // Pivot search: first nonzero in exact modes, largest magnitude
            // in real modes.
            let pivot_row = if self.mode.is_exact() {
                (rank..work.rows).find(|&r| !work.get(r, col).is_zero())
            } else {
                let mut best: Option<(usize, f64)> = None;
                for r in rank..work.rows {
                    let mag = work.get(r, col).abs_f64();
                    if mag > tol && best.map_or(true, |(_, m)| mag > m) {
                        best = Some((r, mag));
                    }
                }
                best.map(|(r, _)| r)
            };
            let Some(p) = pivot_row else { continue };
            if p != rank {
                for c in 0..work.cols {
                    let a = work.get(rank, c).clone();
                    let b = work.get(p, c).clone();
                    work.set(rank, c, b);
                    work.set(p, c, a);
                }
                sign = -sign;
            }
            let pivot = work.get(rank, col).clone();
            for r in rank + 1..work.rows {
                if self.mode.is_exact() {
                    // Bareiss step: exact division by the previous pivot.
                    let lead = work.get(r, col).clone();
                    for c in col..work.cols {
                        let v = &(&pivot * work.get(r, c)) - &(&lead * work.get(rank, c));
                        work.set(r, c, &v / &prev);
                    }
                } else {
                    let factor = work.get(r, col) / &pivot;
                    if factor.is_zero() {
                        continue;
                    }
                    work.set(r, col, Scalar::zero(self.mode));
                    for c in col + 1..work.cols {
                        let v = work.get(r, c) - &(&factor * work.get(rank, c));
                        work.set(r, c, v);
                    }
                }
            }
            if self.mode.is_exact() {
                prev = pivot;
            }
            pivots.push((rank, col));
            rank += 1;
            if rank == work.rows {
                break;
            }
        }

        Reduction {
            echelon: work,
            pivots,
            rank,
            sign,
            tol,
            row_scale_det_factor,
        }
    }

    pub fn rank(&self, tol: f64) -> usize {
        self.row_reduce(tol).rank
    }

    pub fn det(&self, tol: f64) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let red = self.row_reduce(tol);
        if red.rank < self.rows {
            return Scalar::zero(self.mode);
        }
        let mut det = if self.mode.is_exact() {
            // In Bareiss elimination the last pivot is the determinant of the
            // cleared matrix.
            let (r, c) = *red.pivots.last().expect("full rank");
            red.echelon.get(r, c).clone()
        } else {
            let mut d = Scalar::one(self.mode);
            for &(r, c) in &red.pivots {
                d = &d * red.echelon.get(r, c);
            }
            d
        };
        if red.sign < 0 {
            det = -det;
        }
        if let Some(factor) = &red.row_scale_det_factor {
            let s = match self.mode {
                Mode::Rational => Scalar::Rat(factor.recip()),
                Mode::ComplexRational => Scalar::CRat(factor.recip(), BigRational::new(0.into(), 1.into())),
                _ => unreachable!(),
            };
            det = &det * &s;
        }
        det
    }

    /// Canonical reduced row-echelon form.
    pub fn rref(&self, tol: f64) -> (Matrix, Vec<(usize, usize)>) {
        let red = self.row_reduce(tol);
        let mut m = red.echelon;
        for &(r, c) in red.pivots.iter().rev() {
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for up in 0..r {
                let lead = m.get(up, c).clone();
                if lead.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(up, j) - &(&lead * m.get(r, j));
                    m.set(up, j, v);
                }
            }
        }
        // Flush elimination residue below the tolerance in float modes.
        if !self.mode.is_exact() {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    if m.get(r, c).is_zero_tol(tol) && !m.get(r, c).is_zero() {
                        m.set(r, c, Scalar::zero(self.mode));
                    }
                }
            }
        }
        (m, red.pivots)
    }

    /// Basis of the null space `{x : Ax = 0}`, one vector per free column,
    /// in column order.
    pub fn kernel_basis(&self, tol: f64) -> Vec<Vec<Scalar>> {
        let (rref, pivots) = self.rref(tol);
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(self.mode); self.cols];
            v[free] = Scalar::one(self.mode);
            for (&(r, c), _) in pivots.iter().zip(0..) {
                v[c] = -rref.get(r, free);
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `Ax = b`, if consistent; free variables are set to
    /// zero.
    pub fn solve(&self, b: &[Scalar], tol: f64) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "solve shape mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1, self.mode);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (rref, pivots) = aug.rref(tol);
        if pivots.iter().any(|&(_, c)| c == self.cols) {
            return None; // inconsistent: pivot in the augmented column
        }
        let mut x = vec![Scalar::zero(self.mode); self.cols];
        for &(r, c) in &pivots {
            x[c] = rref.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self, tol: f64) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n, self.mode);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one(self.mode));
        }
        let (rref, pivots) = aug.rref(tol);
        if pivots.len() < n || pivots.iter().any(|&(_, c)| c >= n) {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, self.mode, |r, c| rref.get(r, n + c).clone()))
    }

    /// Monic characteristic polynomial of a square matrix, ascending
    /// coefficients `[c_0, ..., c_{n-1}, 1]`, by the Faddeev-LeVerrier
    /// recurrence. All divisions are by integers, so the exact modes stay
    /// exact.
    pub fn charpoly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols, "charpoly of a non-square matrix");
        let n = self.rows;
        let mode = self.mode;
        let mut coeffs = vec![Scalar::zero(mode); n + 1];
        coeffs[n] = Scalar::one(mode);
        let mut m = Matrix::identity(n, mode);
        for k in 1..=n {
            let am = self.matmul(&m);
            let c = &(-&am.trace()) / &Scalar::from_i64(k as i64, mode);
            m = am;
            for i in 0..n {
                let v = m.get(i, i) + &c;
                m.set(i, i, v);
            }
            coeffs[n - k] = c;
        }
        coeffs
    }

    /// Congruence diagonalization of a symmetric matrix: returns `(P, d)`
    /// with `P^T G P = diag(d)`. Real-valued modes only.
    pub fn congruence_diagonalize(&self, tol: f64) -> (Matrix, Vec<Scalar>) {
        assert_eq!(self.rows, self.cols, "congruence of a non-square matrix");
        let n = self.rows;
        let mode = self.mode;
        let mut g = self.clone();
        let mut p = Matrix::identity(n, mode);
        let nonzero = |s: &Scalar| -> bool {
            if mode.is_exact() {
                !s.is_zero()
            } else {
                !s.is_zero_tol(tol)
            }
        };
        // Column operation col_dst += f * col_src applied congruently
        // (both to columns and rows of g) and accumulated into p.
        let col_op = |g: &mut Matrix, p: &mut Matrix, dst: usize, src: usize, f: &Scalar| {
            for r in 0..n {
                let v = g.get(r, dst) + &(f * g.get(r, src));
                g.set(r, dst, v);
            }
            for c in 0..n {
                let v = g.get(dst, c) + &(f * g.get(src, c));
                g.set(dst, c, v);
            }
            for r in 0..n {
                let v = p.get(r, dst) + &(f * p.get(r, src));
                p.set(r, dst, v);
            }
        };
        for k in 0..n {
            if !nonzero(g.get(k, k)) {
                if let Some(j) = (k + 1..n).find(|&j| nonzero(g.get(j, j))) {
                    // Congruence swap of basis vectors k and j.
                    for r in 0..n {
                        let a = g.get(r, k).clone();
                        let b = g.get(r, j).clone();
                        g.set(r, k, b);
                        g.set(r, j, a);
                    }
                    for c in 0..n {
                        let a = g.get(k, c).clone();
                        let b = g.get(j, c).clone();
                        g.set(k, c, b);
                        g.set(j, c, a);
                    }
                    for r in 0..n {
                        let a = p.get(r, k).clone();
                        let b = p.get(r, j).clone();
                        p.set(r, k, b);
                        p.set(r, j, a);
                    }
                } else if let Some(j) = (k + 1..n).find(|&j| nonzero(g.get(k, j))) {
                    // All remaining diagonal entries vanish; bring the
                    // off-diagonal entry onto the diagonal (char != 2).
                    let one = Scalar::one(mode);
                    col_op(&mut g, &mut p, k, j, &one);
                } else {
                    continue; // basis vector orthogonal to the remaining block
                }
            }
            let pivot = g.get(k, k).clone();
            for j in k + 1..n {
                if !nonzero(g.get(k, j)) {
                    continue;
                }
                let f = -&(g.get(k, j) / &pivot);
                col_op(&mut g, &mut p, j, k, &f);
            }
        }
        let d = (0..n).map(|i| g.get(i, i).clone()).collect();
        (p, d)
    }
}

/// Output of forward elimination.
pub struct Reduction {
    pub echelon: Matrix,
    pub pivots: Vec<(usize, usize)>,
    pub rank: usize,
    pub sign: i32,
    pub tol: f64,
    row_scale_det_factor: Option<BigRational>,
}

impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq((0..self.rows).map(|r| self.row(r)))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
