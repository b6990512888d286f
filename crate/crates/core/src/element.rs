//! Dense coordinate vectors over the basis of an algebra.

use crate::scalar::{Mode, Scalar};
use std::fmt;

/// An algebra element as a dense coordinate vector. The length must equal
/// the owning algebra's dimension and all coordinates share one mode.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Element {
        debug_assert!(
            coords.windows(2).all(|w| w[0].mode() == w[1].mode()),
            "mixed scalar modes inside one element"
        );
        Element { coords }
    }

    pub fn zero(dim: usize, mode: Mode) -> Element {
        Element {
            coords: vec![Scalar::zero(mode); dim],
        }
    }

    /// The basis vector `e_i`.
    pub fn basis(dim: usize, i: usize, mode: Mode) -> Element {
        let mut e = Element::zero(dim, mode);
        e.coords[i] = Scalar::one(mode);
        e
    }

    pub fn from_i64(coords: &[i64], mode: Mode) -> Element {
        Element::new(coords.iter().map(|&c| Scalar::from_i64(c, mode)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn mode(&self) -> Mode {
        self.coords.first().map_or(Mode::Rational, Scalar::mode)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, v: Scalar) {
        self.coords[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.coords.iter().all(|c| c.is_zero_tol(tol))
    }

    /// Largest coordinate magnitude; the max-norm used for defect tests.
    pub fn max_norm(&self) -> f64 {
        self.coords.iter().map(Scalar::abs_f64).fold(0.0, f64::max)
    }

    pub fn add(&self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        Element::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        Element::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Element {
        Element::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element::new(self.coords.iter().map(|a| a * s).collect())
    }

    /// Embeds into the complexified mode (real coordinates, zero imaginary
    /// parts).
    pub fn complexified(&self) -> Element {
        Element::new(self.coords.iter().map(Scalar::complexified).collect())
    }

    /// Componentwise scalar conversion; `None` when any coordinate refuses.
    pub fn convert(&self, mode: Mode) -> Option<Element> {
        let coords: Option<Vec<Scalar>> = self.coords.iter().map(|c| c.convert(mode)).collect();
        coords.map(Element::new)
    }

    /// Componentwise complex conjugation (the conjugation of a complexified
    /// algebra, since the embedded basis is real).
    pub fn conj(&self) -> Element {
        Element::new(self.coords.iter().map(Scalar::conj).collect())
    }

    /// Indices of nonzero coordinates; multiplication loops skip the rest.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.coords[i].is_zero()).collect()
    }
}

impl serde::Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coords.iter())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
