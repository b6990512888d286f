//! Exact computation in finite-dimensional nonassociative algebras given by
//! structure constants.
//!
//! The crate works with algebras presented by a dense structure-constant
//! tensor `e_i e_j = sum_k c[i][j][k] e_k` over exact rationals (the default)
//! or machine doubles, together with the complexifications of both. On top of
//! the tensor arithmetic it provides:
//!
//! * multiplication operators, commutators/associators, units, inverses,
//!   zero-divisor kernels, subalgebra closures ([`algebra`]);
//! * exact polynomial-identity checking by polarization over basis tuples:
//!   commutativity, associativity, flexibility, the alternative laws, the
//!   Moufang and Skornyakov identities, power-associativity probes
//!   ([`identities`]);
//! * the unique bilinear form of a quadratic algebra, its involution,
//!   properness/composition checks, Gram-Schmidt, Riesz representation,
//!   adjoints and the natural norm ([`quadratic`]);
//! * Cayley-Dickson doubling, the built-in algebras from the reals through
//!   the sedenions, complexification and unitization ([`construct`]);
//! * constructive classification of alternative division algebras onto
//!   R/C/H/O or their generalized rational forms, with explicit isomorphism
//!   matrices ([`classify`]);
//! * finite-dimensional spectra through characteristic polynomials of
//!   multiplication operators ([`spectrum`]);
//! * a JSON file format and machine-readable reports ([`io`], [`report`]).
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs, so algebras and elements can be shared freely
//! across threads.

pub mod algebra;
pub mod classify;
pub mod construct;
pub mod element;
pub mod identities;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod quadratic;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod spectrum;

pub use matrix::Matrix;
pub use algebra::Algebra;
pub use element::Element;
pub use scalar::{Mode, Scalar};

/// Default tolerance for rank decisions and defect tests in the
/// floating-point modes. Exact modes ignore it.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Errors shared by the computational modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("mixed scalar modes: {0:?} vs {1:?}")]
    MixedModes(Mode, Mode),
    #[error("algebra has no identity element")]
    NotUnital,
    #[error("declared unit fails verification at basis index {0}")]
    UnitVerification(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("gram matrix is degenerate")]
    DegenerateForm,
    #[error("input vectors are linearly dependent: {0}")]
    DependentInput(String),
    #[error("isotropic vector at step {0}: <b,b> = 0")]
    IsotropicStep(usize),
    #[error("zero is the trivial zero divisor; supply a nonzero element")]
    ZeroElement(),
    #[error("power exponent must be >= 1, got {0}")]
    BadExponent(i64),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
