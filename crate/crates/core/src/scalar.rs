//! Scalars: exact rationals, machine doubles, and their complexifications.
//!
//! Every algebra fixes one [`Mode`] and all scalars flowing through it share
//! that mode. The exact modes store reduced arbitrary-precision fractions
//! (`num_rational` keeps gcd(|num|, den) = 1 and den > 0); the real modes
//! store doubles. Complex scalars are ordered pairs with the usual product
//! `(a,b)(c,d) = (ac - bd, ad + bc)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Scalar mode of an algebra. Exact modes compare bit-exactly; the real
/// modes are compared against a caller-supplied tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Mode {
    Rational,
    Real,
    ComplexRational,
    ComplexReal,
}

impl Mode {
    pub fn is_exact(self) -> bool {
        matches!(self, Mode::Rational | Mode::ComplexRational)
    }

    pub fn is_complex(self) -> bool {
        matches!(self, Mode::ComplexRational | Mode::ComplexReal)
    }

    /// Mode of the complexification of an algebra in this mode.
    pub fn complexified(self) -> Mode {
        match self {
            Mode::Rational | Mode::ComplexRational => Mode::ComplexRational,
            Mode::Real | Mode::ComplexReal => Mode::ComplexReal,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Rational => write!(f, "rational"),
            Mode::Real => write!(f, "real"),
            Mode::ComplexRational => write!(f, "complex-rational"),
            Mode::ComplexReal => write!(f, "complex-real"),
        }
    }
}

/// A field element in one of the four supported modes.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rat(BigRational),
    Real(f64),
    CRat(BigRational, BigRational),
    CReal(f64, f64),
}

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Rat(_) => Mode::Rational,
            Scalar::Real(_) => Mode::Real,
            Scalar::CRat(_, _) => Mode::ComplexRational,
            Scalar::CReal(_, _) => Mode::ComplexReal,
        }
    }

    pub fn zero(mode: Mode) -> Scalar {
        Scalar::from_i64(0, mode)
    }

    pub fn one(mode: Mode) -> Scalar {
        Scalar::from_i64(1, mode)
    }

    pub fn from_i64(n: i64, mode: Mode) -> Scalar {
        match mode {
            Mode::Rational => Scalar::Rat(BigRational::from_integer(n.into())),
            Mode::Real => Scalar::Real(n as f64),
            Mode::ComplexRational => Scalar::CRat(
                BigRational::from_integer(n.into()),
                BigRational::zero(),
            ),
            Mode::ComplexReal => Scalar::CReal(n as f64, 0.0),
        }
    }

    pub fn from_ratio(num: i64, den: i64, mode: Mode) -> Scalar {
        assert!(den != 0, "zero denominator");
        match mode {
            Mode::Rational => Scalar::Rat(BigRational::new(num.into(), den.into())),
            Mode::Real => Scalar::Real(num as f64 / den as f64),
            Mode::ComplexRational => {
                Scalar::CRat(BigRational::new(num.into(), den.into()), BigRational::zero())
            }
            Mode::ComplexReal => Scalar::CReal(num as f64 / den as f64, 0.0),
        }
    }

    pub fn rational(r: BigRational) -> Scalar {
        Scalar::Rat(r)
    }

    /// The imaginary unit in a complex mode.
    pub fn i(mode: Mode) -> Scalar {
        match mode {
            Mode::ComplexRational => Scalar::CRat(BigRational::zero(), BigRational::one()),
            Mode::ComplexReal => Scalar::CReal(0.0, 1.0),
            _ => panic!("imaginary unit requested in real mode {mode}"),
        }
    }

    /// Embeds this scalar into the complexification of its mode.
    pub fn complexified(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::CRat(r.clone(), BigRational::zero()),
            Scalar::Real(x) => Scalar::CReal(*x, 0.0),
            other => other.clone(),
        }
    }

    /// Complex conjugate; identity on the real modes.
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::CRat(re, im) => Scalar::CRat(re.clone(), -im),
            Scalar::CReal(re, im) => Scalar::CReal(*re, -im),
            other => other.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Real(x) => *x == 0.0,
            Scalar::CRat(re, im) => re.is_zero() && im.is_zero(),
            Scalar::CReal(re, im) => *re == 0.0 && *im == 0.0,
        }
    }

    /// Zero test with a tolerance in the floating-point modes; exact in the
    /// rational modes.
    pub fn is_zero_tol(&self, tol: f64) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Real(x) => x.abs() <= tol,
            Scalar::CRat(re, im) => re.is_zero() && im.is_zero(),
            Scalar::CReal(re, im) => re.hypot(*im) <= tol,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Real(x) => *x == 1.0,
            Scalar::CRat(re, im) => re.is_one() && im.is_zero(),
            Scalar::CReal(re, im) => *re == 1.0 && *im == 0.0,
        }
    }

    /// Magnitude used for pivot selection and defect norms. Exact rationals
    /// report their approximate absolute value.
    pub fn abs_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => ratio_to_f64(r).abs(),
            Scalar::Real(x) => x.abs(),
            Scalar::CRat(re, im) => ratio_to_f64(re).hypot(ratio_to_f64(im)),
            Scalar::CReal(re, im) => re.hypot(*im),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Real(x) => Scalar::Real(1.0 / x),
            Scalar::CRat(re, im) => {
                let n = re * re + im * im;
                Scalar::CRat(re / &n, -im / n)
            }
            Scalar::CReal(re, im) => {
                let n = re * re + im * im;
                Scalar::CReal(re / n, -im / n)
            }
        })
    }

    pub fn real_part(&self) -> Scalar {
        match self {
            Scalar::CRat(re, _) => Scalar::Rat(re.clone()),
            Scalar::CReal(re, _) => Scalar::Real(*re),
            other => other.clone(),
        }
    }

    pub fn imag_part(&self) -> Scalar {
        match self {
            Scalar::CRat(_, im) => Scalar::Rat(im.clone()),
            Scalar::CReal(_, im) => Scalar::Real(*im),
            Scalar::Rat(_) => Scalar::Rat(BigRational::zero()),
            Scalar::Real(_) => Scalar::Real(0.0),
        }
    }

    /// Approximate value as a complex double.
    pub fn to_c64(&self) -> (f64, f64) {
        match self {
            Scalar::Rat(r) => (ratio_to_f64(r), 0.0),
            Scalar::Real(x) => (*x, 0.0),
            Scalar::CRat(re, im) => (ratio_to_f64(re), ratio_to_f64(im)),
            Scalar::CReal(re, im) => (*re, *im),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_c64().0
    }

    /// Converts into the given mode when the conversion is lossless enough:
    /// exact -> real goes through `f64`, real -> exact is refused.
    pub fn convert(&self, mode: Mode) -> Option<Scalar> {
        if self.mode() == mode {
            return Some(self.clone());
        }
        match (self, mode) {
            (Scalar::Rat(r), Mode::Real) => Some(Scalar::Real(ratio_to_f64(r))),
            (Scalar::Rat(r), Mode::ComplexRational) => {
                Some(Scalar::CRat(r.clone(), BigRational::zero()))
            }
            (Scalar::Rat(r), Mode::ComplexReal) => Some(Scalar::CReal(ratio_to_f64(r), 0.0)),
            (Scalar::Real(x), Mode::ComplexReal) => Some(Scalar::CReal(*x, 0.0)),
            (Scalar::CRat(re, im), Mode::ComplexReal) => {
                Some(Scalar::CReal(ratio_to_f64(re), ratio_to_f64(im)))
            }
            _ => None,
        }
    }

    /// Exact rational payload, if this is a real-rational scalar.
    pub fn as_ratio(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// For exact rationals: `Some(sqrt)` when the value is a perfect square
    /// in Q, decided by exact integer square roots of the reduced numerator
    /// and denominator.
    pub fn exact_sqrt(&self) -> Option<Scalar> {
        let r = self.as_ratio()?;
        if r.is_negative() {
            return None;
        }
        let num = exact_uint_sqrt(r.numer().magnitude())?;
        let den = exact_uint_sqrt(r.denom().magnitude())?;
        Some(Scalar::Rat(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    /// Sign of a real-valued scalar: -1, 0, or 1. Complex modes panic.
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Real(x) => {
                if *x == 0.0 {
                    0
                } else if *x > 0.0 {
                    1
                } else {
                    -1
                }
            }
            _ => panic!("signum of a complex scalar"),
        }
    }

    /// Parses "p/q", an integer, or a decimal string according to `mode`.
    pub fn parse(text: &str, mode: Mode) -> Result<Scalar, String> {
        let text = text.trim();
        match mode {
            Mode::Rational => parse_ratio(text).map(Scalar::Rat),
            Mode::Real => {
                let x: f64 = text
                    .parse()
                    .map_err(|_| format!("invalid real scalar {text:?}"))?;
                if !x.is_finite() {
                    return Err(format!("non-finite real scalar {text:?}"));
                }
                Ok(Scalar::Real(x))
            }
            Mode::ComplexRational | Mode::ComplexReal => {
                Err("complex scalars are not part of the file format".into())
            }
        }
    }
}

fn parse_ratio(text: &str) -> Result<BigRational, String> {
    let mk_err = || format!("invalid rational scalar {text:?}");
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| mk_err())?;
        let den: BigInt = den.trim().parse().map_err(|_| mk_err())?;
        if den.is_zero() {
            return Err(format!("zero denominator in {text:?}"));
        }
        Ok(BigRational::new(num, den))
    } else {
        let num: BigInt = text.parse().map_err(|_| mk_err())?;
        Ok(BigRational::from_integer(num))
    }
}

fn exact_uint_sqrt(n: &BigUint) -> Option<BigUint> {
    let root = n.sqrt();
    if &root * &root == *n {
        Some(root)
    } else {
        None
    }
}

/// Rounds a big rational to the nearest double. `BigRational::to_f64` is
/// exact rounding in num-rational.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Least common multiple of the denominators appearing in `s`, used when
/// clearing a matrix row to integers before fraction-free elimination.
pub fn denominator_lcm(values: &[&Scalar]) -> Option<BigInt> {
    let mut acc = BigInt::one();
    for v in values {
        match v {
            Scalar::Rat(r) => acc = acc.lcm(r.denom()),
            Scalar::CRat(re, im) => {
                acc = acc.lcm(re.denom());
                acc = acc.lcm(im.denom());
            }
            _ => return None,
        }
    }
    Some(acc)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a $op b),
                    (Scalar::Real(a), Scalar::Real(b)) => Scalar::Real(a $op b),
                    (a, b) => complex_binop(a, b, stringify!($method)),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

fn complex_binop(a: &Scalar, b: &Scalar, op: &str) -> Scalar {
    match (a, b, op) {
        (Scalar::CRat(ar, ai), Scalar::CRat(br, bi), "add") => Scalar::CRat(ar + br, ai + bi),
        (Scalar::CRat(ar, ai), Scalar::CRat(br, bi), "sub") => Scalar::CRat(ar - br, ai - bi),
        (Scalar::CRat(ar, ai), Scalar::CRat(br, bi), "mul") => {
            Scalar::CRat(ar * br - ai * bi, ar * bi + ai * br)
        }
        (Scalar::CReal(ar, ai), Scalar::CReal(br, bi), "add") => Scalar::CReal(ar + br, ai + bi),
        (Scalar::CReal(ar, ai), Scalar::CReal(br, bi), "sub") => Scalar::CReal(ar - br, ai - bi),
        (Scalar::CReal(ar, ai), Scalar::CReal(br, bi), "mul") => {
            Scalar::CReal(ar * br - ai * bi, ar * bi + ai * br)
        }
        _ => panic!("mixed scalar modes in {op}: {:?} vs {:?}", a.mode(), b.mode()),
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Real(x) => Scalar::Real(-x),
            Scalar::CRat(re, im) => Scalar::CRat(-re, -im),
            Scalar::CReal(re, im) => Scalar::CReal(-re, -im),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Real(x) => write!(f, "{x:?}"),
            Scalar::CRat(re, im) => write!(f, "{re}{}{}i", if im.is_negative() { "" } else { "+" }, im),
            Scalar::CReal(re, im) => write!(f, "{re:?}{}{:?}i", if *im < 0.0 { "" } else { "+" }, im),
        }
    }
}
