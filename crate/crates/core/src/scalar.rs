//! Dual-backend scalar: exact rational arithmetic, or `f64` with a relative
//! comparison tolerance.
//!
//! Exact values are normalized rationals (lowest terms, positive denominator —
//! `BigRational` maintains this). Float values carry their tolerance so that
//! derived quantities keep comparing under the policy they were created with;
//! combining two floats takes the larger tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{GeomError, Result};

/// Default relative epsilon for the float backend.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Float,
}

#[derive(Debug, Clone)]
pub enum Scalar {
    Exact(BigRational),
    Float { value: f64, tol: f64 },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact rational `num/den`. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Exact(r)
    }

    pub fn float(value: f64) -> Self {
        Scalar::Float {
            value,
            tol: DEFAULT_TOL,
        }
    }

    pub fn float_with_tol(value: f64, tol: f64) -> Self {
        Scalar::Float { value, tol }
    }

    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Exact(_) => Backend::Exact,
            Scalar::Float { .. } => Backend::Float,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float { .. } => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or_else(|| {
                // Extremely large numerator/denominator: fall back to a
                // quotient of truncated parts.
                let n = r.numer().to_f64().unwrap_or(f64::MAX);
                let d = r.denom().to_f64().unwrap_or(f64::MAX);
                n / d
            }),
            Scalar::Float { value, .. } => *value,
        }
    }

    pub fn tol(&self) -> f64 {
        match self {
            Scalar::Exact(_) => 0.0,
            Scalar::Float { tol, .. } => *tol,
        }
    }

    /// Reinterpret under the float backend, keeping `tol` if already float.
    pub fn to_float_backend(&self) -> Scalar {
        match self {
            Scalar::Exact(_) => Scalar::float(self.to_f64()),
            s => s.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float { value, tol } => value.abs() <= tol * value.abs().max(1.0),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_one(),
            f => (f.clone() - Scalar::one()).is_zero(),
        }
    }

    /// Exact sign for the exact backend; float sign is taken literally
    /// (callers needing tolerance should test `is_zero` first).
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Exact(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Float { value, .. } => {
                if *value > 0.0 {
                    1
                } else if *value < 0.0 {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0 && !self.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0 && !self.is_zero()
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float { value, tol } => Scalar::Float {
                value: value.abs(),
                tol: *tol,
            },
        }
    }

    pub fn squared(&self) -> Scalar {
        self.clone() * self.clone()
    }

    /// Division with an explicit zero-divisor error.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(GeomError::DivisionByZero);
        }
        Ok(match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a / b),
            _ => Scalar::Float {
                value: self.to_f64() / rhs.to_f64(),
                tol: combine_tol(self, rhs),
            },
        })
    }

    /// Exact square root when the value is a perfect square of a rational.
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        match self {
            Scalar::Exact(r) => {
                if r.is_negative() {
                    return None;
                }
                let n = int_sqrt_exact(r.numer())?;
                let d = int_sqrt_exact(r.denom())?;
                Some(Scalar::Exact(BigRational::new(n, d)))
            }
            Scalar::Float { .. } => None,
        }
    }

    /// Square root: exact when possible, otherwise a float-backend value.
    /// Errors on negative input.
    pub fn sqrt(&self) -> Result<Scalar> {
        match self {
            Scalar::Exact(r) => {
                if r.is_negative() {
                    return Err(GeomError::NegativeSqrt);
                }
                if let Some(s) = self.sqrt_exact() {
                    Ok(s)
                } else {
                    Ok(Scalar::float(self.to_f64().sqrt()))
                }
            }
            Scalar::Float { value, tol } => {
                if *value < -tol * value.abs().max(1.0) {
                    return Err(GeomError::NegativeSqrt);
                }
                Ok(Scalar::Float {
                    value: value.max(0.0).sqrt(),
                    tol: *tol,
                })
            }
        }
    }
}

fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

fn combine_tol(a: &Scalar, b: &Scalar) -> f64 {
    let t = a.tol().max(b.tol());
    if t == 0.0 {
        DEFAULT_TOL
    } else {
        t
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => {
                let (x, y) = (self.to_f64(), other.to_f64());
                let tol = combine_tol(self, other);
                (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0)
            }
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                match (&self, &rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    _ => Scalar::Float {
                        value: self.to_f64() $op rhs.to_f64(),
                        tol: combine_tol(&self, &rhs),
                    },
                }
            }
        }
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.clone().$method(rhs.clone())
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Div for Scalar {
    type Output = Scalar;
    /// Panics on a zero divisor; use `checked_div` where the divisor is not
    /// known to be nonzero.
    fn div(self, rhs: Scalar) -> Scalar {
        self.checked_div(&rhs).expect("scalar division by zero")
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.clone() / rhs.clone()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float { value, tol } => Scalar::Float { value: -value, tol },
        }
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Float { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_arithmetic_is_exact() {
        let a = Scalar::ratio(1, 3);
        let b = Scalar::ratio(1, 6);
        assert_eq!(a.clone() + b.clone(), Scalar::ratio(1, 2));
        assert_eq!(a.clone() - b.clone(), Scalar::ratio(1, 6));
        assert_eq!(a.clone() * b.clone(), Scalar::ratio(1, 18));
        assert_eq!(a.checked_div(&b).unwrap(), Scalar::from_int(2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = Scalar::from_int(1);
        assert_eq!(
            a.checked_div(&Scalar::zero()),
            Err(GeomError::DivisionByZero)
        );
    }

    #[test]
    fn float_equality_uses_relative_tolerance() {
        let a = Scalar::float(1.0);
        let b = Scalar::float(1.0 + 1e-12);
        let c = Scalar::float(1.0 + 1e-6);
        assert_eq!(a, b);
        assert!(a != c);
        // relative, not absolute
        let big1 = Scalar::float(1e12);
        let big2 = Scalar::float(1e12 + 1.0);
        assert_eq!(big1, big2);
    }

    #[test]
    fn mixed_backends_compare_through_float() {
        assert_eq!(Scalar::ratio(1, 2), Scalar::float(0.5));
        assert_eq!(
            Scalar::ratio(1, 3) + Scalar::float(0.5),
            Scalar::float(5.0 / 6.0)
        );
    }

    #[test]
    fn sqrt_exact_detects_perfect_squares() {
        assert_eq!(Scalar::ratio(9, 4).sqrt_exact(), Some(Scalar::ratio(3, 2)));
        assert_eq!(Scalar::from_int(2).sqrt_exact(), None);
        assert!(Scalar::from_int(2).sqrt().unwrap().backend() == Backend::Float);
        assert!(Scalar::from_int(-1).sqrt().is_err());
    }
}
