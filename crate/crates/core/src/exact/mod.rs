//! Exact coefficient rings: arbitrary-precision rationals, the quadratic
//! ring `Q[t]/(t^2 - d)`, and complexifications of both.
//!
//! `d` is carried exactly as given — it is *not* reduced to a squarefree
//! kernel, and it may be a perfect square (in which case the ring has zero
//! divisors and some elements are not invertible). Binary operations require
//! both operands to share the same `d`.

mod complex;
mod quad;

pub use complex::{ComplexQuad, ComplexRational};
pub use quad::QuadElem;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Arbitrary-precision rational, always reduced, denominator always positive.
/// Both invariants are maintained by construction.
pub type Rational = num_rational::BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as a reduced rational. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("ring mismatch: operands live in Q[t]/(t^2-{0}) and Q[t]/(t^2-{1})")]
    RingMismatch(i64, i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero divisor: norm a^2 - d*b^2 = 0, element has no inverse")]
    ZeroDivisor,
    #[error("no embedding: {0} is not a square multiple of {1}")]
    NoEmbedding(i64, i64),
}

/// Commutative coefficient ring used for Cartan number coordinates.
///
/// Implementations: [`BigInt`] (integers), [`Rational`], [`QuadElem`],
/// [`ComplexQuad`], [`ComplexRational`]. The `*_like` constructors take a
/// witness element so that rings with a runtime parameter (the `d` of
/// [`QuadElem`]) can produce constants in the right ring; binary operators on
/// such rings panic on a parameter mismatch, and the fallible `try_*` methods
/// on the concrete types report it as [`ExactError::RingMismatch`] instead.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64_like(&self, n: i64) -> Self;

    /// True when the two elements may be combined by a binary operation.
    fn same_ring(&self, other: &Self) -> bool {
        let _ = other;
        true
    }

    /// Runtime ring parameter (the `d` of a quadratic ring; 0 elsewhere),
    /// used only for diagnostics.
    fn ring_param(&self) -> i64 {
        0
    }
}

/// Ring with exact division by two (everything containing the rationals).
pub trait HalfCoeff: Coeff {
    fn half(&self) -> Self;
}

/// Ring of the form `R + R*i` with `i^2 = -1`, supporting the ordinary
/// complex conjugate (negate the `i`-part; any `t`-part is untouched).
pub trait ComplexCoeff: HalfCoeff {
    fn conj_i(&self) -> Self;
    /// Multiplication by the imaginary unit.
    fn times_i(&self) -> Self;
}

/// Ring together with its complexification, used to lift Cartan numbers to
/// spinors without fixing the scalar type.
pub trait Complexify: HalfCoeff {
    type Complexified: ComplexCoeff;
    fn complexify(re: Self, im: Self) -> Self::Complexified;
}

impl Coeff for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Coeff for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        rat(n)
    }
}

impl HalfCoeff for Rational {
    fn half(&self) -> Self {
        self / rat(2)
    }
}

impl Complexify for Rational {
    type Complexified = ComplexRational;
    fn complexify(re: Self, im: Self) -> ComplexRational {
        ComplexRational::new(re, im)
    }
}

/// True iff `n` is a perfect square of a non-negative integer.
pub fn is_perfect_square(n: i64) -> bool {
    integer_sqrt(n).is_some()
}

/// The exact non-negative square root of `n`, if one exists.
pub fn integer_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = num_integer::Roots::sqrt(&n);
    (r * r == n).then_some(r)
}

/// True iff `r` is an integer (denominator one).
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Parse helpers shared by tests and the CLI: `"-3/2"`, `"5"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.parse::<Rational>().ok()
}

/// Sign-aware integer extraction; `None` unless the denominator is one.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    is_integer(r).then(|| r.numer().clone())
}

/// Absolute value, used by sampling helpers in tests.
pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}
