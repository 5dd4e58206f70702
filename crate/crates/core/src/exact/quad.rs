//! The quadratic ring `Q[t]/(t^2 - d)` with exact rational coordinates.

use super::{rat, Coeff, ExactError, HalfCoeff, Rational};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b*t` in `Q[t]/(t^2 - d)`.
///
/// `d` is part of the value; operands of binary operations must agree on it.
/// `d` may be negative or a perfect square — the latter makes the ring split
/// (it has zero divisors), which is handled by [`QuadElem::inv`] reporting
/// [`ExactError::ZeroDivisor`] where applicable.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadElem {
    pub a: Rational,
    pub b: Rational,
    pub d: i64,
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}t | t^2={})", self.a, self.b, self.d)
    }
}

impl QuadElem {
    pub fn new(a: Rational, b: Rational, d: i64) -> Self {
        QuadElem { a, b, d }
    }

    /// The rational `r` viewed inside the ring with parameter `d`.
    pub fn from_rational(r: Rational, d: i64) -> Self {
        QuadElem::new(r, Rational::zero(), d)
    }

    pub fn from_i64(n: i64, d: i64) -> Self {
        QuadElem::from_rational(rat(n), d)
    }

    /// The generator `t` itself (a square root of `d`).
    pub fn sqrt_d(d: i64) -> Self {
        QuadElem::new(Rational::zero(), rat(1), d)
    }

    pub fn zero(d: i64) -> Self {
        QuadElem::from_i64(0, d)
    }

    pub fn one(d: i64) -> Self {
        QuadElem::from_i64(1, d)
    }

    fn check_ring(&self, rhs: &Self) -> Result<(), ExactError> {
        if self.d == rhs.d {
            Ok(())
        } else {
            Err(ExactError::RingMismatch(self.d, rhs.d))
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check_ring(rhs)?;
        Ok(QuadElem::new(&self.a + &rhs.a, &self.b + &rhs.b, self.d))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check_ring(rhs)?;
        Ok(QuadElem::new(&self.a - &rhs.a, &self.b - &rhs.b, self.d))
    }

    /// `(a1 + b1 t)(a2 + b2 t) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) t`.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check_ring(rhs)?;
        let d = rat(self.d);
        Ok(QuadElem::new(
            &self.a * &rhs.a + d * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
            self.d,
        ))
    }

    /// Conjugate `a - b*t` (the nontrivial ring automorphism).
    pub fn conj(&self) -> Self {
        QuadElem::new(self.a.clone(), -&self.b, self.d)
    }

    /// Field norm `a^2 - d b^2` (equals `x * conj(x)` collapsed to `Q`).
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - rat(self.d) * &self.b * &self.b
    }

    /// Multiplicative inverse `conj(x) / norm(x)`.
    ///
    /// Zero norm with a nonzero element only happens when `d` is a perfect
    /// square; such elements are zero divisors and carry no inverse.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if Coeff::is_zero(self) {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm();
        if num_traits::Zero::is_zero(&n) {
            return Err(ExactError::ZeroDivisor);
        }
        Ok(QuadElem::new(&self.a / &n, -&self.b / &n, self.d))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadElem::one(self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same ring");
            }
            base = base.try_mul(&base).expect("same ring");
            e >>= 1;
        }
        acc
    }

    /// Reinterpret inside `Q[t]/(t^2 - d_new)` where `d_new = m^2 * d` for a
    /// positive integer `m`; maps `t ↦ t_new / m`, preserving sums and
    /// products.
    pub fn embed(&self, d_new: i64) -> Result<Self, ExactError> {
        if self.d == 0 || d_new % self.d != 0 {
            return Err(ExactError::NoEmbedding(d_new, self.d));
        }
        match super::integer_sqrt(d_new / self.d) {
            Some(m) if m > 0 => Ok(QuadElem::new(self.a.clone(), &self.b / rat(m), d_new)),
            _ => Err(ExactError::NoEmbedding(d_new, self.d)),
        }
    }

    /// Image under the evaluation map `t ↦ m`; requires `m^2 = d`, i.e. `d`
    /// is a perfect square and the ring splits as `Q x Q`.
    pub fn eval_at_root(&self, m: i64) -> Rational {
        assert_eq!(m * m, self.d, "t ↦ {m} is not a root of t^2 = {}", self.d);
        &self.a + &self.b * rat(m)
    }

    /// The rational part if the `t`-part vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        num_traits::Zero::is_zero(&self.b).then(|| self.a.clone())
    }
}

impl Add for QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: QuadElem) -> QuadElem {
        self.try_add(&rhs).expect("quad add")
    }
}

impl Sub for QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: QuadElem) -> QuadElem {
        self.try_sub(&rhs).expect("quad sub")
    }
}

impl Mul for QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: QuadElem) -> QuadElem {
        self.try_mul(&rhs).expect("quad mul")
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-self.a, -self.b, self.d)
    }
}

impl Coeff for QuadElem {
    fn zero_like(&self) -> Self {
        QuadElem::zero(self.d)
    }
    fn one_like(&self) -> Self {
        QuadElem::one(self.d)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(&self.a) && num_traits::Zero::is_zero(&self.b)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        QuadElem::from_i64(n, self.d)
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.d == other.d
    }
    fn ring_param(&self) -> i64 {
        self.d
    }
}

impl HalfCoeff for QuadElem {
    fn half(&self) -> Self {
        QuadElem::new(self.a.half(), self.b.half(), self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::super::frac;
    use super::*;

    fn q(a: Rational, b: Rational, d: i64) -> QuadElem {
        QuadElem::new(a, b, d)
    }

    #[test]
    fn products_in_d8() {
        // (1 + t/2)(1 - t/2) = 1 - d/4 = -1 when d = 8.
        let x = q(rat(1), frac(1, 2), 8);
        let y = q(rat(1), frac(-1, 2), 8);
        assert_eq!(x * y, QuadElem::from_i64(-1, 8));
        let t = QuadElem::sqrt_d(8);
        assert_eq!(t.clone() * t, QuadElem::from_i64(8, 8));
    }

    #[test]
    fn products_in_split_ring_d9() {
        let x = q(rat(1), rat(1), 9);
        assert_eq!(x.clone() * x, q(rat(10), rat(2), 9));
    }

    #[test]
    fn mismatched_rings_error() {
        let x = QuadElem::one(8);
        let y = QuadElem::one(5);
        assert_eq!(x.try_mul(&y), Err(ExactError::RingMismatch(8, 5)));
        assert_eq!(x.try_add(&y), Err(ExactError::RingMismatch(8, 5)));
    }

    #[test]
    fn inverses() {
        let t = QuadElem::sqrt_d(8);
        assert_eq!(t.inv().unwrap(), q(rat(0), frac(1, 8), 8));

        // 3 + t is a zero divisor when t^2 = 9: (3 + t)(3 - t) = 0.
        let zd = q(rat(3), rat(1), 9);
        assert_eq!(zd.inv(), Err(ExactError::ZeroDivisor));
        assert_eq!(QuadElem::zero(8).inv(), Err(ExactError::DivisionByZero));

        let x = q(rat(1), frac(1, 2), 8);
        assert_eq!(x.inv().unwrap(), q(rat(-1), frac(1, 2), 8));
    }

    #[test]
    fn conjugation_fixes_rationals_and_negates_t() {
        let x = q(rat(3), frac(-5, 2), 8);
        assert_eq!(x.conj(), q(rat(3), frac(5, 2), 8));
        assert_eq!(QuadElem::from_i64(7, 5).conj(), QuadElem::from_i64(7, 5));
        // x * conj(x) collapses to the norm.
        let n = x.clone() * x.conj();
        assert_eq!(n.as_rational().unwrap(), x.norm());
    }

    #[test]
    fn embedding_sqrt2_into_d8() {
        // sqrt(2) as an element of Q[t]/(t^2-2) maps to t/2 in Q[t]/(t^2-8).
        let s2 = QuadElem::sqrt_d(2);
        assert_eq!(s2.embed(8).unwrap(), q(rat(0), frac(1, 2), 8));
        assert!(s2.embed(6).is_err());
        assert!(QuadElem::sqrt_d(0).embed(0).is_err());
    }

    #[test]
    fn evaluation_in_split_ring() {
        let x = q(frac(1, 2), frac(5, 18), 9);
        assert_eq!(x.eval_at_root(3), frac(4, 3));
    }

    #[test]
    fn powers() {
        let alpha = q(rat(1), frac(1, 2), 8); // 1 + t/2, the Pell root
        // alpha^2 = 1 + t + d/4 = 3 + t
        assert_eq!(alpha.pow(2), q(rat(3), rat(1), 8));
        assert_eq!(alpha.pow(0), QuadElem::one(8));
    }
}
