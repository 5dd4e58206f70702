//! Complexifications `R + R*i` (with `i^2 = -1`) of the rationals and of the
//! quadratic ring; `i` commutes with `t`.

use super::{Coeff, ComplexCoeff, Complexify, ExactError, HalfCoeff, QuadElem, Rational};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `re + im*i` over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl fmt::Debug for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn from_i64s(re: i64, im: i64) -> Self {
        ComplexRational::new(super::rat(re), super::rat(im))
    }
}

impl Add for ComplexRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        ComplexRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ComplexRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ComplexRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        ComplexRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for ComplexRational {
    type Output = Self;
    fn neg(self) -> Self {
        ComplexRational::new(-self.re, -self.im)
    }
}

impl Coeff for ComplexRational {
    fn zero_like(&self) -> Self {
        ComplexRational::from_i64s(0, 0)
    }
    fn one_like(&self) -> Self {
        ComplexRational::from_i64s(1, 0)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(&self.re) && num_traits::Zero::is_zero(&self.im)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        ComplexRational::from_i64s(n, 0)
    }
}

impl HalfCoeff for ComplexRational {
    fn half(&self) -> Self {
        ComplexRational::new(self.re.half(), self.im.half())
    }
}

impl ComplexCoeff for ComplexRational {
    fn conj_i(&self) -> Self {
        ComplexRational::new(self.re.clone(), -&self.im)
    }
    fn times_i(&self) -> Self {
        ComplexRational::new(-&self.im, self.re.clone())
    }
}

/// `re + im*i` with `re, im` in `Q[t]/(t^2 - d)`.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexQuad {
    pub re: QuadElem,
    pub im: QuadElem,
}

impl fmt::Debug for ComplexQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}

impl ComplexQuad {
    pub fn new(re: QuadElem, im: QuadElem) -> Self {
        assert!(
            re.same_ring(&im),
            "complex parts must share the quadratic ring"
        );
        ComplexQuad { re, im }
    }

    pub fn from_re(re: QuadElem) -> Self {
        let im = re.zero_like();
        ComplexQuad { re, im }
    }

    pub fn d(&self) -> i64 {
        self.re.d
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(ComplexQuad {
            re: self.re.try_add(&rhs.re)?,
            im: self.im.try_add(&rhs.im)?,
        })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(ComplexQuad {
            re: self.re.try_mul(&rhs.re)?.try_sub(&self.im.try_mul(&rhs.im)?)?,
            im: self.re.try_mul(&rhs.im)?.try_add(&self.im.try_mul(&rhs.re)?)?,
        })
    }

    /// Both parts as plain rationals, when neither carries a `t`-component.
    pub fn as_complex_rational(&self) -> Option<ComplexRational> {
        Some(ComplexRational::new(
            self.re.as_rational()?,
            self.im.as_rational()?,
        ))
    }

    /// Evaluation `t ↦ m` on both parts (requires `m^2 = d`).
    pub fn eval_at_root(&self, m: i64) -> ComplexRational {
        ComplexRational::new(self.re.eval_at_root(m), self.im.eval_at_root(m))
    }
}

impl ComplexRational {
    /// View inside the complexified quadratic ring with parameter `d`.
    pub fn into_quad(self, d: i64) -> ComplexQuad {
        ComplexQuad {
            re: QuadElem::from_rational(self.re, d),
            im: QuadElem::from_rational(self.im, d),
        }
    }
}

impl Add for ComplexQuad {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("complex add")
    }
}

impl Sub for ComplexQuad {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ComplexQuad {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("complex mul")
    }
}

impl Neg for ComplexQuad {
    type Output = Self;
    fn neg(self) -> Self {
        ComplexQuad {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Coeff for ComplexQuad {
    fn zero_like(&self) -> Self {
        ComplexQuad::from_re(self.re.zero_like())
    }
    fn one_like(&self) -> Self {
        ComplexQuad::from_re(self.re.one_like())
    }
    fn is_zero(&self) -> bool {
        Coeff::is_zero(&self.re) && Coeff::is_zero(&self.im)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        ComplexQuad::from_re(self.re.from_i64_like(n))
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.d() == other.d()
    }
    fn ring_param(&self) -> i64 {
        self.d()
    }
}

impl HalfCoeff for ComplexQuad {
    fn half(&self) -> Self {
        ComplexQuad {
            re: self.re.half(),
            im: self.im.half(),
        }
    }
}

impl ComplexCoeff for ComplexQuad {
    fn conj_i(&self) -> Self {
        ComplexQuad {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn times_i(&self) -> Self {
        ComplexQuad {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }
}

impl Complexify for QuadElem {
    type Complexified = ComplexQuad;
    fn complexify(re: Self, im: Self) -> ComplexQuad {
        ComplexQuad::new(re, im)
    }
}
