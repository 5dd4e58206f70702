//! The four-dimensional Cartan number algebra over a commutative ring `R`:
//! elements `s + c_i*i + c_j*j + c_k*k` with unit relations
//!
//! ```text
//! i^2 = 1,   j^2 = k^2 = 0,   jk = 1 + i,   kj = 1 - i,
//! ij = j,  ji = -j,  ik = -k,  ki = k.
//! ```
//!
//! The algebra is associative and non-commutative, and is isomorphic to the
//! full 2x2 matrix algebra over `R` via [`theta`] whenever `R` admits exact
//! division by two. Multiplication extends the table bilinearly; the table
//! lives in [`UNIT_TABLE`] as the coordinates of each unit product.

use crate::exact::{rat, Coeff, HalfCoeff, Rational};
use num_bigint::BigInt;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coordinates of `e_u * e_v` for the basis `e_0 = 1, e_1 = i, e_2 = j,
/// e_3 = k`; `UNIT_TABLE[u][v][w]` is the `e_w`-coordinate of the product.
pub const UNIT_TABLE: [[[i64; 4]; 4]; 4] = [
    // 1 * {1, i, j, k}
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    // i * {1, i, j, k} = i, 1, j, -k
    [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
    // j * {1, i, j, k} = j, -j, 0, 1+i
    [[0, 0, 1, 0], [0, 0, -1, 0], [0, 0, 0, 0], [1, 1, 0, 0]],
    // k * {1, i, j, k} = k, k, 1-i, 0
    [[0, 0, 0, 1], [0, 0, 0, 1], [1, -1, 0, 0], [0, 0, 0, 0]],
];

#[derive(Clone, PartialEq, Eq)]
pub struct CartanNumber<R: Coeff> {
    pub s: R,
    pub ci: R,
    pub cj: R,
    pub ck: R,
}

impl<R: Coeff> fmt::Debug for CartanNumber<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:?} + {:?}i + {:?}j + {:?}k)",
            self.s, self.ci, self.cj, self.ck
        )
    }
}

impl<R: Coeff> CartanNumber<R> {
    pub fn new(s: R, ci: R, cj: R, ck: R) -> Self {
        CartanNumber { s, ci, cj, ck }
    }

    /// Scalar `r`, embedded on the `1` coordinate.
    pub fn scalar(r: R) -> Self {
        let zero = r.zero_like();
        CartanNumber::new(r, zero.clone(), zero.clone(), zero)
    }

    pub fn zero_like(&self) -> Self {
        CartanNumber::scalar(self.s.zero_like())
    }

    pub fn coords(&self) -> [&R; 4] {
        [&self.s, &self.ci, &self.cj, &self.ck]
    }

    pub fn from_coords(c: [R; 4]) -> Self {
        let [s, ci, cj, ck] = c;
        CartanNumber::new(s, ci, cj, ck)
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    /// Coordinate-wise map, e.g. ring embeddings.
    pub fn map<T: Coeff>(&self, f: impl Fn(&R) -> T) -> CartanNumber<T> {
        CartanNumber::new(f(&self.s), f(&self.ci), f(&self.cj), f(&self.ck))
    }

    /// Multiply every coordinate by the scalar `r`.
    pub fn scale(&self, r: &R) -> Self {
        self.map(|c| c.clone() * r.clone())
    }

    /// Conjugate: negate the `i`, `j`, `k` parts.
    pub fn conj(&self) -> Self {
        CartanNumber::new(
            self.s.clone(),
            -self.ci.clone(),
            -self.cj.clone(),
            -self.ck.clone(),
        )
    }

    /// The character `C(x) = s^2 - c_i^2 - 2 c_j c_k`.
    ///
    /// Multiplicative, and equal to `det(theta(x))`; `x * conj(x)` collapses
    /// to `C(x) * 1`.
    pub fn character(&self) -> R {
        let jk = self.cj.clone() * self.ck.clone();
        self.s.clone() * self.s.clone() - self.ci.clone() * self.ci.clone()
            - jk.clone()
            - jk
    }

    /// Bilinear product over [`UNIT_TABLE`]. Errors when coordinates come
    /// from mismatched rings (possible for [`crate::exact::QuadElem`]).
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, crate::exact::ExactError> {
        for x in self.coords() {
            for y in rhs.coords() {
                if !x.same_ring(y) {
                    return Err(crate::exact::ExactError::RingMismatch(
                        x.ring_param(),
                        y.ring_param(),
                    ));
                }
            }
        }
        let zero = self.s.zero_like();
        let mut out = [zero.clone(), zero.clone(), zero.clone(), zero];
        let xs = self.coords();
        let ys = rhs.coords();
        for u in 0..4 {
            if xs[u].is_zero() {
                continue;
            }
            for v in 0..4 {
                if ys[v].is_zero() {
                    continue;
                }
                let prod = xs[u].clone() * ys[v].clone();
                for (w, slot) in out.iter_mut().enumerate() {
                    match UNIT_TABLE[u][v][w] {
                        0 => {}
                        1 => *slot = slot.clone() + prod.clone(),
                        -1 => *slot = slot.clone() - prod.clone(),
                        c => *slot = slot.clone() + prod.clone() * prod.from_i64_like(c),
                    }
                }
            }
        }
        Ok(CartanNumber::from_coords(out))
    }
}

impl CartanNumber<Rational> {
    pub fn from_i64s(s: i64, ci: i64, cj: i64, ck: i64) -> Self {
        CartanNumber::new(rat(s), rat(ci), rat(cj), rat(ck))
    }
}

impl CartanNumber<BigInt> {
    /// Integer coordinates embedded into rationals (needed before [`theta`]).
    pub fn to_rational(&self) -> CartanNumber<Rational> {
        self.map(|c| Rational::from_integer(c.clone()))
    }
}

impl<R: Coeff> Add for CartanNumber<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        CartanNumber::new(
            self.s + rhs.s,
            self.ci + rhs.ci,
            self.cj + rhs.cj,
            self.ck + rhs.ck,
        )
    }
}

impl<R: Coeff> Sub for CartanNumber<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        CartanNumber::new(
            self.s - rhs.s,
            self.ci - rhs.ci,
            self.cj - rhs.cj,
            self.ck - rhs.ck,
        )
    }
}

impl<R: Coeff> Neg for CartanNumber<R> {
    type Output = Self;
    fn neg(self) -> Self {
        CartanNumber::new(-self.s, -self.ci, -self.cj, -self.ck)
    }
}

impl<R: Coeff> Mul for CartanNumber<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("cartan mul")
    }
}

/// 2x2 matrix over the coefficient ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2<R: Coeff> {
    pub m11: R,
    pub m12: R,
    pub m21: R,
    pub m22: R,
}

impl<R: Coeff> Mat2<R> {
    pub fn new(m11: R, m12: R, m21: R, m22: R) -> Self {
        Mat2 { m11, m12, m21, m22 }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2::new(
            self.m11.clone() * rhs.m11.clone() + self.m12.clone() * rhs.m21.clone(),
            self.m11.clone() * rhs.m12.clone() + self.m12.clone() * rhs.m22.clone(),
            self.m21.clone() * rhs.m11.clone() + self.m22.clone() * rhs.m21.clone(),
            self.m21.clone() * rhs.m12.clone() + self.m22.clone() * rhs.m22.clone(),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Mat2::new(
            self.m11.clone() + rhs.m11.clone(),
            self.m12.clone() + rhs.m12.clone(),
            self.m21.clone() + rhs.m21.clone(),
            self.m22.clone() + rhs.m22.clone(),
        )
    }

    pub fn det(&self) -> R {
        self.m11.clone() * self.m22.clone() - self.m12.clone() * self.m21.clone()
    }
}

/// The algebra isomorphism onto 2x2 matrices:
///
/// ```text
/// theta(s, ci, cj, ck) = [ s + cj + ck/2    ci - cj + ck/2 ]
///                        [ ci + cj - ck/2   s - cj - ck/2  ]
/// ```
///
/// Requires exact halving, so integer Cartan numbers are embedded into
/// rational coordinates first (see [`CartanNumber::to_rational`]).
pub fn theta<R: HalfCoeff>(x: &CartanNumber<R>) -> Mat2<R> {
    let hk = x.ck.half();
    Mat2::new(
        x.s.clone() + x.cj.clone() + hk.clone(),
        x.ci.clone() - x.cj.clone() + hk.clone(),
        x.ci.clone() + x.cj.clone() - hk.clone(),
        x.s.clone() - x.cj.clone() - hk,
    )
}

/// Inverse of [`theta`]; total on 2x2 matrices.
pub fn theta_inv<R: HalfCoeff>(m: &Mat2<R>) -> CartanNumber<R> {
    let u = m.m11.clone() - m.m22.clone();
    let v = m.m12.clone() - m.m21.clone();
    CartanNumber::new(
        (m.m11.clone() + m.m22.clone()).half(),
        (m.m12.clone() + m.m21.clone()).half(),
        (u.clone() - v.clone()).half().half(),
        (u + v).half(),
    )
}
