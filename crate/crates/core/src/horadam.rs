//! Horadam sequences: `H_0 = a`, `H_1 = b`, `H_n = p*H_{n-1} + q*H_{n-2}`.
//!
//! Terms are arbitrary-precision integers. Two evaluators are provided: the
//! defining recurrence ([`HoradamParams::term_iter`]) and companion-matrix
//! exponentiation by squaring ([`HoradamParams::term_fast`]), which is
//! `O(log n)` ring operations and uniform in `(p, q)`.

use crate::exact::{frac, QuadElem, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HoradamError {
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("degenerate discriminant: p^2 + 4q = 0 has a repeated root")]
    DegenerateDiscriminant,
}

/// Recurrence coefficients and initial terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HoradamParams {
    pub p: i64,
    pub q: i64,
    pub a: i64,
    pub b: i64,
}

/// The built-in parameter rows. `PellLucasStd` is the variant of the
/// Pell–Lucas row with both initial terms equal to 2; several quoted
/// closed forms are consistent only with that variant, so the
/// reconciliation report evaluates both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    Fibonacci,
    Lucas,
    Pell,
    PellLucas,
    Jacobsthal,
    JacobsthalLucas,
    PellLucasStd,
}

impl Preset {
    /// The six standard rows.
    pub const PAPER_SIX: [Preset; 6] = [
        Preset::Fibonacci,
        Preset::Lucas,
        Preset::Pell,
        Preset::PellLucas,
        Preset::Jacobsthal,
        Preset::JacobsthalLucas,
    ];

    /// Every accepted preset, including the alternate Pell–Lucas seeds.
    pub const ALL: [Preset; 7] = [
        Preset::Fibonacci,
        Preset::Lucas,
        Preset::Pell,
        Preset::PellLucas,
        Preset::Jacobsthal,
        Preset::JacobsthalLucas,
        Preset::PellLucasStd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fibonacci => "fibonacci",
            Preset::Lucas => "lucas",
            Preset::Pell => "pell",
            Preset::PellLucas => "pell_lucas",
            Preset::Jacobsthal => "jacobsthal",
            Preset::JacobsthalLucas => "jacobsthal_lucas",
            Preset::PellLucasStd => "pell_lucas_std",
        }
    }

    pub fn params(self) -> HoradamParams {
        let (p, q, a, b) = match self {
            Preset::Fibonacci => (1, 1, 0, 1),
            Preset::Lucas => (1, 1, 2, 1),
            Preset::Pell => (2, 1, 0, 1),
            Preset::PellLucas => (2, 1, 2, 1),
            Preset::Jacobsthal => (1, 2, 0, 1),
            Preset::JacobsthalLucas => (1, 2, 2, 1),
            Preset::PellLucasStd => (2, 1, 2, 2),
        };
        HoradamParams { p, q, a, b }
    }
}

/// Look up a preset by its CLI/report name.
pub fn preset(name: &str) -> Result<HoradamParams, HoradamError> {
    preset_by_name(name).map(Preset::params)
}

pub fn preset_by_name(name: &str) -> Result<Preset, HoradamError> {
    Preset::ALL
        .into_iter()
        .find(|p| p.name() == name)
        .ok_or_else(|| HoradamError::UnknownPreset(name.to_string()))
}

/// Characteristic data of `x^2 = p*x + q`: the discriminant `d = p^2 + 4q`
/// and the two roots `(p ± t)/2` in `Q[t]/(t^2 - d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharRoots {
    pub d: i64,
    pub alpha: QuadElem,
    pub beta: QuadElem,
}

impl HoradamParams {
    pub fn new(p: i64, q: i64, a: i64, b: i64) -> Self {
        HoradamParams { p, q, a, b }
    }

    /// `p^2 + 4q`, computed without overflow.
    pub fn discriminant(&self) -> i64 {
        let d = (self.p as i128) * (self.p as i128) + 4 * (self.q as i128);
        i64::try_from(d).expect("discriminant exceeds i64")
    }

    /// Term by the defining recurrence; `O(n)` big-integer additions.
    pub fn term_iter(&self, n: u64) -> BigInt {
        let mut prev = BigInt::from(self.a);
        let mut cur = BigInt::from(self.b);
        if n == 0 {
            return prev;
        }
        let (p, q) = (BigInt::from(self.p), BigInt::from(self.q));
        for _ in 1..n {
            let next = &p * &cur + &q * &prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// First `count` terms, sharing the single recurrence pass.
    pub fn terms(&self, count: usize) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(count);
        let mut prev = BigInt::from(self.a);
        let mut cur = BigInt::from(self.b);
        let (p, q) = (BigInt::from(self.p), BigInt::from(self.q));
        for i in 0..count {
            match i {
                0 => out.push(prev.clone()),
                1 => out.push(cur.clone()),
                _ => {
                    let next = &p * &cur + &q * &prev;
                    prev = std::mem::replace(&mut cur, next);
                    out.push(cur.clone());
                }
            }
        }
        out
    }

    /// Term via `[[p, q], [1, 0]]^n`; `O(log n)` big-integer multiplications.
    pub fn term_fast(&self, n: u64) -> BigInt {
        // Second row of the matrix power applied to [b; a]:
        // [H_{n+1}; H_n] = M^n [H_1; H_0].
        let m = Mat2Int::companion(self.p, self.q).pow(n);
        m.c * BigInt::from(self.b) + m.d * BigInt::from(self.a)
    }

    /// Characteristic roots; errors when the discriminant vanishes (repeated
    /// root — the closed forms divide by `alpha - beta = t`).
    pub fn roots(&self) -> Result<CharRoots, HoradamError> {
        let d = self.discriminant();
        if d == 0 {
            return Err(HoradamError::DegenerateDiscriminant);
        }
        let half_p = frac(self.p, 2);
        let half = frac(1, 2);
        Ok(CharRoots {
            d,
            alpha: QuadElem::new(half_p.clone(), half.clone(), d),
            beta: QuadElem::new(half_p, -half, d),
        })
    }

    pub fn p_rational(&self) -> Rational {
        crate::exact::rat(self.p)
    }

    pub fn q_rational(&self) -> Rational {
        crate::exact::rat(self.q)
    }
}

/// 2x2 integer matrix, just enough for companion powers.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Mat2Int {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2Int {
    fn companion(p: i64, q: i64) -> Self {
        Mat2Int {
            a: BigInt::from(p),
            b: BigInt::from(q),
            c: BigInt::one(),
            d: BigInt::zero(),
        }
    }

    fn identity() -> Self {
        Mat2Int {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        Mat2Int {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    fn pow(mut self, mut e: u64) -> Self {
        let mut acc = Mat2Int::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&self);
            }
            e >>= 1;
            if e > 0 {
                self = self.mul(&self);
            }
        }
        acc
    }
}
