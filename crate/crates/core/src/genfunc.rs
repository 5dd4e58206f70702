//! Rational generating functions `num(x) / den(x)` with polynomial
//! coefficients in a module over the rationals, plus the reconciliation of
//! the quoted closed forms against the constructed ones.
//!
//! The denominator always has constant term 1, so power-series expansion is
//! the linear recurrence `c_n = num_n - sum_{k>=1} den_k * c_{n-k}` and
//! never divides. For a Horadam row the denominator is `1 - p*x - q*x^2` and
//! the normative numerator is `CW_0 + (CW_1 - p*CW_0) x` — the unique
//! degree-<=1 numerator whose expansion reproduces terms 0 and 1.

use crate::cartan::CartanNumber;
use crate::exact::{rat, Rational};
use crate::horadam::{HoradamParams, Preset};
use crate::json::ToJson;
use crate::report::{ReconEntry, Verdict};
use crate::sequences::cw_terms;
use crate::spinor::{spinor_gf, spinor_terms, Spinor};
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::fmt::Debug;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("denominator constant term must be 1 for power-series expansion")]
    NonUnitConstant,
}

/// Coefficient of a formal power series: a module over the rationals. The
/// denominator acts through [`GfTerm::gf_scale`], so series coefficients
/// never need a ring structure of their own (spinors are plain vectors).
pub trait GfTerm: Clone + PartialEq + Debug {
    fn gf_zero() -> Self;
    fn gf_is_zero(&self) -> bool;
    fn gf_add(&self, rhs: &Self) -> Self;
    fn gf_sub(&self, rhs: &Self) -> Self;
    fn gf_scale(&self, r: &Rational) -> Self;
}

impl GfTerm for Rational {
    fn gf_zero() -> Self {
        Rational::zero()
    }
    fn gf_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn gf_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn gf_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn gf_scale(&self, r: &Rational) -> Self {
        self * r
    }
}

impl GfTerm for CartanNumber<Rational> {
    fn gf_zero() -> Self {
        CartanNumber::from_i64s(0, 0, 0, 0)
    }
    fn gf_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn gf_add(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }
    fn gf_sub(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }
    fn gf_scale(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}

/// Polynomial in ascending powers of `x`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<T: GfTerm> {
    coeffs: Vec<T>,
}

impl<T: GfTerm> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(GfTerm::gf_is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::gf_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k).gf_add(&rhs.coeff(k))).collect())
    }
}

/// Convolution of scalar polynomials (used for denominators and for the
/// characteristic-polynomial products of the identity engine).
pub fn convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if Zero::is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Convolution of a module-valued polynomial with a scalar one.
fn convolve_scaled<M: GfTerm>(a: &[M], b: &[Rational]) -> Vec<M> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![M::gf_zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].gf_add(&x.gf_scale(y));
        }
    }
    out
}

/// `num(x) / den(x)` as a formal power series; `den` has constant term 1.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalGf<M: GfTerm> {
    pub num: Poly<M>,
    pub den: Poly<Rational>,
}

impl<M: GfTerm> RationalGf<M> {
    pub fn new(num: Vec<M>, den: Vec<Rational>) -> Result<Self, GfError> {
        if den.first().map(One::is_one) != Some(true) {
            return Err(GfError::NonUnitConstant);
        }
        Ok(RationalGf {
            num: Poly::new(num),
            den: Poly::new(den),
        })
    }

    /// First `count` power-series coefficients, by the division-free
    /// recurrence `c_n = num_n - sum_{k>=1} den_k * c_{n-k}`.
    pub fn expand(&self, count: usize) -> Vec<M> {
        let den = self.den.coeffs();
        let mut out: Vec<M> = Vec::with_capacity(count);
        for n in 0..count {
            let mut c = self.num.coeff(n);
            for (k, dk) in den.iter().enumerate().skip(1) {
                if n < k {
                    break;
                }
                c = c.gf_sub(&out[n - k].gf_scale(dk));
            }
            out.push(c);
        }
        out
    }

    /// Sum of two series as a single rational function.
    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RationalGf {
                num: self.num.add(&rhs.num),
                den: self.den.clone(),
            };
        }
        let left = convolve_scaled(self.num.coeffs(), rhs.den.coeffs());
        let right = convolve_scaled(rhs.num.coeffs(), self.den.coeffs());
        RationalGf {
            num: Poly::new(left).add(&Poly::new(right)),
            den: Poly::new(convolve(self.den.coeffs(), rhs.den.coeffs())),
        }
    }
}

/// Denominator `1 - p*x - q*x^2` shared by every series of a Horadam row.
pub fn horadam_denominator(params: &HoradamParams) -> Vec<Rational> {
    vec![rat(1), rat(-params.p), rat(-params.q)]
}

/// Scalar series `sum H_n x^n`.
pub fn scalar_gf(params: &HoradamParams) -> RationalGf<Rational> {
    let (a, b) = (rat(params.a), rat(params.b));
    let num = vec![a.clone(), b - rat(params.p) * a];
    RationalGf::new(num, horadam_denominator(params)).expect("unit constant")
}

/// Lifted series `sum CW_n x^n` with numerator `CW_0 + (CW_1 - p*CW_0) x`.
pub fn cartan_gf(params: &HoradamParams) -> RationalGf<CartanNumber<Rational>> {
    let pair = cw_terms(params, 0, 2);
    let cw0 = pair[0].to_rational();
    let cw1 = pair[1].to_rational();
    let num = vec![cw0.clone(), cw1 - cw0.scale(&rat(params.p))];
    RationalGf::new(num, horadam_denominator(params)).expect("unit constant")
}

// ── Reconciliation: quoted generating functions ─────────────────────────────

fn den_json(den: &[Rational]) -> Value {
    Value::Array(den.iter().map(|c| c.to_json()).collect())
}

fn num_json<M: GfTerm + ToJson>(constant: &M, x: &M) -> Value {
    json!({ "const": constant.to_json(), "x": x.to_json() })
}

struct GfComparison {
    paper: Value,
    computed: Value,
    coords: Vec<String>,
}

/// Compare a quoted `(num_const + num_x * x) / den` against the constructed
/// one; mismatching parts are reported as `den` or `num.{const,x}.<coord>`.
fn compare_gf<M: GfTerm + ToJson>(
    paper_const: &M,
    paper_x: &M,
    paper_den: &[Rational],
    computed: &RationalGf<M>,
    coord_names: &[&str],
    split: impl Fn(&M) -> Vec<M>,
) -> GfComparison {
    let comp_const = computed.num.coeff(0);
    let comp_x = computed.num.coeff(1);
    let comp_den = computed.den.coeffs();

    let mut coords = Vec::new();
    if Poly::<Rational>::new(paper_den.to_vec()).coeffs() != comp_den {
        coords.push("den".to_string());
    }
    for (slot, paper_part, comp_part) in
        [("const", paper_const, &comp_const), ("x", paper_x, &comp_x)]
    {
        let (ps, cs) = (split(paper_part), split(comp_part));
        for (name, (p, c)) in coord_names.iter().zip(ps.iter().zip(cs.iter())) {
            if p != c {
                coords.push(format!("num.{slot}.{name}"));
            }
        }
    }

    GfComparison {
        paper: json!({ "den": den_json(paper_den), "num": num_json(paper_const, paper_x) }),
        computed: json!({ "den": den_json(comp_den), "num": num_json(&comp_const, &comp_x) }),
        coords,
    }
}

fn verdict_of(coords: &[String]) -> Verdict {
    if coords.is_empty() {
        Verdict::Match
    } else {
        Verdict::Mismatch
    }
}

/// Compare every quoted generating function — four lifted, four spinor, and
/// the standalone Fibonacci spinor display — against the constructed
/// series. The constructed numerators are themselves validated
/// against the term streams before comparison.
pub fn reconcile_gf() -> Vec<ReconEntry> {
    let mut entries = Vec::new();

    // Quoted lifted series: (preset, num constant, num x-coefficient, den).
    let cartan_rows: [(Preset, [i64; 4], [i64; 4], [i64; 3]); 4] = [
        (Preset::Pell, [0, 1, 2, 5], [1, 1, 0, 2], [1, -2, -1]),
        (Preset::Jacobsthal, [0, 1, 1, 3], [1, 0, 2, 2], [1, -2, -1]),
        (Preset::PellLucas, [2, 1, 4, 9], [-3, 2, 1, 4], [1, -2, -1]),
        (Preset::JacobsthalLucas, [2, 1, 5, 7], [-1, 4, 2, 10], [1, -1, -2]),
    ];
    for (preset, c, x, den) in cartan_rows {
        let params = preset.params();
        let gf = cartan_gf(&params);
        debug_assert_eq!(
            gf.expand(8),
            cw_terms(&params, 0, 8)
                .iter()
                .map(CartanNumber::to_rational)
                .collect::<Vec<_>>()
        );
        let lift = |q: [i64; 4]| CartanNumber::from_i64s(q[0], q[1], q[2], q[3]);
        let cmp = compare_gf(
            &lift(c),
            &lift(x),
            &den.map(rat),
            &gf,
            &["s", "i", "j", "k"],
            |m| m.coords().map(|r| CartanNumber::scalar(r.clone())).to_vec(),
        );
        entries.push(ReconEntry {
            name: format!("{}.gf", preset.name()),
            paper: cmp.paper,
            computed: cmp.computed,
            verdict: verdict_of(&cmp.coords),
            coords: cmp.coords,
            probe: None,
            notes: None,
        });
    }

    // Quoted spinor series: components given as (re, im) rational pairs.
    type Half = [(i64, i64, i64); 2]; // (re_num, im_num, shared denominator)
    let spin = |half: Half| {
        Spinor::new(
            crate::exact::ComplexRational::new(
                crate::exact::frac(half[0].0, half[0].2),
                crate::exact::frac(half[0].1, half[0].2),
            ),
            crate::exact::ComplexRational::new(
                crate::exact::frac(half[1].0, half[1].2),
                crate::exact::frac(half[1].1, half[1].2),
            ),
        )
    };
    let spinor_rows: [(Preset, Half, Half, [i64; 3]); 5] = [
        (
            Preset::Fibonacci,
            [(1, 1, 1), (0, 1, 1)],
            [(2, 7, 2), (1, 2, 2)],
            [1, -1, -1],
        ),
        (
            Preset::Pell,
            [(0, 9, 2), (-1, 2, 2)],
            [(1, 2, 1), (0, 0, 1)],
            [1, -2, -1],
        ),
        (
            Preset::PellLucas,
            [(4, 17, 2), (-1, 2, 2)],
            [(-3, 3, 1), (0, 2, 1)],
            [1, -2, -1],
        ),
        (
            Preset::Jacobsthal,
            [(0, 5, 2), (-1, 2, 2)],
            [(1, 3, 1), (1, 0, 1)],
            [1, -1, -2],
        ),
        (
            Preset::JacobsthalLucas,
            [(4, 17, 2), (3, -2, 2)],
            [(-1, 7, 1), (-3, -4, 1)],
            [1, -1, -2],
        ),
    ];
    for (preset, c, x, den) in spinor_rows {
        let params = preset.params();
        let gf = spinor_gf(&params);
        debug_assert_eq!(gf.expand(8), spinor_terms(&params, 0, 8));
        let cmp = compare_gf(
            &spin(c),
            &spin(x),
            &den.map(rat),
            &gf,
            &["c1", "c2"],
            |s| {
                vec![
                    Spinor::new(s.c1.clone(), crate::exact::ComplexRational::from_i64s(0, 0)),
                    Spinor::new(crate::exact::ComplexRational::from_i64s(0, 0), s.c2.clone()),
                ]
            },
        );
        entries.push(ReconEntry {
            name: format!("{}.spinor_gf", preset.name()),
            paper: cmp.paper,
            computed: cmp.computed,
            verdict: verdict_of(&cmp.coords),
            coords: cmp.coords,
            probe: None,
            notes: (preset == Preset::Fibonacci).then(|| {
                "quoted as a standalone display; the general form is reconciled \
                 by the remaining per-row series entries"
                    .to_string()
            }),
        });
    }

    entries
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::horadam::preset;
    use crate::sequences::cw_term;

    fn rats(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn classic_expansions() {
        // 1/(1 - x - x^2) -> shifted Fibonacci numbers.
        let gf = RationalGf::new(rats(&[1]), rats(&[1, -1, -1])).unwrap();
        assert_eq!(gf.expand(5), rats(&[1, 1, 2, 3, 5]));
        // x/(1 - 2x - x^2) -> Pell numbers.
        let gf = RationalGf::new(rats(&[0, 1]), rats(&[1, -2, -1])).unwrap();
        assert_eq!(gf.expand(5), rats(&[0, 1, 2, 5, 12]));
        // Plain polynomial.
        let gf = RationalGf::new(rats(&[2, 1]), rats(&[1])).unwrap();
        assert_eq!(gf.expand(3), rats(&[2, 1, 0]));
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        assert_eq!(
            RationalGf::new(rats(&[1]), rats(&[2, 1])).unwrap_err(),
            GfError::NonUnitConstant
        );
        assert_eq!(
            RationalGf::new(rats(&[1]), vec![]).unwrap_err(),
            GfError::NonUnitConstant
        );
    }

    #[test]
    fn scalar_gf_matches_terms() {
        for row in Preset::ALL {
            let params = row.params();
            let expect: Vec<Rational> = params
                .terms(16)
                .into_iter()
                .map(Rational::from_integer)
                .collect();
            assert_eq!(scalar_gf(&params).expand(16), expect, "{}", row.name());
        }
    }

    #[test]
    fn cartan_gf_matches_lifted_terms() {
        for row in Preset::ALL {
            let params = row.params();
            let got = cartan_gf(&params).expand(12);
            for (n, coeff) in got.iter().enumerate() {
                assert_eq!(
                    *coeff,
                    cw_term(&params, n as u64).to_rational(),
                    "{} at n={n}",
                    row.name()
                );
            }
        }
    }

    #[test]
    fn pell_cartan_numerator_x_coefficient() {
        let gf = cartan_gf(&preset("pell").unwrap());
        assert_eq!(gf.num.coeff(1), CartanNumber::from_i64s(1, 0, 1, 2));
    }

    #[test]
    fn addition_is_compatible_with_expansion() {
        let f = scalar_gf(&preset("fibonacci").unwrap());
        let p = scalar_gf(&preset("pell").unwrap());
        let sum = f.add(&p);
        let (ef, ep, es) = (f.expand(20), p.expand(20), sum.expand(20));
        for n in 0..20 {
            assert_eq!(es[n], &ef[n] + &ep[n]);
        }
        // Same-denominator fast path.
        let l = scalar_gf(&preset("lucas").unwrap());
        let sum = f.add(&l);
        assert_eq!(sum.den, f.den);
        let (el, es) = (l.expand(20), sum.expand(20));
        for n in 0..20 {
            assert_eq!(es[n], &ef[n] + &el[n]);
        }
    }

    #[test]
    fn convolution() {
        // (1 - x)(1 + x + x^2) = 1 - x^3
        assert_eq!(
            convolve(&rats(&[1, -1]), &rats(&[1, 1, 1])),
            rats(&[1, 0, 0, -1])
        );
        assert!(convolve(&rats(&[1]), &[]).is_empty());
    }

    #[test]
    fn gf_reconciliation_verdicts() {
        let entries = reconcile_gf();
        let got: Vec<(&str, &Verdict, &[String])> = entries
            .iter()
            .map(|e| (e.name.as_str(), &e.verdict, e.coords.as_slice()))
            .collect();
        let none: [String; 0] = [];
        let pell_coords = ["num.x.i".to_string(), "num.x.j".to_string()];
        let jac_coords = ["den".to_string()];
        let fib_coords = [
            "num.const.c1".to_string(),
            "num.x.c1".to_string(),
            "num.x.c2".to_string(),
        ];
        let pl_spinor = ["num.x.c2".to_string()];
        let jl_spinor = ["num.const.c2".to_string(), "num.x.c2".to_string()];
        assert_eq!(
            got,
            [
                ("pell.gf", &Verdict::Mismatch, &pell_coords[..]),
                ("jacobsthal.gf", &Verdict::Mismatch, &jac_coords[..]),
                ("pell_lucas.gf", &Verdict::Match, &none[..]),
                ("jacobsthal_lucas.gf", &Verdict::Match, &none[..]),
                ("fibonacci.spinor_gf", &Verdict::Mismatch, &fib_coords[..]),
                ("pell.spinor_gf", &Verdict::Match, &none[..]),
                ("pell_lucas.spinor_gf", &Verdict::Mismatch, &pl_spinor[..]),
                ("jacobsthal.spinor_gf", &Verdict::Match, &none[..]),
                (
                    "jacobsthal_lucas.spinor_gf",
                    &Verdict::Mismatch,
                    &jl_spinor[..]
                ),
            ]
        );
    }
}
