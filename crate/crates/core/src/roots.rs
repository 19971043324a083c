//! Certified zeros of `Ue_n`, `S_n` and `φ_n`.
//!
//! All zeros of interest sit inside intervals whose ends are cosines of
//! rational multiples of π. Those ends are replaced by nearby dyadic
//! rationals whose exact polynomial sign is checked against the sign the
//! theory predicts; bisection then runs on exact signs only.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chebyshev::ChebyshevTable;
use crate::poly::{rat_to_f64, Poly, Rat};

/// Default bisection width for α/γ values.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Smallest and largest outward nudge applied to a cosine endpoint, as
/// powers of two.
const NUDGE_MIN_EXP: i32 = -40;
const NUDGE_MAX_EXP: i32 = -20;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RootError {
    #[error("no sign change on [{lo}, {hi}]: {reason}")]
    BadBracket {
        lo: f64,
        hi: f64,
        reason: &'static str,
    },
    #[error("{what} is undefined for n = {n}")]
    Undefined { what: &'static str, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn of(ord: Ordering) -> Option<Sign> {
        match ord {
            Ordering::Less => Some(Sign::Negative),
            Ordering::Equal => None,
            Ordering::Greater => Some(Sign::Positive),
        }
    }

    /// `(-1)^k`.
    pub fn alternating(k: usize) -> Sign {
        if k % 2 == 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Interval `[lo, hi]` across which a polynomial changes sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub lo: Rat,
    pub hi: Rat,
    pub sign_lo: Sign,
    pub sign_hi: Sign,
}

impl Bracket {
    /// Checks `lo < hi` and that `p` has opposite, nonzero signs at the ends.
    pub fn verify(p: &Poly, lo: Rat, hi: Rat) -> Result<Bracket, RootError> {
        let bad = |reason| RootError::BadBracket {
            lo: rat_to_f64(&lo),
            hi: rat_to_f64(&hi),
            reason,
        };
        if lo >= hi {
            return Err(bad("empty interval"));
        }
        let sign_lo = Sign::of(p.sign_at(&lo)).ok_or_else(|| bad("zero at lower end"))?;
        let sign_hi = Sign::of(p.sign_at(&hi)).ok_or_else(|| bad("zero at upper end"))?;
        if sign_lo == sign_hi {
            return Err(bad("equal signs at both ends"));
        }
        Ok(Bracket {
            lo,
            hi,
            sign_lo,
            sign_hi,
        })
    }

    pub fn width(&self) -> f64 {
        rat_to_f64(&(&self.hi - &self.lo))
    }

    pub fn lo_f64(&self) -> f64 {
        rat_to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        rat_to_f64(&self.hi)
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Enclosure {
    /// The zero is this rational number (a width-0 certificate).
    Exact(Rat),
    Bracket(Bracket),
}

/// A located zero together with the evidence for it.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroCert {
    pub value: f64,
    pub enclosure: Enclosure,
    /// For exact zeros: the derivative does not vanish there. For brackets:
    /// the derivative has the same nonzero sign at both ends, or the zero was
    /// counted against the degree (see [`zeros_of_s`]).
    pub simple: bool,
}

impl ZeroCert {
    pub fn width(&self) -> f64 {
        match &self.enclosure {
            Enclosure::Exact(_) => 0.0,
            Enclosure::Bracket(b) => b.width(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.enclosure, Enclosure::Exact(_))
    }

    /// Closed interval certainly containing the zero, as floats.
    pub fn bounds(&self) -> (f64, f64) {
        match &self.enclosure {
            Enclosure::Exact(r) => (rat_to_f64(r), rat_to_f64(r)),
            Enclosure::Bracket(b) => (b.lo_f64(), b.hi_f64()),
        }
    }

    fn exact(p: &Poly, r: Rat) -> ZeroCert {
        let simple = p.derivative().sign_at(&r) != Ordering::Equal;
        ZeroCert {
            value: rat_to_f64(&r),
            enclosure: Enclosure::Exact(r),
            simple,
        }
    }
}

/// Simplest rational (smallest denominator) in the closed interval `[lo, hi]`.
pub fn simplest_rational_between(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_rational_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + Rat::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_rational_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// Narrows a sign-change bracket of `p` by exact bisection until its width
/// is at most `tol`.
///
/// A midpoint that is an exact zero ends the search with a width-0
/// certificate; so does the simplest rational of the final interval when it
/// happens to be a zero.
pub fn bisect(p: &Poly, bracket: &Bracket, tol: f64) -> Result<ZeroCert, RootError> {
    let mut b = Bracket::verify(p, bracket.lo.clone(), bracket.hi.clone())?;
    if b.sign_lo != bracket.sign_lo {
        return Err(RootError::BadBracket {
            lo: b.lo_f64(),
            hi: b.hi_f64(),
            reason: "recorded endpoint signs do not match the polynomial",
        });
    }
    while b.width() > tol {
        let mid = b.midpoint();
        match Sign::of(p.sign_at(&mid)) {
            None => return Ok(ZeroCert::exact(p, mid)),
            Some(s) if s == b.sign_lo => b.lo = mid,
            Some(_) => b.hi = mid,
        }
    }
    let candidate = simplest_rational_between(&b.lo, &b.hi);
    if p.sign_at(&candidate) == Ordering::Equal {
        return Ok(ZeroCert::exact(p, candidate));
    }
    let dp = p.derivative();
    let d_lo = dp.sign_at(&b.lo);
    let simple = d_lo != Ordering::Equal && d_lo == dp.sign_at(&b.hi);
    Ok(ZeroCert {
        value: rat_to_f64(&b.midpoint()),
        enclosure: Enclosure::Bracket(b),
        simple,
    })
}

/// Like [`bisect`] on raw endpoints; a zero at either end is returned as an
/// exact certificate.
pub fn bisect_interval(p: &Poly, lo: &Rat, hi: &Rat, tol: f64) -> Result<ZeroCert, RootError> {
    for end in [lo, hi] {
        if p.sign_at(end) == Ordering::Equal {
            return Ok(ZeroCert::exact(p, end.clone()));
        }
    }
    let b = Bracket::verify(p, lo.clone(), hi.clone())?;
    bisect(p, &b, tol)
}

/// `cos(num·π/den)` in double precision.
pub fn cos_pi(num: usize, den: usize) -> f64 {
    libm::cos(num as f64 * PI / den as f64)
}

/// A dyadic rational near `center`, moved in direction `dir` (±1) by the
/// smallest power-of-two step at which `p` has sign `expected`.
fn nudged_endpoint(p: &Poly, center: f64, dir: i8, expected: Sign) -> Result<Rat, RootError> {
    let base = Rat::from_float(center).unwrap_or_default();
    for e in NUDGE_MIN_EXP..=NUDGE_MAX_EXP {
        let step = Rat::new(BigInt::one(), BigInt::one() << (-e) as usize);
        let cand = if dir >= 0 { &base + step } else { &base - step };
        if Sign::of(p.sign_at(&cand)) == Some(expected) {
            return Ok(cand);
        }
    }
    Err(RootError::BadBracket {
        lo: center,
        hi: center,
        reason: "endpoint sign disagrees with the predicted sign",
    })
}

/// Bracket around `β_n`, the minimal zero of `Ue_n`.
pub fn beta_bracket(n: usize) -> Result<(Poly, Bracket), RootError> {
    if n < 2 {
        return Err(RootError::Undefined { what: "beta", n });
    }
    let ue = crate::chebyshev::partial_e(n);
    let c = beta_closed_form(n);
    // Left of its smallest zero, Ue_n (positive leading coefficient) has
    // sign (-1)^deg.
    let deg = ue.degree().unwrap_or(0);
    let left = Sign::alternating(deg);
    let lo = nudged_endpoint(&ue, c, -1, left)?;
    let hi = nudged_endpoint(&ue, c, 1, left.flip())?;
    let b = Bracket::verify(&ue, lo, hi)?;
    Ok((ue, b))
}

fn beta_closed_form(n: usize) -> f64 {
    let m = n / 2;
    if n % 2 == 0 {
        cos_pi(2 * m, 2 * m + 1)
    } else {
        cos_pi(2 * m, 2 * m + 2)
    }
}

/// Minimal zero of `Ue_n`, `n ≥ 2`, checked by an exact sign change of
/// `Ue_n` around the closed-form value.
pub fn beta(n: usize) -> Result<f64, RootError> {
    beta_cert(n).map(|c| c.value)
}

/// `β_n` as a certificate: the closed-form value with the verified bracket,
/// or an exact zero when the bracket holds a simple rational zero.
pub fn beta_cert(n: usize) -> Result<ZeroCert, RootError> {
    let (ue, b) = beta_bracket(n)?;
    let value = beta_closed_form(n);
    let candidate = simplest_rational_between(&b.lo, &b.hi);
    if ue.sign_at(&candidate) == Ordering::Equal {
        return Ok(ZeroCert::exact(&ue, candidate));
    }
    Ok(ZeroCert {
        value,
        enclosure: Enclosure::Bracket(b),
        simple: true,
    })
}

/// Bracket around `γ_n`, the minimal zero of `S_n`, `n ≥ 1`.
pub fn gamma_bracket(table: &ChebyshevTable, n: usize) -> Result<(Poly, Bracket), RootError> {
    if n == 0 {
        return Err(RootError::Undefined { what: "gamma", n });
    }
    let s = table.s_poly(n);
    let m = n / 2;
    let (lo, hi) = if n % 2 == 1 {
        // (-1, ξ_{m+1}) with ξ_k = cos((2k-1)π/(2m+2)).
        let lo = nudged_endpoint(&s, -1.0, 1, Sign::alternating(m))?;
        let hi = nudged_endpoint(
            &s,
            cos_pi(2 * m + 1, 2 * m + 2),
            1,
            Sign::alternating(m + 1),
        )?;
        (lo, hi)
    } else if m == 1 {
        // S_2 = 3(2x+1)(x-1): the comparison interval degenerates, so use
        // (-1, ξ_1) with ξ_1 = cos(π/3).
        let lo = nudged_endpoint(&s, -1.0, 1, Sign::Positive)?;
        let hi = nudged_endpoint(&s, cos_pi(1, 3), 1, Sign::Negative)?;
        (lo, hi)
    } else {
        // (β_{2m}, cos((2m-1)π/(2m+1))).
        let lo = nudged_endpoint(&s, cos_pi(2 * m, 2 * m + 1), -1, Sign::alternating(m + 1))?;
        let hi = nudged_endpoint(&s, cos_pi(2 * m - 1, 2 * m + 1), 1, Sign::alternating(m))?;
        (lo, hi)
    };
    let b = Bracket::verify(&s, lo, hi)?;
    Ok((s, b))
}

/// Certified minimal zero of `S_n`.
pub fn gamma(n: usize, tol: f64) -> Result<ZeroCert, RootError> {
    gamma_with(&ChebyshevTable::new(n / 2 + 1), n, tol)
}

pub fn gamma_with(table: &ChebyshevTable, n: usize, tol: f64) -> Result<ZeroCert, RootError> {
    let (s, b) = gamma_bracket(table, n)?;
    bisect(&s, &b, tol)
}

/// Minimal zero of `φ_n`: `1`, `-1/2`, then `β_n` for even and `γ_n` for odd
/// `n`. `φ_n` itself is never searched.
pub fn alpha(n: usize, tol: f64) -> Result<f64, RootError> {
    match n {
        0 => Ok(1.0),
        1 => Ok(-0.5),
        _ if n % 2 == 0 => beta(n),
        _ => gamma(n, tol).map(|c| c.value),
    }
}

/// All zeros of `S_n`, ascending: one per interlacing interval plus `x = 1`.
///
/// Since the number of sign-change intervals plus the zero at 1 equals
/// `deg S_n`, every zero is simple and each certificate records that.
pub fn zeros_of_s(n: usize, tol: f64) -> Result<Vec<ZeroCert>, RootError> {
    zeros_of_s_with(&ChebyshevTable::new(n / 2 + 1), n, tol)
}

pub fn zeros_of_s_with(
    table: &ChebyshevTable,
    n: usize,
    tol: f64,
) -> Result<Vec<ZeroCert>, RootError> {
    let s = table.s_poly(n);
    let m = n / 2;
    // Interior grid points ξ_1 > ... > ξ_last, then -1.
    let (count, den, bottom_sign) = if n % 2 == 0 {
        (m, 2 * m + 1, m + 1) // S_{2m}(-1) has sign (-1)^{m-1}
    } else {
        (m + 1, 2 * m + 2, m)
    };
    let mut ends = Vec::with_capacity(count + 1);
    for k in 1..=count {
        ends.push(nudged_endpoint(
            &s,
            cos_pi(2 * k - 1, den),
            -1,
            Sign::alternating(k),
        )?);
    }
    ends.push(nudged_endpoint(
        &s,
        -1.0,
        1,
        Sign::alternating(bottom_sign),
    )?);

    let mut zeros = Vec::with_capacity(count + 1);
    for k in (0..count).rev() {
        let b = Bracket::verify(&s, ends[k + 1].clone(), ends[k].clone())?;
        let mut cert = bisect(&s, &b, tol)?;
        cert.simple = true;
        zeros.push(cert);
    }
    if s.sign_at(&Rat::one()) != Ordering::Equal {
        return Err(RootError::BadBracket {
            lo: 1.0,
            hi: 1.0,
            reason: "S_n(1) is not zero",
        });
    }
    zeros.push(ZeroCert::exact(&s, Rat::one()));
    if Some(zeros.len()) != s.degree() {
        return Err(RootError::BadBracket {
            lo: -1.0,
            hi: 1.0,
            reason: "zero count differs from the degree",
        });
    }
    Ok(zeros)
}

/// Checks `(1-x)/(1+x) ≤ cos(πx)` on `grid + 1` evenly spaced points of
/// `[0, 1/3]`: equality (to 1e-12) at the ends, strict inside.
pub fn check_elementary_inequality(grid: usize) -> bool {
    if grid < 2 {
        return false;
    }
    (0..=grid).all(|i| {
        let x = if i == grid {
            1.0 / 3.0
        } else {
            i as f64 / (3.0 * grid as f64)
        };
        let gap = libm::cos(PI * x) - (1.0 - x) / (1.0 + x);
        if i == 0 || i == grid {
            gap.abs() <= 1e-12
        } else {
            gap > 0.0
        }
    })
}

/// Outcome of one ordering check from [`root_structure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureCheck {
    pub check: &'static str,
    pub n: usize,
    pub passed: bool,
}

/// Names used in [`StructureCheck::check`].
pub const STRUCTURE_CHECKS: &[&str] = &[
    "zeros-of-S interlace",
    "beta < gamma < cos (even)",
    "-1 < gamma < cos < beta (odd)",
    "beta[n+1] < gamma[n] < beta[n-1]",
    "alpha decreasing",
    "elementary inequality",
];

/// Orderings of the zeros of `S_n`, `Ue_n` and `φ_n` for `n ≤ n_max`,
/// compared through certified enclosures.
pub fn root_structure(n_max: usize, tol: f64) -> Vec<StructureCheck> {
    let table = ChebyshevTable::new(n_max / 2 + 2);
    let mut out = Vec::new();
    let mut push =
        |check: &'static str, n: usize, passed: bool| out.push(StructureCheck { check, n, passed });
    let below = |c: &ZeroCert, x: f64| c.bounds().1 < x;
    let above = |c: &ZeroCert, x: f64| c.bounds().0 > x;
    let lt = |a: &ZeroCert, b: &ZeroCert| a.bounds().1 < b.bounds().0;

    for n in 0..=n_max {
        push("zeros-of-S interlace", n, interlaces(&table, n, tol));
    }
    for n in 3..=n_max {
        let m = n / 2;
        let (g, b) = match (gamma_with(&table, n, tol), beta_cert(n)) {
            (Ok(g), Ok(b)) => (g, b),
            _ => {
                let name = if n % 2 == 0 {
                    STRUCTURE_CHECKS[1]
                } else {
                    STRUCTURE_CHECKS[2]
                };
                push(name, n, false);
                continue;
            }
        };
        if n % 2 == 0 {
            push(
                STRUCTURE_CHECKS[1],
                n,
                lt(&b, &g) && below(&g, cos_pi(2 * m - 1, 2 * m + 1)),
            );
        } else {
            let c = cos_pi(2 * m + 1, 2 * m + 2);
            push(
                STRUCTURE_CHECKS[2],
                n,
                above(&g, -1.0) && below(&g, c) && above(&b, c),
            );
            let sandwiched = match (beta_cert(n + 1), beta_cert(n - 1)) {
                (Ok(lo), Ok(hi)) => lt(&lo, &g) && lt(&g, &hi),
                _ => false,
            };
            push(STRUCTURE_CHECKS[3], n, sandwiched);
        }
    }
    let mut prev: Option<f64> = None;
    for n in 2..=n_max {
        let a = alpha(n, tol).unwrap_or(f64::NAN);
        let ok = a > -1.0 && prev.map_or(a == -0.5, |p| a < p);
        push(STRUCTURE_CHECKS[4], n, ok);
        prev = Some(a);
    }
    push(STRUCTURE_CHECKS[5], 0, check_elementary_inequality(1000));
    out
}

/// Every non-unit zero of `S_n` lies strictly inside its grid interval
/// `(ξ_{k+1}, ξ_k)`, with `-1` closing the grid.
fn interlaces(table: &ChebyshevTable, n: usize, tol: f64) -> bool {
    let Ok(zeros) = zeros_of_s_with(table, n, tol) else {
        return false;
    };
    let m = n / 2;
    let (count, den) = if n % 2 == 0 {
        (m, 2 * m + 1)
    } else {
        (m + 1, 2 * m + 2)
    };
    let mut grid: Vec<f64> = (1..=count).rev().map(|k| cos_pi(2 * k - 1, den)).collect();
    grid.insert(0, -1.0);
    let (inner, last) = zeros.split_at(zeros.len() - 1);
    last[0].is_exact()
        && inner.len() == count
        && inner.iter().zip(grid.windows(2)).all(|(z, w)| {
            let (lo, hi) = z.bounds();
            z.simple && w[0] < lo && hi < w[1]
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::s_poly;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn root_structure_small() {
        let checks = root_structure(20, 1e-12);
        let bad: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(bad.is_empty(), "{bad:?}");
        for name in STRUCTURE_CHECKS {
            assert!(checks.iter().any(|c| c.check == *name), "{name}");
        }
    }

    #[test]
    fn bisect_finds_exact_midpoint() {
        let p = Poly::linear(1, -1);
        let c = bisect_interval(&p, &rat(0, 1), &rat(2, 1), 1e-12).unwrap();
        assert!(c.is_exact());
        assert_eq!(c.value, 1.0);
        assert_eq!(c.width(), 0.0);
        assert!(c.simple);
    }

    #[test]
    fn bisect_s1_on_minus_one_zero() {
        let c = bisect_interval(&s_poly(1), &rat(-1, 1), &rat(0, 1), 1e-12).unwrap();
        assert_eq!(c.value, -0.5);
        assert!(c.is_exact());
    }

    #[test]
    fn bisect_irrational_zero() {
        // x^2 - 2 on [1, 2]
        let p = Poly::from_i64s(&[-2, 0, 1]);
        let c = bisect_interval(&p, &rat(1, 1), &rat(2, 1), 1e-13).unwrap();
        assert!(!c.is_exact());
        assert!(c.width() <= 1e-13);
        assert!((c.value - core::f64::consts::SQRT_2).abs() < 1e-13);
        assert!(c.simple);
        let (lo, hi) = c.bounds();
        assert!(lo <= core::f64::consts::SQRT_2 && core::f64::consts::SQRT_2 <= hi);
    }

    #[test]
    fn bad_brackets_are_rejected() {
        let p = Poly::from_i64s(&[-2, 0, 1]);
        assert!(matches!(
            Bracket::verify(&p, rat(2, 1), rat(3, 1)),
            Err(RootError::BadBracket { .. })
        ));
        assert!(Bracket::verify(&p, rat(2, 1), rat(1, 1)).is_err());
        let forged = Bracket {
            lo: rat(1, 1),
            hi: rat(2, 1),
            sign_lo: Sign::Positive,
            sign_hi: Sign::Negative,
        };
        assert!(bisect(&p, &forged, 1e-6).is_err());
    }

    #[test]
    fn simplest_rational_examples() {
        assert_eq!(
            simplest_rational_between(&rat(-1, 3), &rat(1, 5)),
            rat(0, 1)
        );
        assert_eq!(simplest_rational_between(&rat(3, 7), &rat(4, 7)), rat(1, 2));
        assert_eq!(
            simplest_rational_between(&rat(-4, 7), &rat(-3, 7)),
            rat(-1, 2)
        );
        assert_eq!(simplest_rational_between(&rat(5, 2), &rat(5, 2)), rat(5, 2));
        assert_eq!(
            simplest_rational_between(&rat(31, 10), &rat(33, 10)),
            rat(13, 4)
        );
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta(0), Err(RootError::Undefined { what: "beta", n: 0 }));
        assert!(beta(1).is_err());
        assert!((beta(2).unwrap() + 0.5).abs() < 1e-15);
        assert!(beta(3).unwrap().abs() < 1e-15);
        assert!((beta(4).unwrap() - (-0.809_016_994_374_947_4)).abs() < 1e-12);
    }

    #[test]
    fn gamma_small_values() {
        assert_eq!(gamma(1, DEFAULT_TOL).unwrap().value, -0.5);
        assert_eq!(gamma(2, DEFAULT_TOL).unwrap().value, -0.5);
        // S_3 = 2(x-1)(4x+3)(2x+1)
        let g3 = gamma(3, DEFAULT_TOL).unwrap();
        assert!(g3.is_exact());
        assert_eq!(g3.value, -0.75);
        let g5 = gamma(5, DEFAULT_TOL).unwrap();
        assert!(-1.0 < g5.value && g5.value < cos_pi(5, 6));
        assert!(g5.width() <= DEFAULT_TOL);
        assert!(gamma(0, DEFAULT_TOL).is_err());
    }

    #[test]
    fn alpha_cases() {
        assert_eq!(alpha(0, DEFAULT_TOL).unwrap(), 1.0);
        assert_eq!(alpha(1, DEFAULT_TOL).unwrap(), -0.5);
        assert!((alpha(2, DEFAULT_TOL).unwrap() + 0.5).abs() < 1e-15);
        let g7 = gamma(7, DEFAULT_TOL).unwrap().value;
        assert_eq!(alpha(7, DEFAULT_TOL).unwrap(), g7);
    }

    #[test]
    fn zeros_of_small_s() {
        let z0 = zeros_of_s(0, DEFAULT_TOL).unwrap();
        assert_eq!(z0.len(), 1);
        assert_eq!(z0[0].value, 1.0);
        let z1: Vec<f64> = zeros_of_s(1, DEFAULT_TOL)
            .unwrap()
            .iter()
            .map(|z| z.value)
            .collect();
        assert_eq!(z1, [-0.5, 1.0]);
        let z4 = zeros_of_s(4, DEFAULT_TOL).unwrap();
        assert_eq!(z4.len(), 3);
        // One zero in (-1, ξ_2) and one in (ξ_2, ξ_1), ξ_k = cos((2k-1)π/5).
        assert!(-1.0 < z4[0].value && z4[0].value < cos_pi(3, 5));
        assert!(cos_pi(3, 5) < z4[1].value && z4[1].value < cos_pi(1, 5));
        assert!(z4.iter().all(|z| z.simple));
    }

    #[test]
    fn elementary_inequality() {
        assert!(check_elementary_inequality(2));
        assert!(check_elementary_inequality(10_000));
        assert!(!check_elementary_inequality(1));
        let x: f64 = 1.0 / 6.0;
        assert!((1.0 - x) / (1.0 + x) < libm::cos(PI * x));
    }

    #[test]
    fn parity_helpers() {
        assert_eq!(Sign::alternating(3), Sign::Negative);
        assert_eq!(Sign::Negative.flip(), Sign::Positive);
    }
}
