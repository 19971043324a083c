//! Chebyshev polynomials, their even/odd partial factors, the `S_n` and
//! `φ_n` families, and an exact identity battery relating them.
//!
//! Partial polynomials are built from `U_n` by
//!
//! ```text
//! Ue_{2m}   = U_m + U_{m-1}        Uo_{2m}   = U_m - U_{m-1}
//! Ue_{2m+1} = U_m                  Uo_{2m+1} = U_{m+1} - U_{m-1}
//! ```
//!
//! with `U_{-1} = 0` and `U_{-2} = -1`. Every family here has integer
//! coefficients, so everything is computed exactly.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChebError {
    #[error("index {index} is out of range for family {family}")]
    IndexOutOfRange { family: FamilyTag, index: i64 },
    #[error("substituting x/2 does not give integer coefficients")]
    NotIntegral,
    #[error("unknown polynomial family `{0}`")]
    UnknownFamily(String),
}

/// Polynomial families known to the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// Second kind, `U_n(cos θ) = sin((n+1)θ)/sin θ`.
    U,
    /// First kind.
    T,
    /// Third kind.
    V,
    /// Fourth kind.
    W,
    /// Even partial factor of `U_n`.
    Ue,
    /// Odd partial factor of `U_n`.
    Uo,
    /// `U_n(x/2)`.
    Ucomp,
    /// `Ue_n(x/2)`.
    UeComp,
    /// `Uo_n(x/2)`.
    UoComp,
    S,
    /// `φ_n = ((n+1)x² − 3x − n)U_n + (x+1)(U_{n−1}+1)`.
    Phi,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 11] = [
        FamilyTag::U,
        FamilyTag::T,
        FamilyTag::V,
        FamilyTag::W,
        FamilyTag::Ue,
        FamilyTag::Uo,
        FamilyTag::Ucomp,
        FamilyTag::UeComp,
        FamilyTag::UoComp,
        FamilyTag::S,
        FamilyTag::Phi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::U => "u",
            FamilyTag::T => "t",
            FamilyTag::V => "v",
            FamilyTag::W => "w",
            FamilyTag::Ue => "ue",
            FamilyTag::Uo => "uo",
            FamilyTag::Ucomp => "ucomp",
            FamilyTag::UeComp => "uecomp",
            FamilyTag::UoComp => "uocomp",
            FamilyTag::S => "s",
            FamilyTag::Phi => "phi",
        }
    }

    /// Smallest admissible index.
    pub fn min_index(self) -> i64 {
        match self {
            FamilyTag::U | FamilyTag::Ucomp => -2,
            _ => 0,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = ChebError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == lower)
            .ok_or_else(|| ChebError::UnknownFamily(String::from(s)))
    }
}

/// Runs `P_{k+2} = 2x·P_{k+1} − P_k` from two seeds and returns `P_0..=P_n`.
fn three_term(p0: Poly, p1: Poly, n: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(p0);
    if n == 0 {
        return out;
    }
    out.push(p1);
    let two_x = Poly::linear(2, 0);
    for k in 2..=n {
        let next = &two_x * &out[k - 1] - &out[k - 2];
        out.push(next);
    }
    out
}

/// Cached `U_0..=U_max` used to build every other family.
///
/// Constructors taking `&self` panic if the index exceeds the table; use
/// [`ChebyshevTable::reserve`] (or the free functions) to grow it first.
#[derive(Debug, Clone)]
pub struct ChebyshevTable {
    u: Vec<Poly>,
    zero: Poly,
    minus_one: Poly,
}

impl Default for ChebyshevTable {
    fn default() -> Self {
        Self::new(1)
    }
}

impl ChebyshevTable {
    pub fn new(max_index: usize) -> Self {
        ChebyshevTable {
            u: three_term(Poly::one(), Poly::linear(2, 0), max_index.max(1)),
            zero: Poly::zero(),
            minus_one: Poly::constant(-1),
        }
    }

    pub fn max_index(&self) -> usize {
        self.u.len() - 1
    }

    /// Extends the cache so that `U_max_index` is available.
    pub fn reserve(&mut self, max_index: usize) {
        let two_x = Poly::linear(2, 0);
        while self.u.len() <= max_index {
            let k = self.u.len();
            let next = &two_x * &self.u[k - 1] - &self.u[k - 2];
            self.u.push(next);
        }
    }

    /// `U_n` for `n ≥ -2`.
    pub fn u(&self, n: i64) -> &Poly {
        match n {
            -2 => &self.minus_one,
            -1 => &self.zero,
            _ => {
                assert!(n >= 0, "U_n is defined for n >= -2, got {n}");
                &self.u[n as usize]
            }
        }
    }

    pub fn partial_e(&self, n: usize) -> Poly {
        let m = (n / 2) as i64;
        if n % 2 == 0 {
            self.u(m) + self.u(m - 1)
        } else {
            self.u(m).clone()
        }
    }

    pub fn partial_o(&self, n: usize) -> Poly {
        let m = (n / 2) as i64;
        if n % 2 == 0 {
            self.u(m) - self.u(m - 1)
        } else {
            self.u(m + 1) - self.u(m - 1)
        }
    }

    pub fn s_poly(&self, n: usize) -> Poly {
        let m = (n / 2) as i64;
        // (2m+3)x + 2m + 1, shared by both parities.
        let tail = Poly::linear(2 * m + 3, 2 * m + 1) * self.u(m - 1);
        if n % 2 == 0 {
            Poly::linear(2 * m + 1, 2 * m - 1) * self.u(m) - tail
        } else {
            let quad = Poly::from_i64s(&[-1, 2 * m - 1, 2 * m + 2]);
            (quad * self.u(m) - tail).scale_i64(2)
        }
    }

    pub fn phi(&self, n: usize) -> Poly {
        let ni = n as i64;
        let quad = Poly::from_i64s(&[-ni, -3, ni + 1]);
        let shifted = self.u(ni - 1) + Poly::one();
        quad * self.u(ni) + Poly::linear(1, 1) * shifted
    }

    /// Any family member; indices below zero are only valid for `U` and `Ucomp`.
    pub fn family(&self, tag: FamilyTag, n: i64) -> Result<Poly, ChebError> {
        if n < tag.min_index() {
            return Err(ChebError::IndexOutOfRange {
                family: tag,
                index: n,
            });
        }
        let k = n.max(0) as usize;
        Ok(match tag {
            FamilyTag::U => self.u(n).clone(),
            FamilyTag::T => cheb_t(k),
            FamilyTag::V => cheb_v(k),
            FamilyTag::W => cheb_w(k),
            FamilyTag::Ue => self.partial_e(k),
            FamilyTag::Uo => self.partial_o(k),
            FamilyTag::Ucomp => compress(self.u(n))?,
            FamilyTag::UeComp => compress(&self.partial_e(k))?,
            FamilyTag::UoComp => compress(&self.partial_o(k))?,
            FamilyTag::S => self.s_poly(k),
            FamilyTag::Phi => self.phi(k),
        })
    }
}

/// Largest `U` index needed to build member `n` of `tag`.
fn u_index_needed(tag: FamilyTag, n: i64) -> usize {
    let n = n.max(0) as usize;
    match tag {
        FamilyTag::Ue | FamilyTag::Uo | FamilyTag::UeComp | FamilyTag::UoComp => n / 2 + 1,
        FamilyTag::S => n / 2 + 1,
        _ => n + 1,
    }
}

/// Builds any family member with a freshly sized table.
pub fn family(tag: FamilyTag, n: i64) -> Result<Poly, ChebError> {
    ChebyshevTable::new(u_index_needed(tag, n)).family(tag, n)
}

/// `U_n` for `n ≥ -2`.
pub fn cheb_u(n: i64) -> Result<Poly, ChebError> {
    family(FamilyTag::U, n)
}

/// First kind: `T_0 = 1`, `T_1 = x`.
pub fn cheb_t(n: usize) -> Poly {
    three_term(Poly::one(), Poly::x(), n)
        .pop()
        .unwrap_or_default()
}

/// Third kind: `V_0 = 1`, `V_1 = 2x − 1`.
pub fn cheb_v(n: usize) -> Poly {
    three_term(Poly::one(), Poly::linear(2, -1), n)
        .pop()
        .unwrap_or_default()
}

/// Fourth kind: `W_0 = 1`, `W_1 = 2x + 1`.
pub fn cheb_w(n: usize) -> Poly {
    three_term(Poly::one(), Poly::linear(2, 1), n)
        .pop()
        .unwrap_or_default()
}

pub fn partial_e(n: usize) -> Poly {
    ChebyshevTable::new(n / 2 + 1).partial_e(n)
}

pub fn partial_o(n: usize) -> Poly {
    ChebyshevTable::new(n / 2 + 1).partial_o(n)
}

pub fn s_poly(n: usize) -> Poly {
    ChebyshevTable::new(n / 2 + 1).s_poly(n)
}

pub fn phi(n: usize) -> Poly {
    ChebyshevTable::new(n + 1).phi(n)
}

/// `q(x) = p(x/2)`, exact.
pub fn compress(p: &Poly) -> Result<Poly, ChebError> {
    p.substitute_scaled(1).ok_or(ChebError::NotIntegral)
}

/// Every family member needed by [`identity_suite`] for a given `max_n`,
/// precomputed so that individual entries can be inspected or replaced.
#[derive(Debug, Clone)]
pub struct Families {
    max_n: usize,
    table: ChebyshevTable,
    /// `U_{-2}..=U_{2·max_n+3}`, stored from index `-2`.
    u: Vec<Poly>,
    ue: Vec<Poly>,
    uo: Vec<Poly>,
    t: Vec<Poly>,
    v: Vec<Poly>,
    w: Vec<Poly>,
    s: Vec<Poly>,
    phi: Vec<Poly>,
}

impl Families {
    pub fn build(max_n: usize) -> Self {
        let top = 2 * max_n + 3;
        let table = ChebyshevTable::new(top);
        let u = (-2..=top as i64).map(|k| table.u(k).clone()).collect();
        let partial_top = 2 * max_n + 5;
        let ue = (0..=partial_top).map(|k| table.partial_e(k)).collect();
        let uo = (0..=partial_top).map(|k| table.partial_o(k)).collect();
        let t = three_term(Poly::one(), Poly::x(), max_n + 1);
        let v = three_term(Poly::one(), Poly::linear(2, -1), max_n);
        let w = three_term(Poly::one(), Poly::linear(2, 1), max_n);
        let s = (0..=max_n).map(|k| table.s_poly(k)).collect();
        let phi = (0..=max_n).map(|k| table.phi(k)).collect();
        Families {
            max_n,
            table,
            u,
            ue,
            uo,
            t,
            v,
            w,
            s,
            phi,
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn table(&self) -> &ChebyshevTable {
        &self.table
    }

    fn store(&mut self, tag: FamilyTag) -> Option<(&mut Vec<Poly>, i64)> {
        Some(match tag {
            FamilyTag::U => (&mut self.u, -2),
            FamilyTag::Ue => (&mut self.ue, 0),
            FamilyTag::Uo => (&mut self.uo, 0),
            FamilyTag::T => (&mut self.t, 0),
            FamilyTag::V => (&mut self.v, 0),
            FamilyTag::W => (&mut self.w, 0),
            FamilyTag::S => (&mut self.s, 0),
            FamilyTag::Phi => (&mut self.phi, 0),
            FamilyTag::Ucomp | FamilyTag::UeComp | FamilyTag::UoComp => return None,
        })
    }

    /// Overwrites one stored member. Used to build negative controls for the
    /// identity battery; compressed families are derived and cannot be set.
    pub fn replace(&mut self, tag: FamilyTag, n: i64, poly: Poly) -> Result<(), ChebError> {
        let (store, offset) = self.store(tag).ok_or(ChebError::IndexOutOfRange {
            family: tag,
            index: n,
        })?;
        let slot = usize::try_from(n - offset)
            .ok()
            .and_then(|i| store.get_mut(i))
            .ok_or(ChebError::IndexOutOfRange {
                family: tag,
                index: n,
            })?;
        *slot = poly;
        Ok(())
    }

    pub fn get(&self, tag: FamilyTag, n: i64) -> Option<&Poly> {
        let (store, offset) = match tag {
            FamilyTag::U => (&self.u, -2),
            FamilyTag::Ue => (&self.ue, 0),
            FamilyTag::Uo => (&self.uo, 0),
            FamilyTag::T => (&self.t, 0),
            FamilyTag::V => (&self.v, 0),
            FamilyTag::W => (&self.w, 0),
            FamilyTag::S => (&self.s, 0),
            FamilyTag::Phi => (&self.phi, 0),
            _ => return None,
        };
        usize::try_from(n - offset).ok().and_then(|i| store.get(i))
    }

    fn u(&self, n: i64) -> &Poly {
        &self.u[(n + 2) as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { lhs: Poly, rhs: Poly },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub n: usize,
    /// True when the check at this `n` reads `U_{-1}` or `U_{-2}`.
    pub uses_negative_index: bool,
    pub outcome: Outcome,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub max_n: usize,
    /// Sorted by `(identity, n)`.
    pub checked: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checked.iter().filter(|c| !c.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Checks whose outcome depends on the negative-index convention.
    pub fn boundary_cases(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checked.iter().filter(|c| c.uses_negative_index)
    }

    pub fn identity_names(&self) -> Vec<&'static str> {
        let mut names: Vec<_> = self.checked.iter().map(|c| c.identity).collect();
        names.dedup();
        names
    }
}

/// Names of all identities checked by [`identity_suite`].
pub const IDENTITIES: &[&str] = &[
    "U=Ue*Uo",
    "U[2n]=(U[n]+U[n-1])(U[n]-U[n-1])",
    "U[2n+1]=U[n](U[n+1]-U[n-1])",
    "U[2n]-1=U[n-1](U[n+1]-U[n-1])",
    "U[2n+1]-1=(U[n+1]-U[n])(U[n]+U[n-1])",
    "U[2n]+1=U[n](U[n]-U[n-2])",
    "U[2n+1]+1=(U[n+1]+U[n])(U[n]-U[n-1])",
    "U[n]^2-U[n+1]U[n-1]=1",
    "U[2n]-U[2n-1]-1=2(x-1)U[n-1](U[n]+U[n-1])",
    "U[2n]+U[2n-1]-1=2(x+1)U[n-1](U[n]-U[n-1])",
    "U[2n]-U[2n-1]+1=(U[n]-U[n-1])(U[n]-U[n-2])",
    "U[2n]+U[2n-1]+1=(U[n]+U[n-1])(U[n]-U[n-2])",
    "U[2n+1]-U[2n]-1=2(x-1)U[n](U[n]+U[n-1])",
    "U[2n+1]+U[2n]+1=2(x+1)U[n](U[n]-U[n-1])",
    "U[2n+1]-U[2n]+1=(U[n]-U[n-1])(U[n+1]-U[n-1])",
    "U[2n+1]+U[2n]-1=(U[n]+U[n-1])(U[n+1]-U[n-1])",
    "compressed-monic:U",
    "compressed-monic:Ue",
    "compressed-monic:Uo",
    "Ue[2n]=W[n]",
    "Uo[2n]=V[n]",
    "Ue[2n+1]=U[n]",
    "Uo[2n+1]=2T[n+1]",
    "phi=(x-1)*Ue*S",
    "(x-1)|S",
    "recurrence:Ue-even",
    "recurrence:Uo-even",
    "recurrence:Ue-odd",
    "recurrence:Uo-odd",
];

fn compare(lhs: Poly, rhs: Poly) -> Outcome {
    if lhs == rhs {
        Outcome::Pass
    } else {
        Outcome::Fail { lhs, rhs }
    }
}

fn monic_integral(p: &Poly) -> Outcome {
    match compress(p) {
        Ok(q) if q.leading_coeff().is_some_and(One::is_one) => Outcome::Pass,
        Ok(q) => Outcome::Fail {
            lhs: Poly::from_coeffs(vec![q.leading_coeff().cloned().unwrap_or_default()]),
            rhs: Poly::one(),
        },
        // Non-integral: report the offending polynomial against its own
        // leading-term target.
        Err(_) => Outcome::Fail {
            lhs: p.clone(),
            rhs: Poly::one().shift(p.degree().unwrap_or(0)),
        },
    }
}

/// Exact check of the whole identity battery for every `0 ≤ n ≤ max_n`.
pub fn identity_suite(max_n: usize) -> IdentityReport {
    identity_suite_on(&Families::build(max_n))
}

/// Runs the battery against precomputed (possibly tampered) families.
pub fn identity_suite_on(fam: &Families) -> IdentityReport {
    let max_n = fam.max_n;
    let x_minus_1 = Poly::linear(1, -1);
    let x_plus_1 = Poly::linear(1, 1);
    let two_x = Poly::linear(2, 0);
    let one = Poly::one();
    let mut checked = Vec::new();

    let mut push = |identity: &'static str, n: usize, neg: bool, outcome: Outcome| {
        checked.push(IdentityCheck {
            identity,
            n,
            uses_negative_index: neg,
            outcome,
        });
    };

    for n in 0..=max_n {
        let ni = n as i64;
        let u = |k: i64| fam.u(k);
        let (un, unm1, unm2, unp1) = (u(ni), u(ni - 1), u(ni - 2), u(ni + 1));
        let (u2n, u2nm1, u2np1) = (u(2 * ni), u(2 * ni - 1), u(2 * ni + 1));
        let sum = un + unm1;
        let diff = un - unm1;
        let up_diff = unp1 - unm1;
        let low_diff = un - unm2;
        // n = 0 reads U_{-1} and U_{-2}; n = 1 reads U_{-1} through U_{n-2}.
        let neg_small = n <= 1;
        let neg_zero = n == 0;

        push(
            "U=Ue*Uo",
            n,
            false,
            compare(u(ni).clone(), &fam.ue[n] * &fam.uo[n]),
        );

        push(
            "U[2n]=(U[n]+U[n-1])(U[n]-U[n-1])",
            n,
            neg_zero,
            compare(u2n.clone(), &sum * &diff),
        );
        push(
            "U[2n+1]=U[n](U[n+1]-U[n-1])",
            n,
            neg_zero,
            compare(u2np1.clone(), un * &up_diff),
        );
        push(
            "U[2n]-1=U[n-1](U[n+1]-U[n-1])",
            n,
            neg_zero,
            compare(u2n - &one, unm1 * &up_diff),
        );
        push(
            "U[2n+1]-1=(U[n+1]-U[n])(U[n]+U[n-1])",
            n,
            neg_zero,
            compare(u2np1 - &one, (unp1 - un) * &sum),
        );
        push(
            "U[2n]+1=U[n](U[n]-U[n-2])",
            n,
            neg_small,
            compare(u2n + &one, un * &low_diff),
        );
        push(
            "U[2n+1]+1=(U[n+1]+U[n])(U[n]-U[n-1])",
            n,
            neg_zero,
            compare(u2np1 + &one, (unp1 + un) * &diff),
        );
        push(
            "U[n]^2-U[n+1]U[n-1]=1",
            n,
            neg_zero,
            compare(un * un - unp1 * unm1, one.clone()),
        );

        push(
            "U[2n]-U[2n-1]-1=2(x-1)U[n-1](U[n]+U[n-1])",
            n,
            neg_zero,
            compare(u2n - u2nm1 - &one, (&x_minus_1 * unm1 * &sum).scale_i64(2)),
        );
        push(
            "U[2n]+U[2n-1]-1=2(x+1)U[n-1](U[n]-U[n-1])",
            n,
            neg_zero,
            compare(u2n + u2nm1 - &one, (&x_plus_1 * unm1 * &diff).scale_i64(2)),
        );
        push(
            "U[2n]-U[2n-1]+1=(U[n]-U[n-1])(U[n]-U[n-2])",
            n,
            neg_small,
            compare(u2n - u2nm1 + &one, &diff * &low_diff),
        );
        push(
            "U[2n]+U[2n-1]+1=(U[n]+U[n-1])(U[n]-U[n-2])",
            n,
            neg_small,
            compare(u2n + u2nm1 + &one, &sum * &low_diff),
        );
        push(
            "U[2n+1]-U[2n]-1=2(x-1)U[n](U[n]+U[n-1])",
            n,
            neg_zero,
            compare(u2np1 - u2n - &one, (&x_minus_1 * un * &sum).scale_i64(2)),
        );
        push(
            "U[2n+1]+U[2n]+1=2(x+1)U[n](U[n]-U[n-1])",
            n,
            neg_zero,
            compare(u2np1 + u2n + &one, (&x_plus_1 * un * &diff).scale_i64(2)),
        );
        push(
            "U[2n+1]-U[2n]+1=(U[n]-U[n-1])(U[n+1]-U[n-1])",
            n,
            neg_zero,
            compare(u2np1 - u2n + &one, &diff * &up_diff),
        );
        push(
            "U[2n+1]+U[2n]-1=(U[n]+U[n-1])(U[n+1]-U[n-1])",
            n,
            neg_zero,
            compare(u2np1 + u2n - &one, &sum * &up_diff),
        );

        push("compressed-monic:U", n, false, monic_integral(un));
        push("compressed-monic:Ue", n, false, monic_integral(&fam.ue[n]));
        push("compressed-monic:Uo", n, false, monic_integral(&fam.uo[n]));

        push(
            "Ue[2n]=W[n]",
            n,
            false,
            compare(fam.ue[2 * n].clone(), fam.w[n].clone()),
        );
        push(
            "Uo[2n]=V[n]",
            n,
            false,
            compare(fam.uo[2 * n].clone(), fam.v[n].clone()),
        );
        push(
            "Ue[2n+1]=U[n]",
            n,
            false,
            compare(fam.ue[2 * n + 1].clone(), un.clone()),
        );
        push(
            "Uo[2n+1]=2T[n+1]",
            n,
            false,
            compare(fam.uo[2 * n + 1].clone(), fam.t[n + 1].scale_i64(2)),
        );

        push(
            "phi=(x-1)*Ue*S",
            n,
            false,
            compare(fam.phi[n].clone(), &x_minus_1 * &fam.ue[n] * &fam.s[n]),
        );
        let divides = match fam.s[n].div_exact(&x_minus_1) {
            Ok(_) => Outcome::Pass,
            Err(_) => Outcome::Fail {
                lhs: Poly::from_coeffs(vec![fam.s[n].coeffs().iter().sum::<BigInt>()]),
                rhs: Poly::zero(),
            },
        };
        push("(x-1)|S", n, false, divides);

        // P_{k+2} = 2x P_{k+1} - P_k along each parity class, k = n.
        let rec = |p: &[Poly], i: usize, j: usize, k: usize| {
            compare(p[k].clone(), &two_x * &p[j] - &p[i])
        };
        push(
            "recurrence:Ue-even",
            n,
            false,
            rec(&fam.ue, 2 * n, 2 * n + 2, 2 * n + 4),
        );
        push(
            "recurrence:Uo-even",
            n,
            false,
            rec(&fam.uo, 2 * n, 2 * n + 2, 2 * n + 4),
        );
        push(
            "recurrence:Ue-odd",
            n,
            false,
            rec(&fam.ue, 2 * n + 1, 2 * n + 3, 2 * n + 5),
        );
        push(
            "recurrence:Uo-odd",
            n,
            false,
            rec(&fam.uo, 2 * n + 1, 2 * n + 3, 2 * n + 5),
        );
    }

    checked.sort_by(|a, b| (a.identity, a.n).cmp(&(b.identity, b.n)));
    IdentityReport { max_n, checked }
}
