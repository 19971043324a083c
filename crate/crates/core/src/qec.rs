//! Quadratic embedding constants.
//!
//! `QEC(G)` is the maximum of `⟨f, D f⟩` over unit vectors `f ⊥ 1`, where
//! `D` is the distance matrix. Three routes are provided for fans
//! `K_1 + P_n`:
//!
//! * a closed form for even `n`, `-4 sin²(π / (2(n+1)))`;
//! * `-2 α_n - 2`, with `α_n` the certified minimal zero of `φ_n`;
//! * a numeric oracle that compresses `D` onto `1^⊥` with a Helmert basis and
//!   takes the top eigenvalue by cyclic Jacobi rotations.
//!
//! The oracle never touches the polynomial machinery, which makes it usable
//! as an independent cross-check.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chebyshev::{compress, ChebyshevTable};
use crate::graphs::{self, distance_matrix, Graph, GraphError, PathSpectrum};
use crate::poly::{rat_to_f64, Rat};
use crate::roots::{self, RootError, ZeroCert};

/// Eigensolver tolerance used by the oracle when cross-validating.
pub const ORACLE_TOL: f64 = 1e-13;

/// Minimum distance of `α` from `ev(A_n) ∪ {±2}` accepted by
/// [`key_identity_check`].
pub const KEY_IDENTITY_MARGIN: f64 = 1e-6;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QecError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("the QEC needs a graph on at least two vertices")]
    TooSmall,
    #[error("method {method:?} does not apply to K_1+P_{n}")]
    NotApplicable { method: Method, n: usize },
    #[error("alpha is within {margin} of an eigenvalue of A_n or of ±2")]
    NearSingular { margin: f64 },
    #[error("eigenvalue ordering violated for n = {n}")]
    OrderingViolation { n: usize },
    #[error("{what} requires n >= {min}, got {n}")]
    IndexTooSmall {
        what: &'static str,
        min: usize,
        n: usize,
    },
}

/// How a QEC value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// `K_1+P_1 = K_2` and `K_1+P_2 = K_3` are complete graphs, QEC = -1.
    KnownSmall,
    ClosedFormEven,
    RootBased,
    NumericOracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::KnownSmall => "known-small",
            Method::ClosedFormEven => "closed-form-even",
            Method::RootBased => "root-based",
            Method::NumericOracle => "numeric-oracle",
        }
    }
}

/// Alias kept for the crate-level re-export.
pub type QecMethod = Method;

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    /// Value is `-4 sin²(num·π/den)`.
    Angle { num: usize, den: usize },
    /// Value is `-2x - 2` for the certified zero `x`.
    Root(ZeroCert),
    /// Off-diagonal Frobenius norm left by the eigensolver.
    EigenResidual(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct QecResult {
    pub value: f64,
    pub method: Method,
    pub certificate: Option<Certificate>,
}

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    a: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            a: vec![0.0; n * n],
        }
    }

    /// Builds from the upper triangle `f(i, j)`, `i ≤ j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] = v;
        self.a[j * self.n + i] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius(&self) -> f64 {
        libm::sqrt(self.a.iter().map(|x| x * x).sum())
    }

    pub fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                s += 2.0 * self.get(i, j) * self.get(i, j);
            }
        }
        libm::sqrt(s)
    }

    /// Gershgorin disc `(centre, radius)` of row `i`.
    pub fn gershgorin(&self, i: usize) -> (f64, f64) {
        let r = (0..self.n)
            .filter(|&j| j != i)
            .map(|j| self.get(i, j).abs())
            .sum();
        (self.get(i, i), r)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenvalues {
    /// Descending.
    pub values: Vec<f64>,
    /// Off-diagonal Frobenius norm at exit.
    pub residual: f64,
    pub sweeps: usize,
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps run in fixed row-major `(p, q)` order until the off-diagonal
/// Frobenius norm is at most `tol · ‖A‖_F`. The first three sweeps skip
/// entries below a threshold; later sweeps flush entries that no longer
/// change the diagonal in floating point.
pub fn jacobi_eigenvalues(m: &SymMatrix, tol: f64) -> Eigenvalues {
    let n = m.n;
    let mut a = m.clone();
    let target = tol * m.frobenius();
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS {
        let off = a.off_diagonal_norm();
        if off <= target || off == 0.0 {
            break;
        }
        let thresh = if sweeps < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                let g = 100.0 * apq.abs();
                let (app, aqq) = (a.get(p, p), a.get(q, q));
                if sweeps > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a.set(p, q, 0.0);
                    continue;
                }
                if apq.abs() <= thresh || apq == 0.0 {
                    continue;
                }
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
    }
    let mut values: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Eigenvalues {
        values,
        residual: a.off_diagonal_norm(),
        sweeps,
    }
}

/// One plane rotation annihilating `a[p][q]`.
fn rotate(a: &mut SymMatrix, p: usize, q: usize) {
    let n = a.n;
    let apq = a.get(p, q);
    let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
    let t = libm::copysign(1.0, theta) / (theta.abs() + libm::sqrt(theta * theta + 1.0));
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let (akp, akq) = (a.get(k, p), a.get(k, q));
        a.set(k, p, c * akp - s * akq);
        a.set(k, q, s * akp + c * akq);
    }
    let app = a.get(p, p) - t * apq;
    let aqq = a.get(q, q) + t * apq;
    a.set(p, p, app);
    a.set(q, q, aqq);
    a.set(p, q, 0.0);
}

/// Orthonormal basis of `1^⊥` in `R^n`: row `k` (1-based, `k < n`) has `k`
/// entries `1/√(k(k+1))`, then `-k/√(k(k+1))`, then zeros.
pub fn helmert_basis(n: usize) -> Vec<Vec<f64>> {
    (1..n)
        .map(|k| {
            let norm = libm::sqrt((k * (k + 1)) as f64);
            let mut row = vec![0.0; n];
            row[..k].iter_mut().for_each(|x| *x = 1.0 / norm);
            row[k] = -(k as f64) / norm;
            row
        })
        .collect()
}

/// `Qᵀ D Q` for the Helmert basis `Q` of `1^⊥`.
pub fn compress_to_hyperplane(d: &graphs::DistMatrix) -> SymMatrix {
    let n = d.n();
    let basis = helmert_basis(n);
    let dq: Vec<Vec<f64>> = basis
        .iter()
        .map(|h| {
            (0..n)
                .map(|i| {
                    d.row(i)
                        .iter()
                        .zip(h)
                        .map(|(&dij, hj)| dij as f64 * hj)
                        .sum()
                })
                .collect()
        })
        .collect();
    SymMatrix::from_fn(n - 1, |a, b| {
        basis[a].iter().zip(&dq[b]).map(|(x, y)| x * y).sum()
    })
}

/// QEC straight from the definition.
pub fn qec_numeric(g: &Graph, tol: f64) -> Result<QecResult, QecError> {
    if g.n_vertices() < 2 {
        return Err(QecError::TooSmall);
    }
    let d = distance_matrix(g)?;
    let eig = jacobi_eigenvalues(&compress_to_hyperplane(&d), tol);
    Ok(QecResult {
        value: eig.values[0],
        method: Method::NumericOracle,
        certificate: Some(Certificate::EigenResidual(eig.residual)),
    })
}

/// `-4 sin²(π / (2(n+1)))`, the QEC of `K_1+P_n` for even `n`.
pub fn even_closed_form(n: usize) -> f64 {
    let s = libm::sin(PI / (2 * (n + 1)) as f64);
    -4.0 * s * s
}

/// Strict bounds on `QEC(K_1+P_n)` for odd `n = 2m+1 ≥ 3`:
/// `(-4 sin²(π/(2(2m+2))), -4 sin²(π/(2(2m+3))))`.
pub fn odd_bounds(n: usize) -> Option<(f64, f64)> {
    if n < 3 || n % 2 == 0 {
        return None;
    }
    Some((even_closed_form(n), even_closed_form(n + 1)))
}

/// QEC of the fan `K_1+P_n`; `method = None` picks known values for
/// `n ≤ 2`, the closed form for even `n` and the root route otherwise.
pub fn qec_fan(n: usize, method: Option<Method>, tol: f64) -> Result<QecResult, QecError> {
    if n == 0 {
        return Err(QecError::IndexTooSmall {
            what: "qec_fan",
            min: 1,
            n,
        });
    }
    let method = method.unwrap_or(match n {
        1 | 2 => Method::KnownSmall,
        _ if n % 2 == 0 => Method::ClosedFormEven,
        _ => Method::RootBased,
    });
    let not_applicable = Err(QecError::NotApplicable { method, n });
    match method {
        Method::KnownSmall if n <= 2 => Ok(QecResult {
            value: -1.0,
            method,
            certificate: None,
        }),
        Method::KnownSmall => not_applicable,
        Method::ClosedFormEven if n % 2 == 0 => Ok(QecResult {
            value: even_closed_form(n),
            method,
            certificate: Some(Certificate::Angle {
                num: 1,
                den: 2 * (n + 1),
            }),
        }),
        Method::ClosedFormEven => not_applicable,
        Method::RootBased => {
            let cert = alpha_cert(n, tol)?;
            Ok(QecResult {
                value: -2.0 * cert.value - 2.0,
                method,
                certificate: Some(Certificate::Root(cert)),
            })
        }
        Method::NumericOracle => qec_numeric(&graphs::fan(n)?, tol),
    }
}

/// Certified `α_n` for `n ≥ 1`: `γ_1`, `β_n` (even) or `γ_n` (odd).
fn alpha_cert(n: usize, tol: f64) -> Result<ZeroCert, RootError> {
    if n % 2 == 0 {
        roots::beta_cert(n)
    } else {
        roots::gamma(n, tol)
    }
}

/// `τ_n`: the smallest `ω_k < -1` with even `k`, absent for `n ∈ {3, 5}`
/// (and below 3).
pub fn tau(n: usize) -> Option<f64> {
    if n <= 3 || n == 5 {
        return None;
    }
    let m = n / 2;
    Some(if n % 2 == 1 {
        2.0 * roots::cos_pi(2 * m, 2 * m + 2)
    } else {
        2.0 * roots::cos_pi(2 * m, 2 * m + 1)
    })
}

/// `σ_n = 2γ_n` for `n ≥ 3`, checked against the path spectrum:
/// `σ_n < ω_n < ω_{n-1}` for odd `n` and `ω_n < σ_n < ω_{n-1}` for even `n`.
pub fn sigma(n: usize, tol: f64) -> Result<f64, QecError> {
    if n < 3 {
        return Err(QecError::IndexTooSmall {
            what: "sigma",
            min: 3,
            n,
        });
    }
    let s = 2.0 * roots::gamma(n, tol)?.value;
    let spectrum = PathSpectrum::new(n);
    let (top, below) = (spectrum.omega(n - 1), spectrum.omega(n));
    let ordered = if n % 2 == 1 {
        s < below && below < top
    } else {
        below < s && s < top
    };
    if ordered {
        Ok(s)
    } else {
        Err(QecError::OrderingViolation { n })
    }
}

/// Solves a tridiagonal system with partial pivoting; `sub` and `sup` have
/// length `n - 1`. Returns `None` for a singular matrix.
pub fn solve_tridiagonal(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[f64]) -> Option<Vec<f64>> {
    let n = diag.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let (mut dl, mut d, mut du, mut b) = (sub.to_vec(), diag.to_vec(), sup.to_vec(), rhs.to_vec());
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    for i in 0..n - 1 {
        if d[i].abs() >= dl[i].abs() {
            if d[i] == 0.0 {
                return None;
            }
            let fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            let temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if i + 2 < n {
                du2[i] = du[i + 1];
                du[i + 1] *= -fact;
            }
            du[i] = temp;
            let tb = b[i];
            b[i] = b[i + 1];
            b[i + 1] = tb - fact * b[i + 1];
        }
        dl[i] = 0.0;
    }
    if d[n - 1] == 0.0 {
        return None;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = b[n - 1] / d[n - 1];
    if n > 1 {
        x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        x[i] = (b[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    }
    Some(x)
}

/// `|⟨1,(A_n − αI)⁻¹1⟩ − R(α)|`, where the left side comes from a direct
/// tridiagonal solve and
///
/// ```text
/// R(α) = (n(2−α) + 2 − 2(Ũ_{n−1}(α) + 1)/Ũ_n(α)) / (2−α)²
/// ```
///
/// is evaluated exactly over the rationals with `Ũ_k(x) = U_k(x/2)`.
pub fn key_identity_check(n: usize, alpha: &Rat) -> Result<f64, QecError> {
    if n == 0 {
        return Err(QecError::IndexTooSmall {
            what: "key_identity_check",
            min: 1,
            n,
        });
    }
    let a = rat_to_f64(alpha);
    let spectrum = PathSpectrum::new(n);
    let margin = spectrum
        .eigenvalues
        .iter()
        .chain([2.0, -2.0].iter())
        .map(|w| (a - w).abs())
        .fold(f64::INFINITY, f64::min);
    if margin < KEY_IDENTITY_MARGIN {
        return Err(QecError::NearSingular {
            margin: KEY_IDENTITY_MARGIN,
        });
    }

    let ones = vec![1.0; n];
    let off = vec![1.0; n - 1];
    let diag = vec![-a; n];
    let g = solve_tridiagonal(&off, &diag, &off, &ones).ok_or(QecError::NearSingular {
        margin: KEY_IDENTITY_MARGIN,
    })?;
    let lhs: f64 = g.iter().sum();

    let table = ChebyshevTable::new(n);
    let ut = |k: i64| compress(table.u(k)).map(|p| p.eval_rat(alpha));
    let (un, unm1) = match (ut(n as i64), ut(n as i64 - 1)) {
        (Ok(x), Ok(y)) => (x, y),
        // U_k(x/2) always has integer coefficients.
        _ => unreachable!("compressed U_k is integral"),
    };
    if un.is_zero() {
        return Err(QecError::NearSingular {
            margin: KEY_IDENTITY_MARGIN,
        });
    }
    let int = |v: i64| Rat::from_integer(BigInt::from(v));
    let two_minus = int(2) - alpha;
    let inner = int(n as i64) * &two_minus + int(2) - int(2) * (unm1 + int(1)) / un;
    let rhs = rat_to_f64(&(inner / (&two_minus * &two_minus)));
    Ok((lhs - rhs).abs())
}

/// One row of [`cross_validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct CrossRow {
    pub n: usize,
    /// `-2α_n - 2` from the supplied `α` rule.
    pub fan: f64,
    pub numeric: f64,
    /// `-min{σ_n, τ_n} - 2`, `NaN` if `σ_n` could not be certified.
    pub decomposition: f64,
    pub fan_matches_oracle: bool,
    pub decomposition_matches: bool,
}

impl CrossRow {
    pub fn passed(&self) -> bool {
        self.fan_matches_oracle && self.decomposition_matches
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossValidation {
    pub tol: f64,
    pub rows: Vec<CrossRow>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(CrossRow::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CrossRow> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

/// Compares `-2α_n - 2`, the numeric oracle and `-min{σ_n, τ_n} - 2` for
/// `3 ≤ n ≤ n_max`.
pub fn cross_validate(n_max: usize, tol: f64) -> CrossValidation {
    cross_validate_with(n_max, tol, |n| roots::alpha(n, roots::DEFAULT_TOL))
}

/// [`cross_validate`] with a caller-supplied rule for `α_n`.
pub fn cross_validate_with(
    n_max: usize,
    tol: f64,
    alpha: impl Fn(usize) -> Result<f64, RootError>,
) -> CrossValidation {
    let rows = (3..=n_max)
        .map(|n| {
            let fan = alpha(n).map_or(f64::NAN, |a| -2.0 * a - 2.0);
            let numeric = graphs::fan(n)
                .map_err(QecError::from)
                .and_then(|g| qec_numeric(&g, ORACLE_TOL))
                .map_or(f64::NAN, |r| r.value);
            let decomposition = sigma(n, roots::DEFAULT_TOL).map_or(f64::NAN, |s| {
                let least = tau(n).map_or(s, |t| s.min(t));
                -least - 2.0
            });
            CrossRow {
                n,
                fan,
                numeric,
                decomposition,
                fan_matches_oracle: (fan - numeric).abs() <= tol,
                decomposition_matches: (decomposition - fan).abs() <= tol,
            }
        })
        .collect();
    CrossValidation { tol, rows }
}
