//! Partial Chebyshev polynomials and the quadratic embedding constant of
//! fan graphs `K_1 + P_n`.
//!
//! The crate is `no_std` and only needs `alloc`. Polynomial families are
//! built with exact big-integer coefficients ([`poly`], [`chebyshev`]);
//! minimal zeros are certified by exact-sign bisection inside theoretically
//! known brackets ([`roots`]); [`graphs`] and [`qec`] provide the distance
//! matrices and three independent routes to the QEC of a fan.

#![no_std]

extern crate alloc;

pub mod chebyshev;
pub mod graphs;
pub mod poly;
pub mod qec;
pub mod roots;

pub use chebyshev::{FamilyTag, IdentityReport};

pub use poly::{Poly, Rat};

pub use graphs::{DistMatrix, Graph};
pub use qec::{QecMethod, QecResult};
pub use roots::{Bracket, ZeroCert};
