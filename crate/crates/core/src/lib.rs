//! Exact minimal logarithmic energies of Fekete and elliptic Fekete point
//! configurations on an interval, their complete asymptotic expansions, and
//! the numerical machinery to check one against the other.
//!
//! The main entry points:
//!
//! * [`energy`]: closed forms for `𝓛([-1,1], q, p; n)`, `E_0` of Jacobi zeros,
//!   `𝓔_0([-1,1]; N)` and the discriminants `Δ_N`, `Δ_n^(p,q)`.
//! * [`asym`]: truncated Poincaré-type expansions of the same quantities.
//! * [`jacobi`]: Jacobi polynomial data (leading coefficient, endpoint values,
//!   zeros, discriminant).
//! * [`minimize`]: a direct electrostatic solver that finds the optimal
//!   configurations without using Jacobi polynomials.
//! * [`verify`]: truncation-error studies and slope fits.
//!
//! Quantities that are sums of logarithms are generic over [`Real`], with
//! `f64` as the standard mode and [`DoubleDouble`] as the extended mode.

// `!(x > 0.0)` is how NaN is rejected along with out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asym;
pub mod energy;
mod error;
pub mod jacobi;
pub mod minimize;
pub mod real;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use real::{DoubleDouble, Precision, Real};
