//! Special-function kernel: Bernoulli data, Hurwitz zeta at nonpositive
//! integers, log-gamma, `ψ^(-2)` and `ζ'(-1, ·)`.
//!
//! All routines are pure and generic over [`Real`](crate::Real); the Bernoulli
//! table is built once and shared.

mod bernoulli;
mod gamma;
mod hurwitz;
mod negapolygamma;
mod zeta_prime;

pub use bernoulli::{bernoulli_number, bernoulli_poly, BernoulliTable, MAX_ORDER};
pub use gamma::{log_gamma, log_gamma_asym};
pub use hurwitz::{hurwitz_zeta_negint, hurwitz_zeta_negint_exact, riemann_zeta_negint};
pub use negapolygamma::{gauss_legendre, negapolygamma2};
pub use zeta_prime::{zeta_prime_neg1_asym, zeta_prime_neg1_exact, Constants};

pub(crate) use hurwitz::{hurwitz_poly, hurwitz_poly_exact};
