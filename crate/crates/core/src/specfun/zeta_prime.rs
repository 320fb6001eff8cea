use crate::error::{domain, Result};
use crate::real::{CompensatedSum, DoubleDouble, Real};

use super::hurwitz::{hurwitz_poly, hurwitz_zeta_negint};
use super::negapolygamma::negapolygamma2;

/// Large-argument expansion of `ζ'(-1, x + a)` with `K - 1` algebraic tail terms:
///
/// `x²log x/2 - x²/4 - ζ(0,a) x log x - ζ(-1,a) log x - ζ(-1,a)
///  + Σ_{k=1}^{K-1} (-1)^k / (k(k+1)) · ζ(-k-1, a) · x^-k`.
///
/// The remainder is `O(x^-K)`.
pub fn zeta_prime_neg1_asym<R: Real>(x: R, a: R, k_terms: usize) -> Result<R> {
    if k_terms < 2 {
        return Err(domain(
            "zeta_prime_neg1_asym",
            format!("K = {k_terms} must be at least 2"),
        ));
    }
    if !(x >= R::from_f64(2.0)) {
        return Err(domain("zeta_prime_neg1_asym", format!("x = {x:?} must be at least 2")));
    }
    zeta_prime_neg1_series(x, a, k_terms, hurwitz_zeta_negint)
}

fn zeta_prime_neg1_series<R: Real>(x: R, a: R, k_terms: usize, hz: fn(usize, R) -> Result<R>) -> Result<R> {
    let half = R::from_f64(0.5);
    let lx = x.ln();
    let z0 = hz(0, a)?;
    let z1 = hz(1, a)?;
    let mut acc = CompensatedSum::new();
    acc.add(half * x * x * lx);
    acc.add(-x * x * R::from_f64(0.25));
    acc.add(-z0 * x * lx);
    acc.add(-z1 * lx);
    acc.add(-z1);
    let inv_x = R::one() / x;
    let mut power = R::one();
    for k in 1..k_terms {
        power *= inv_x;
        let sign = if k % 2 == 0 { R::one() } else { -R::one() };
        acc.add(sign / R::from_usize(k * (k + 1)) * hz(k + 1, a)? * power);
    }
    Ok(acc.value())
}

/// `ζ'(-1, x)` from the negapolygamma: `ψ^(-2)(x) - (1-x)x/2 - (x/2) log 2π + ζ'(-1)`.
pub fn zeta_prime_neg1_exact<R: Real>(x: R) -> Result<R> {
    if !(x > R::zero()) {
        return Err(domain("zeta_prime_neg1_exact", format!("x = {x:?} must be positive")));
    }
    let half = R::from_f64(0.5);
    let psi = negapolygamma2(x)?;
    let c = Constants::<R>::compute();
    let mut acc = CompensatedSum::new();
    acc.add(psi);
    acc.add(-(R::one() - x) * x * half);
    acc.add(-x * half * R::ln_2pi());
    acc.add(c.zeta_prime_neg1);
    Ok(acc.value())
}

/// Transcendental constants used by the expansions, computed in the working precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants<R: Real> {
    /// `log A`, A the Glaisher–Kinkelin constant.
    pub log_glaisher: R,
    /// `ζ'(-1) = 1/12 - log A`.
    pub zeta_prime_neg1: R,
    pub half_log_2pi: R,
}

impl<R: Real> Constants<R> {
    /// `ζ'(-1) = ζ'(-1, N) - Σ_{k<N} k log k`, with `ζ'(-1, N)` from its
    /// large-argument series at `N = 20`. Evaluated in double-double and
    /// rounded once, since both parts are about 600 in size.
    pub fn compute() -> Self {
        const SHIFT: usize = 20;
        const TERMS: usize = 32;
        let n = DoubleDouble::from_i64(SHIFT as i64);
        let tail = zeta_prime_neg1_series(n, DoubleDouble::ZERO, TERMS, hurwitz_poly)
            .expect("Bernoulli table covers the series");
        let mut acc = CompensatedSum::new();
        acc.add(tail);
        for k in 2..SHIFT {
            let kr = DoubleDouble::from_i64(k as i64);
            acc.add(-kr * kr.ln());
        }
        let zp = acc.value();
        let log_a = DoubleDouble::ONE / DoubleDouble::from_f64(12.0) - zp;
        Self {
            log_glaisher: R::from_dd(log_a),
            zeta_prime_neg1: R::from_dd(zp),
            half_log_2pi: R::from_dd(<DoubleDouble as Real>::ln_2pi().mul_pow2(0.5)),
        }
    }
}
