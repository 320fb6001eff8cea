use crate::error::{domain, Result};
use crate::real::{compensated_sum, CompensatedSum, DoubleDouble, Real};

use super::bernoulli::BernoulliTable;
use super::hurwitz::hurwitz_zeta_negint;

/// Shift point for the Stirling series; 14 terms then reach double-double accuracy.
const STIRLING_MIN_ARG: f64 = 30.0;
const STIRLING_TERMS: usize = 14;

fn stirling_dd(x: DoubleDouble) -> DoubleDouble {
    let table = BernoulliTable::global();
    let half = DoubleDouble::from_f64(0.5);
    let half_ln_2pi = <DoubleDouble as Real>::ln_2pi().mul_pow2(0.5);
    let mut acc = CompensatedSum::new();
    acc.add((x - half) * x.ln());
    acc.add(-x);
    acc.add(half_ln_2pi);
    let inv_x2 = DoubleDouble::ONE / (x * x);
    let mut power = DoubleDouble::ONE / x;
    for k in 1..=STIRLING_TERMS {
        let b2k = DoubleDouble::from_ratio(table.number(2 * k).expect("table covers 2k <= 28"));
        let denom = DoubleDouble::from_i64((2 * k * (2 * k - 1)) as i64);
        let term = b2k * power / denom;
        acc.add(term);
        if term.abs().hi() < 1e-40 * x.hi() {
            break;
        }
        power *= inv_x2;
    }
    acc.value()
}

/// `log Γ(x)` for `x > 0`.
///
/// Evaluated in double-double (upward shift, then the Stirling series) and
/// rounded once, so standard mode gets a correctly rounded result away from
/// the zeros of `log Γ` at 1 and 2. Positive integers use the exact factorial sum.
pub fn log_gamma<R: Real>(x: R) -> Result<R> {
    if !(x > R::zero()) || !x.is_finite() {
        return Err(domain("log_gamma", format!("x = {x:?} must be positive and finite")));
    }
    let xd = x.to_dd();
    if xd.lo() == 0.0 && xd.hi().fract() == 0.0 && xd.hi() < STIRLING_MIN_ARG {
        let n = xd.hi() as i64;
        let s: DoubleDouble = compensated_sum((2..n).map(|k| DoubleDouble::from_i64(k).ln()));
        return Ok(R::from_dd(s));
    }
    let mut shifted = xd;
    let mut shift = CompensatedSum::<DoubleDouble>::new();
    while shifted.hi() < STIRLING_MIN_ARG {
        shift.add(shifted.ln());
        shifted += DoubleDouble::ONE;
    }
    Ok(R::from_dd(stirling_dd(shifted) - shift.value()))
}

/// Poincaré-type expansion of `log Γ(x + a)` in powers of `1/x`, truncated after `order` terms:
/// `(x + a - 1/2) log x - x + log(2π)/2 - Σ_{m=1}^{order} (-1)^(m-1)/m · ζ(-m, a) · x^-m`.
pub fn log_gamma_asym<R: Real>(x: R, a: R, order: usize) -> Result<R> {
    if !(x >= R::one()) {
        return Err(domain("log_gamma_asym", format!("x = {x:?} must be at least 1")));
    }
    let half = R::from_f64(0.5);
    let mut acc = CompensatedSum::new();
    acc.add((x + a - half) * x.ln());
    acc.add(-x);
    acc.add(half * R::ln_2pi());
    let inv_x = R::one() / x;
    let mut power = R::one();
    for m in 1..=order {
        power *= inv_x;
        let sign = if m % 2 == 1 { R::one() } else { -R::one() };
        let z = hurwitz_zeta_negint(m, a)?;
        acc.add(-sign / R::from_usize(m) * z * power);
    }
    Ok(acc.value())
}
