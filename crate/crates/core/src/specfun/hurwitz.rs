use num_rational::BigRational;
use num_traits::One;

use crate::error::{domain, Result};
use crate::real::Real;

use super::bernoulli::BernoulliTable;

/// `ζ(-m, a) = -B_{m+1}(a) / (m + 1)` for `a > -1`.
///
/// For `a ∈ (-1, 0)` the value is obtained through `ζ(s, a) = a^(-s) + ζ(s, a + 1)`.
pub fn hurwitz_zeta_negint<R: Real>(m: usize, a: R) -> Result<R> {
    if !(a > -R::one()) {
        return Err(domain("hurwitz_zeta_negint", format!("a = {a:?} must exceed -1")));
    }
    if a < R::zero() {
        let shifted = hurwitz_zeta_negint(m, a + R::one())?;
        return Ok(a.powi(m as i32) + shifted);
    }
    let b = BernoulliTable::global().eval(m + 1, a)?;
    Ok(-b / R::from_usize(m + 1))
}

/// Exact rational `ζ(-m, a)` for rational `a > -1`.
pub fn hurwitz_zeta_negint_exact(m: usize, a: &BigRational) -> Result<BigRational> {
    if !(a > &-BigRational::one()) {
        return Err(domain("hurwitz_zeta_negint_exact", format!("a = {a} must exceed -1")));
    }
    let b = BernoulliTable::global().eval_exact(m + 1, a)?;
    Ok(-b / BigRational::from_integer((m as i64 + 1).into()))
}

/// `ζ(-m, a)` through the Bernoulli polynomial with no domain restriction.
///
/// The asymptotic formulas stay valid as formal identities for any shift `a`;
/// this is used where the derivations shift by `a = -1`.
pub(crate) fn hurwitz_poly<R: Real>(m: usize, a: R) -> Result<R> {
    let b = BernoulliTable::global().eval(m + 1, a)?;
    Ok(-b / R::from_usize(m + 1))
}

pub(crate) fn hurwitz_poly_exact(m: usize, a: &BigRational) -> Result<BigRational> {
    let b = BernoulliTable::global().eval_exact(m + 1, a)?;
    Ok(-b / BigRational::from_integer((m as i64 + 1).into()))
}

/// `ζ(-m)`, i.e. `ζ(-m, 1)`.
pub fn riemann_zeta_negint<R: Real>(m: usize) -> Result<R> {
    hurwitz_zeta_negint(m, R::one())
}
