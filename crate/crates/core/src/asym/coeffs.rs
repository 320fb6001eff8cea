//! Tail coefficients of the expansions.
//!
//! Every `n^-m` coefficient is a polynomial in the parameters built from
//! Hurwitz zeta values at nonpositive integers, so each formula is written once
//! over [`Scalar`] and instantiated both for exact rationals and for the
//! working precision.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One};

use crate::error::{domain, Result};
use crate::real::Real;
use crate::specfun::{hurwitz_poly, hurwitz_poly_exact};

pub(crate) trait Scalar:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn rational(r: &BigRational) -> Self;
    /// `ζ(-m, a)` as a polynomial identity in `a`.
    fn hz(m: usize, a: &Self) -> Result<Self>;

    fn int(i: i64) -> Self {
        Self::rational(&BigRational::from_integer(BigInt::from(i)))
    }

    /// `2^-m`.
    fn inv_pow2(m: usize) -> Self {
        Self::rational(&BigRational::new(BigInt::one(), BigInt::one() << m))
    }
}

impl Scalar for BigRational {
    fn rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn hz(m: usize, a: &Self) -> Result<Self> {
        hurwitz_poly_exact(m, a)
    }
}

impl<R: Real> Scalar for R {
    fn rational(r: &BigRational) -> Self {
        R::from_ratio(r)
    }
    fn hz(m: usize, a: &Self) -> Result<Self> {
        hurwitz_poly(m, *a)
    }
}

fn sign<T: Scalar>(even_positive: usize) -> T {
    if even_positive % 2 == 0 {
        T::int(1)
    } else {
        T::int(-1)
    }
}

/// `n^-m` coefficient of `log λ_n^(α,β)`.
pub(crate) fn lambda_tail<T: Scalar>(m: usize, a: &T, b: &T) -> Result<T> {
    let one = T::int(1);
    let s = a.clone() + b.clone() + one.clone();
    let inner = (one.clone() - T::inv_pow2(m)) * T::hz(m, &s)? + T::hz(m, &one)?;
    Ok(sign::<T>(m - 1) * inner / T::int(m as i64))
}

/// `n^-m` coefficient of `log P_n^(α,β)(1)`.
pub(crate) fn p1_tail<T: Scalar>(m: usize, a: &T) -> Result<T> {
    let one = T::int(1);
    let inner = T::hz(m, &(a.clone() + one.clone()))? - T::hz(m, &one)?;
    Ok(sign::<T>(m) * inner / T::int(m as i64))
}

/// `Ψ_m(α, β)` of the discriminant expansion.
pub(crate) fn psi<T: Scalar>(m: usize, a: &T, b: &T) -> Result<T> {
    let one = T::int(1);
    let mi = m as i64;
    let m1 = T::int(mi + 1);
    let a1 = a.clone() + one.clone();
    let b1 = b.clone() + one.clone();
    let s = a.clone() + b.clone() + one.clone();
    let half_m = T::inv_pow2(m);
    let mut v = -(T::int(2 * mi + 1) / m1.clone()) * T::hz(m + 1, &one)?;
    v = v - T::int(2) * T::hz(m, &one)?;
    v = v + a1.clone() * T::hz(m, &a1)? - T::hz(m + 1, &a1)? / m1.clone();
    v = v + b1.clone() * T::hz(m, &b1)? - T::hz(m + 1, &b1)? / m1.clone();
    let w = ((T::int(2) - half_m.clone()) * T::int(mi) + one.clone() - half_m.clone()) / m1;
    v = v - w * T::hz(m + 1, &s)?;
    v = v + (a.clone() + b.clone()) * (one - half_m) * T::hz(m, &s)?;
    Ok(v)
}

/// `n^-m` coefficient of `log D_n^(α,β)`: `(-1)^(m-1)/m · Ψ_m`.
pub(crate) fn discriminant_tail<T: Scalar>(m: usize, a: &T, b: &T) -> Result<T> {
    Ok(sign::<T>(m - 1) * psi(m, a, b)? / T::int(m as i64))
}

/// `𝓗_m(p, q)` of the potential energy expansion.
pub(crate) fn h<T: Scalar>(m: usize, p: &T, q: &T) -> Result<T> {
    let one = T::int(1);
    let two = T::int(2);
    let tp = two.clone() * p.clone();
    let tq = two * q.clone();
    let s = tp.clone() + tq.clone() - one.clone();
    Ok(T::hz(m + 1, &one)? + T::hz(m + 1, &tp)? + T::hz(m + 1, &tq)? + (one - T::inv_pow2(m)) * T::hz(m + 1, &s)?)
}

/// `𝓗_m(p)` written as in the symmetric case `p = q`.
pub(crate) fn h_symmetric<T: Scalar>(m: usize, p: &T) -> Result<T> {
    let one = T::int(1);
    let tp = T::int(2) * p.clone();
    let fp = T::int(4) * p.clone() - one.clone();
    Ok(T::hz(m + 1, &one)? + T::int(2) * T::hz(m + 1, &tp)? + (one - T::inv_pow2(m)) * T::hz(m + 1, &fp)?)
}

/// `n^-m` coefficient of the potential energy: `(-1)^(m-1)/(m(m+1)) · 𝓗_m`.
pub(crate) fn potential_tail<T: Scalar>(m: usize, hm: T) -> T {
    sign::<T>(m - 1) * hm / T::int((m * (m + 1)) as i64)
}

/// `𝓗'_m(p, q)` of the elliptic log-energy expansion.
pub(crate) fn h_prime<T: Scalar>(m: usize, p: &T, q: &T) -> Result<T> {
    let one = T::int(1);
    let two = T::int(2);
    let tp = two.clone() * p.clone();
    let tq = two.clone() * q.clone();
    let s = tp.clone() + tq.clone() - one.clone();
    Ok(h(m, p, q)? / T::int(m as i64 + 1)
        - tp.clone() * T::hz(m, &tp)?
        - tq.clone() * T::hz(m, &tq)?
        - two * (one - T::inv_pow2(m)) * (p.clone() + q.clone()) * T::hz(m, &s)?)
}

/// `n^-m` coefficient of the elliptic log energy: `(-1)^(m-1)/m · 𝓗'_m`.
pub(crate) fn elliptic_tail<T: Scalar>(m: usize, p: &T, q: &T) -> Result<T> {
    Ok(sign::<T>(m - 1) * h_prime(m, p, q)? / T::int(m as i64))
}

/// `N^-m` coefficient of `𝓔_0([-1,1]; N)`:
/// `[1 - 2^-m + 4(1 - 2^-(m+2)) B_{m+2}/(m+2)] / (m(m+1))`, with
/// `B_{m+2}/(m+2) = -ζ(-m-1, 0)`.
pub(crate) fn interval_tail<T: Scalar>(m: usize) -> Result<T> {
    let one = T::int(1);
    let zero = T::int(0);
    let bern = -T::hz(m + 1, &zero)?;
    let v = one.clone() - T::inv_pow2(m) + T::int(4) * (one - T::inv_pow2(m + 2)) * bern;
    Ok(v / T::int((m * (m + 1)) as i64))
}

/// Exact rational image of a finite `f64`.
pub(crate) fn exact(x: f64, what: &'static str) -> Result<BigRational> {
    BigRational::from_f64(x).ok_or_else(|| domain(what, format!("{x} is not finite")))
}

/// `𝓗_m(p, q)` as an exact rational; `p`, `q` are taken at their exact binary values.
pub fn potential_h_exact(m: usize, p: f64, q: f64) -> Result<BigRational> {
    h(m, &exact(p, "potential_h_exact")?, &exact(q, "potential_h_exact")?)
}

/// `𝓗'_m(p, q)` as an exact rational.
pub fn elliptic_h_exact(m: usize, p: f64, q: f64) -> Result<BigRational> {
    h_prime(m, &exact(p, "elliptic_h_exact")?, &exact(q, "elliptic_h_exact")?)
}

/// `Ψ_m(α, β)` as an exact rational.
pub fn discriminant_psi_exact(m: usize, alpha: f64, beta: f64) -> Result<BigRational> {
    psi(
        m,
        &exact(alpha, "discriminant_psi_exact")?,
        &exact(beta, "discriminant_psi_exact")?,
    )
}

/// `N^-m` coefficient of the interval energy expansion as an exact rational.
pub fn interval_tail_exact(m: usize) -> Result<BigRational> {
    if m == 0 {
        return Err(domain("interval_tail_exact", "tail orders start at m = 1"));
    }
    interval_tail(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn interval_golden_values() {
        assert_eq!(interval_tail_exact(1).unwrap(), q(1, 4));
        assert_eq!(interval_tail_exact(2).unwrap(), q(23, 192));
        assert!(interval_tail_exact(0).is_err());
    }

    #[test]
    fn h_golden_value() {
        assert_eq!(potential_h_exact(1, 1.0, 1.0).unwrap(), q(-9, 2));
    }

    #[test]
    fn lambda_and_p1_first_coefficients() {
        let zero = BigRational::from_integer(0.into());
        assert_eq!(lambda_tail(1, &zero, &zero).unwrap(), q(-1, 8));
        let one = BigRational::one();
        assert_eq!(p1_tail(1, &one).unwrap(), q(1, 1));
        // log(n+1) = log n + Σ (-1)^(m-1)/m n^-m
        for m in 1..=10 {
            let expected = if m % 2 == 1 { q(1, m as i64) } else { q(-1, m as i64) };
            assert_eq!(p1_tail(m, &one).unwrap(), expected);
        }
        for m in 1..=10 {
            assert_eq!(p1_tail(m, &zero).unwrap(), zero);
        }
    }

    #[test]
    fn psi_one_at_origin() {
        // Ψ_1(0,0) with ζ(-1) = -1/12, ζ(-2) = 0:
        // -3/2·0 - 2(-1/12) + (-1/12) - 0 + (-1/12) - 0 - (3/2 + 1/2)/2 · 0 + 0 = 0
        assert_eq!(discriminant_psi_exact(1, 0.0, 0.0).unwrap(), q(0, 1));
    }

    #[test]
    fn symmetric_h_matches_general() {
        for &p in &[0.25, 0.5, 0.75, 1.0, 1.375, 2.5] {
            let pr = exact(p, "test").unwrap();
            for m in 1..=16 {
                assert_eq!(h_symmetric(m, &pr).unwrap(), h(m, &pr, &pr).unwrap());
            }
        }
    }

    #[test]
    fn floating_assembly_matches_exact() {
        let samples = [(0.7, 1.3), (1.0, 1.0), (0.125, 3.0), (2.0, 0.6), (3.0, 3.0)];
        for &(p, qv) in &samples {
            let (pr, qr) = (exact(p, "t").unwrap(), exact(qv, "t").unwrap());
            for m in 1..=10 {
                let pairs = [
                    (h(m, &pr, &qr).unwrap(), h(m, &p, &qv).unwrap()),
                    (h_prime(m, &pr, &qr).unwrap(), h_prime(m, &p, &qv).unwrap()),
                    (
                        psi(m, &(pr.clone() * q(2, 1) - q(1, 1)), &(qr.clone() * q(2, 1) - q(1, 1))).unwrap(),
                        psi(m, &(2.0 * p - 1.0), &(2.0 * qv - 1.0)).unwrap(),
                    ),
                ];
                for (e, f) in pairs {
                    let e = e.to_f64().unwrap();
                    assert!(f.is_finite());
                    assert!(
                        (e - f).abs() <= 1e-10 * e.abs().max(1e-3),
                        "m={m} p={p} q={qv}: {e} vs {f}"
                    );
                }
            }
        }
    }
}
