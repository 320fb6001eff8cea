//! `ψ^(-2)(x) = ∫_0^x log Γ(t) dt`.
//!
//! The integrable singularity `log Γ(t) ~ -log t` at the origin is handled by
//! splitting at `ε = min(x, 1/2)`: on `[0, ε]` the Taylor series of
//! `log Γ(t) + log t` is integrated termwise, on `[ε, x]` Gauss–Legendre is
//! applied on geometrically growing panels `[ε 2^j, ε 2^(j+1)]`, each of which
//! sits at the same relative distance from the singularity.

use crate::error::{domain, Result};
use crate::real::{CompensatedSum, Real};

use super::bernoulli::BernoulliTable;
use super::gamma::log_gamma;

const PANEL_NODES: usize = 24;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, computed in the working precision.
pub fn gauss_legendre<R: Real>(order: usize) -> Vec<(R, R)> {
    let n = order;
    let mut rule = Vec::with_capacity(n);
    let two = R::from_f64(2.0);
    for i in 0..n {
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = R::from_f64(guess);
        let mut deriv = R::one();
        for iter in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            deriv = dp;
            if dx.abs().to_f64() <= 4.0 * R::EPSILON && iter > 0 {
                let (_, dp) = legendre_with_derivative(n, x);
                deriv = dp;
                break;
            }
        }
        let w = two / ((R::one() - x * x) * deriv * deriv);
        rule.push((x, w));
    }
    rule.reverse();
    rule
}

fn legendre_with_derivative<R: Real>(n: usize, x: R) -> (R, R) {
    let mut p0 = R::one();
    let mut p1 = x;
    for k in 2..=n {
        let kf = R::from_usize(k);
        let p2 = (R::from_usize(2 * k - 1) * x * p1 - R::from_usize(k - 1) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = R::from_usize(n) * (x * p1 - p0) / (x * x - R::one());
    (p1, dp)
}

/// `ζ(k)` for integer `k >= 2` by Euler–Maclaurin summation.
pub(crate) fn zeta_int<R: Real>(k: usize) -> R {
    debug_assert!(k >= 2);
    const CUT: usize = 20;
    let s = R::from_usize(k);
    let mut acc = CompensatedSum::new();
    for j in (1..CUT).rev() {
        acc.add(R::from_usize(j).powi(-(k as i32)));
    }
    let n = R::from_usize(CUT);
    let n_pow = n.powi(-(k as i32));
    acc.add(n * n_pow / (s - R::one()));
    acc.add(n_pow * R::from_f64(0.5));
    let table = BernoulliTable::global();
    // B_{2i}/(2i)! · s(s+1)···(s+2i-2) · N^(-s-2i+1)
    let mut rising = s;
    let mut fact = R::from_f64(2.0);
    let inv_n2 = R::one() / (n * n);
    let mut power = n_pow / n;
    for i in 1..=table.max_poly_degree() / 2 {
        let b = R::from_ratio(table.number(2 * i).expect("within table"));
        let term = b / fact * rising * power;
        acc.add(term);
        if term.abs().to_f64() < R::EPSILON * 1e-3 {
            break;
        }
        rising *= (s + R::from_usize(2 * i - 1)) * (s + R::from_usize(2 * i));
        fact *= R::from_usize((2 * i + 1) * (2 * i + 2));
        power *= inv_n2;
    }
    acc.value()
}

/// `∫_0^ε log Γ(t) dt` for `0 < ε <= 1/2` from the Taylor series of `log Γ` at 0.
fn integral_near_origin<R: Real>(eps: R) -> R {
    let mut acc = CompensatedSum::new();
    acc.add(eps - eps * eps.ln());
    acc.add(-R::euler_gamma() * eps * eps * R::from_f64(0.5));
    let mut power = eps * eps * eps;
    for k in 2..400usize {
        let sign = if k % 2 == 0 { R::one() } else { -R::one() };
        let term = sign * zeta_int::<R>(k) * power / R::from_usize(k * (k + 1));
        acc.add(term);
        if term.abs().to_f64() <= R::EPSILON * 1e-2 * eps.to_f64() {
            break;
        }
        power *= eps;
    }
    acc.value()
}

/// `ψ^(-2)(x) = ∫_0^x log Γ(t) dt` for `x >= 0`.
pub fn negapolygamma2<R: Real>(x: R) -> Result<R> {
    if !(x >= R::zero()) || !x.is_finite() {
        return Err(domain("negapolygamma2", format!("x = {x:?} must be non-negative")));
    }
    if x == R::zero() {
        return Ok(R::zero());
    }
    let half = R::from_f64(0.5);
    let eps = if x < half { x } else { half };
    let mut acc = CompensatedSum::new();
    acc.add(integral_near_origin(eps));
    if x > eps {
        let rule = gauss_legendre::<R>(PANEL_NODES);
        let mut lo = eps;
        while lo < x {
            let mut hi = lo + lo;
            if hi > x {
                hi = x;
            }
            let mid = (lo + hi) * half;
            let rad = (hi - lo) * half;
            let mut panel = CompensatedSum::new();
            for &(node, weight) in &rule {
                panel.add(weight * log_gamma(mid + rad * node)?);
            }
            acc.add(rad * panel.value());
            lo = hi;
        }
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::DoubleDouble;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let rule = gauss_legendre::<f64>(PANEL_NODES);
        let sum_w: f64 = rule.iter().map(|r| r.1).sum();
        assert!((sum_w - 2.0).abs() < 1e-14);
        let m46: f64 = rule.iter().map(|&(x, w)| w * x.powi(46)).sum();
        assert!((m46 - 2.0 / 47.0).abs() < 1e-14);
        let dd = gauss_legendre::<DoubleDouble>(PANEL_NODES);
        let m: DoubleDouble = dd.iter().fold(DoubleDouble::ZERO, |a, &(x, w)| a + w * x.powi(20));
        assert!(
            (m - DoubleDouble::from_f64(2.0) / DoubleDouble::from_f64(21.0))
                .abs()
                .hi()
                < 1e-30
        );
    }

    #[test]
    fn zeta_at_even_integers() {
        let pi2 = DoubleDouble::PI * DoubleDouble::PI;
        let z2: DoubleDouble = zeta_int(2);
        assert!((z2 - pi2 / DoubleDouble::from_f64(6.0)).abs().hi() < 1e-31);
        let z4: DoubleDouble = zeta_int(4);
        assert!((z4 - pi2 * pi2 / DoubleDouble::from_f64(90.0)).abs().hi() < 1e-31);
        let z3: DoubleDouble = zeta_int(3);
        let apery = DoubleDouble::new(1.2020569031595942, 4.875891010379532e-17);
        assert!((z3 - apery).abs().hi() < 1e-31);
        assert!((zeta_int::<f64>(60) - 1.0).abs() < 1e-17);
    }

    #[test]
    fn raabe_anchors() {
        let half_ln_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
        assert!((negapolygamma2(1.0).unwrap() - half_ln_2pi).abs() < 1e-14);
        assert!((negapolygamma2(2.0).unwrap() - (2.0 * half_ln_2pi - 1.0)).abs() < 1e-14);
        assert_eq!(negapolygamma2(0.0).unwrap(), 0.0);
        assert!(negapolygamma2(-0.1f64).is_err());

        let one = negapolygamma2(DoubleDouble::ONE).unwrap();
        let expected = <DoubleDouble as Real>::ln_2pi().mul_pow2(0.5);
        assert!((one - expected).abs().hi() < 1e-30);
    }

    #[test]
    fn raabe_integral_over_unit_windows() {
        // ∫_x^{x+1} log Γ = x log x - x + log(2π)/2
        for &x in &[0.3, 0.5, 1.7, 4.25, 12.0, 37.5] {
            let xd = DoubleDouble::from_f64(x);
            let lhs = negapolygamma2(xd + DoubleDouble::ONE).unwrap() - negapolygamma2(xd).unwrap();
            let rhs = xd * xd.ln() - xd + <DoubleDouble as Real>::ln_2pi().mul_pow2(0.5);
            assert!((lhs - rhs).abs().hi() < 1e-28, "x = {x}: {:e}", (lhs - rhs).to_f64());
            let l64 = negapolygamma2(x + 1.0).unwrap() - negapolygamma2(x).unwrap();
            assert!((l64 - rhs.to_f64()).abs() < 1e-12);
        }
    }

    #[test]
    fn small_arguments_use_series_only() {
        // ψ^(-2)(x) ≈ x - x log x for tiny x
        let x = 1e-8f64;
        let v = negapolygamma2(x).unwrap();
        assert!((v - (x - x * x.ln())).abs() < 1e-15);
    }
}
