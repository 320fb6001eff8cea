//! Jacobi polynomials `P_n^(α,β)` with the normalization `P_n(1) = (1+α)_n / n!`.
//!
//! Magnitudes such as the leading coefficient and the discriminant are
//! returned as natural logarithms; products are accumulated as compensated
//! sums of logarithms in ascending index order.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::real::{compensated_sum, CompensatedSum, Real};

/// Exponent pair `(α, β)` of the weight `(1-x)^α (1+x)^β`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0 && beta > -1.0) || !alpha.is_finite() || !beta.is_finite() {
            return Err(domain(
                "JacobiParams::new",
                format!("alpha = {alpha}, beta = {beta}; both must exceed -1"),
            ));
        }
        Ok(Self { alpha, beta })
    }

    /// Parameters whose zeros are the elliptic `(p, q)`-Fekete points:
    /// `α = 2p - 1`, `β = 2q - 1`.
    pub fn from_charges(p: f64, q: f64) -> Result<Self> {
        if !(p > 0.0 && q > 0.0) {
            return Err(domain(
                "JacobiParams::from_charges",
                format!("p = {p}, q = {q} must be positive"),
            ));
        }
        Self::new(2.0 * p - 1.0, 2.0 * q - 1.0)
    }

    /// Charge at `+1`.
    pub fn p(&self) -> f64 {
        (self.alpha + 1.0) / 2.0
    }

    /// Charge at `-1`.
    pub fn q(&self) -> f64 {
        (self.beta + 1.0) / 2.0
    }

    /// `(β, α)`; `P_n^(α,β)(-x) = (-1)^n P_n^(β,α)(x)`.
    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
        }
    }
}

/// The `n` zeros of `P_n^(α,β)` in ascending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroSet {
    pub n: usize,
    pub params: JacobiParams,
    pub points: Vec<f64>,
}

/// `log λ_n` where `λ_n = 2^-n binom(2n+α+β, n)` is the leading coefficient.
pub fn leading_coeff_log<R: Real>(n: usize, params: JacobiParams) -> R {
    // Γ(2n+α+β+1) / (Γ(n+α+β+1) Γ(n+1)) = Π_{k=1}^{n} (n+α+β+k) / k
    let ab = R::from_f64(params.alpha) + R::from_f64(params.beta);
    let nr = R::from_usize(n);
    let mut acc = CompensatedSum::new();
    acc.add(-nr * R::ln_2());
    for k in 1..=n {
        let kr = R::from_usize(k);
        acc.add((nr + ab + kr).ln());
        acc.add(-kr.ln());
    }
    acc.value()
}

/// `log P_n^(α,β)(1) = log[(1+α)_n / n!]`.
pub fn value_at_one_log<R: Real>(n: usize, params: JacobiParams) -> R {
    let a = R::from_f64(params.alpha);
    compensated_sum((1..=n).map(|k| {
        let kr = R::from_usize(k);
        ((a + kr) / kr).ln()
    }))
}

/// `log[(-1)^n P_n^(α,β)(-1)] = log[(1+β)_n / n!]`.
pub fn value_at_minus_one_signed_log<R: Real>(n: usize, params: JacobiParams) -> R {
    value_at_one_log(n, params.swapped())
}

/// `log D_n^(α,β)` from the closed product
/// `2^(-n(n-1)) Π_ν ν^(ν-2n+2) (ν+α)^(ν-1) (ν+β)^(ν-1) (ν+n+α+β)^(n-ν)`.
pub fn discriminant_log<R: Real>(n: usize, params: JacobiParams) -> R {
    let a = R::from_f64(params.alpha);
    let b = R::from_f64(params.beta);
    let nr = R::from_usize(n);
    let mut acc = CompensatedSum::new();
    acc.add(-nr * (nr - R::one()) * R::ln_2());
    for nu in 1..=n {
        let v = R::from_usize(nu);
        let e = R::from_i64(nu as i64 - 2 * n as i64 + 2);
        acc.add(e * v.ln());
        if nu > 1 {
            let w = R::from_usize(nu - 1);
            acc.add(w * (v + a).ln());
            acc.add(w * (v + b).ln());
        }
        if nu < n {
            acc.add(R::from_usize(n - nu) * (v + nr + a + b).ln());
        }
    }
    acc.value()
}

/// `log D_n` from its definition `λ_n^(2n-2) Π_{j<k} (x_j - x_k)^2` at the given zeros.
pub fn discriminant_log_from_zeros(zeros: &ZeroSet) -> f64 {
    let n = zeros.n;
    let lam: f64 = leading_coeff_log(n, zeros.params);
    let mut acc = CompensatedSum::new();
    acc.add((2 * n) as f64 * lam - 2.0 * lam);
    for (j, &xj) in zeros.points.iter().enumerate() {
        for &xk in &zeros.points[j + 1..] {
            acc.add(2.0 * (xj - xk).abs().ln());
        }
    }
    acc.value()
}

/// `P_n^(α,β)(x)` by the three-term recurrence.
pub fn evaluate(n: usize, params: JacobiParams, x: f64) -> f64 {
    evaluate_with_derivative(n, params, x).0
}

/// `(P_n(x), P_n'(x))`, using `P_n' = (n+α+β+1)/2 · P_{n-1}^(α+1,β+1)`.
pub fn evaluate_with_derivative(n: usize, params: JacobiParams, x: f64) -> (f64, f64) {
    let p = recurrence(n, params.alpha, params.beta, x);
    if n == 0 {
        return (p, 0.0);
    }
    let dp = 0.5
        * (n as f64 + params.alpha + params.beta + 1.0)
        * recurrence(n - 1, params.alpha + 1.0, params.beta + 1.0, x);
    (p, dp)
}

fn recurrence(n: usize, a: f64, b: f64, x: f64) -> f64 {
    let mut p0 = 1.0;
    if n == 0 {
        return p0;
    }
    let mut p1 = 0.5 * (a - b + (a + b + 2.0) * x);
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        let c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Recurrence coefficients of the monic Jacobi family: diagonal `a_k` and
/// off-diagonal `b_k` (`b_k` couples `k-1` and `k`) of the Jacobi matrix.
fn jacobi_matrix(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let diag = (0..n)
        .map(|k| {
            if k == 0 {
                (b - a) / (a + b + 2.0)
            } else {
                let s = 2.0 * k as f64 + a + b;
                (b * b - a * a) / (s * (s + 2.0))
            }
        })
        .collect();
    let off = (1..n)
        .map(|k| {
            let kf = k as f64;
            let s = 2.0 * kf + a + b;
            let sq = if k == 1 {
                4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b).powi(2) * (3.0 + a + b))
            } else {
                4.0 * kf * (kf + a) * (kf + b) * (kf + a + b) / (s * s * (s + 1.0) * (s - 1.0))
            };
            sq.sqrt()
        })
        .collect();
    (diag, off)
}

/// Zeros of `P_n^(α,β)` from the symmetric tridiagonal eigenproblem, each
/// refined by one Newton step on the three-term recurrence.
pub fn zeros(n: usize, params: JacobiParams) -> Result<ZeroSet> {
    if n == 0 {
        return Err(domain("zeros", "n must be at least 1"));
    }
    let (a, b) = (params.alpha, params.beta);
    let mut points = if n == 1 {
        vec![(b - a) / (a + b + 2.0)]
    } else {
        let (diag, off) = jacobi_matrix(n, a, b);
        let mut m = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = diag[i];
        }
        for (i, &o) in off.iter().enumerate() {
            m[(i, i + 1)] = o;
            m[(i + 1, i)] = o;
        }
        let eig = m
            .try_symmetric_eigen(f64::EPSILON, 10_000)
            .ok_or_else(|| Error::NoConvergence {
                method: "symmetric tridiagonal eigensolver",
                iterations: 10_000,
                detail: format!("n = {n}, alpha = {a}, beta = {b}"),
            })?;
        let mut ev: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        for x in ev.iter_mut() {
            let (p, dp) = evaluate_with_derivative(n, params, *x);
            if dp != 0.0 && dp.is_finite() {
                let step = p / dp;
                let polished = *x - step;
                if polished.abs() < 1.0 {
                    *x = polished;
                }
            }
        }
        ev
    };
    points.sort_by(f64::total_cmp);
    if points.iter().any(|x| !(x.abs() < 1.0)) || points.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::NoConvergence {
            method: "symmetric tridiagonal eigensolver",
            iterations: 1,
            detail: format!("zeros for n = {n}, alpha = {a}, beta = {b} are not strictly interior and ordered"),
        });
    }
    Ok(ZeroSet { n, params, points })
}
