//! Numerical verification helpers: log-log slope fits, constant
//! extrapolation and truncation-order studies for expansions.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::asym::{evaluate_expansion, Expansion, ExpansionKind, ExpansionParams};
use crate::energy;
use crate::error::{domain, Result};
use crate::jacobi::{self, JacobiParams};
use crate::real::Real;

/// Least-squares slope of `y` against `x`.
///
/// Returns NaN for fewer than two points or when all `x` coincide.
pub fn fit_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    if points.len() < 2 {
        return f64::NAN;
    }
    let xb = points.iter().map(|p| p.0).sum::<f64>() / n;
    let yb = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|&(x, y)| (x - xb) * (y - yb)).sum();
    let sxx: f64 = points.iter().map(|&(x, _)| (x - xb) * (x - xb)).sum();
    sxy / sxx
}

/// Fits `r(n) ≈ c + Σ_{k=1}^{K} a_k n^-k` by least squares and returns `c`.
pub fn extrapolate_constant(samples: &[(f64, f64)], correction_terms: usize) -> Result<f64> {
    let cols = correction_terms + 1;
    if samples.len() < cols {
        return Err(domain(
            "extrapolate_constant",
            format!("{} samples cannot determine {cols} unknowns", samples.len()),
        ));
    }
    // scale n so the design matrix stays well conditioned
    let n_ref = samples.iter().map(|s| s.0).fold(0.0, f64::max);
    let a = DMatrix::from_fn(samples.len(), cols, |i, k| (samples[i].0 / n_ref).powi(-(k as i32)));
    let b = DVector::from_iterator(samples.len(), samples.iter().map(|s| s.1));
    let x = a
        .svd(true, true)
        .solve(&b, 1e-14)
        .map_err(|e| domain("extrapolate_constant", e.to_string()))?;
    Ok(x[0])
}

/// The exact quantity that an expansion approximates, evaluated at `n`.
pub fn exact_value<R: Real>(kind: ExpansionKind, params: &ExpansionParams, n: usize) -> Result<R> {
    let bad = || domain("exact_value", format!("parameters {params:?} do not fit {kind:?}"));
    match (kind, *params) {
        (ExpansionKind::LogLambda, ExpansionParams::Jacobi { alpha, beta }) => {
            Ok(jacobi::leading_coeff_log(n, JacobiParams::new(alpha, beta)?))
        }
        (ExpansionKind::LogP1, ExpansionParams::Jacobi { alpha, beta }) => {
            Ok(jacobi::value_at_one_log(n, JacobiParams::new(alpha, beta)?))
        }
        (ExpansionKind::LogD, ExpansionParams::Jacobi { alpha, beta }) => {
            Ok(jacobi::discriminant_log(n, JacobiParams::new(alpha, beta)?))
        }
        (ExpansionKind::Potential, ExpansionParams::Charges { p, q }) => energy::potential_energy_exact(n, p, q),
        (ExpansionKind::EllipticE0, ExpansionParams::Charges { p, q }) => energy::elliptic_log_energy_exact(n, p, q),
        (ExpansionKind::IntervalE0, ExpansionParams::Unit {}) => energy::interval_energy_exact(n),
        (ExpansionKind::GeneralIntervalE0, ExpansionParams::Interval { a, b }) => {
            energy::interval_energy_on(energy::IntervalSpec::new(a, b)?, n)
        }
        _ => Err(bad()),
    }
}

/// Truncation errors of one order `M'` across the sample sizes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TruncationRow {
    pub m_prime: usize,
    pub errors: Vec<f64>,
    /// Fitted slope of `log|error|` against `log n`.
    pub slope: f64,
}

impl TruncationRow {
    /// Predicted slope `-(M' + 1)`.
    pub fn expected_slope(&self) -> f64 {
        -(self.m_prime as f64 + 1.0)
    }

    pub fn within(&self, tolerance: f64) -> bool {
        (self.slope - self.expected_slope()).abs() <= tolerance
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TruncationStudy {
    pub ns: Vec<usize>,
    pub exact: Vec<f64>,
    pub rows: Vec<TruncationRow>,
}

impl TruncationStudy {
    /// For each `n`, the `M'` with the smallest error; past the precision
    /// floor, further terms stop helping.
    pub fn optimal_truncation(&self) -> Vec<usize> {
        (0..self.ns.len())
            .map(|i| {
                self.rows
                    .iter()
                    .min_by(|a, b| a.errors[i].total_cmp(&b.errors[i]))
                    .map_or(0, |r| r.m_prime)
            })
            .collect()
    }
}

/// Errors `|exact(n) - evaluate(e, n, M')|` for `M' = 0..=max_order` and their slopes.
///
/// Differences are formed in the working precision before rounding to `f64`.
pub fn truncation_study<R: Real>(expansion: &Expansion<R>, ns: &[usize], max_order: usize) -> Result<TruncationStudy> {
    let exact: Vec<R> = ns
        .iter()
        .map(|&n| exact_value::<R>(expansion.kind, &expansion.params, n))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(max_order + 1);
    for m_prime in 0..=max_order {
        let mut errors = Vec::with_capacity(ns.len());
        for (&n, &e) in ns.iter().zip(&exact) {
            errors.push((e - evaluate_expansion(expansion, n, m_prime)?).abs().to_f64());
        }
        let pts: Vec<(f64, f64)> = ns
            .iter()
            .zip(&errors)
            .map(|(&n, &err)| ((n as f64).ln(), err.ln()))
            .collect();
        rows.push(TruncationRow {
            m_prime,
            slope: fit_slope(&pts),
            errors,
        });
    }
    Ok(TruncationStudy {
        ns: ns.to_vec(),
        exact: exact.iter().map(|v| v.to_f64()).collect(),
        rows,
    })
}
