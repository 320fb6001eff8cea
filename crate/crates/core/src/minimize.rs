//! Direct minimization of the external-field energy
//! `-2[p Σ log(1-x_i) + q Σ log(1+x_i) + Σ_{j<k} log|x_j - x_k|]`
//! by damped Newton steps in the ordered interior chamber.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::energy::{log_energy_config, potential_energy_config, Charges, Configuration};
use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Stop once the gradient max-norm is at most this.
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iterations: 200,
        }
    }
}

impl SolveOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub points: Configuration,
    pub iterations: usize,
    /// Max-norm of the gradient of the interior problem at the returned points.
    pub grad_norm: f64,
    pub converged: bool,
    /// Potential energy for `minimize_potential`, logarithmic energy for `fekete_maximize`.
    pub energy: f64,
}

fn interior_and_ordered(x: &[f64]) -> bool {
    x.iter().all(|v| v.abs() < 1.0) && x.windows(2).all(|w| w[0] < w[1])
}

fn energy_of(x: &[f64], c: Charges) -> f64 {
    let mut e = 0.0;
    for (i, &xi) in x.iter().enumerate() {
        e -= 2.0 * (c.p * (1.0 - xi).ln() + c.q * (1.0 + xi).ln());
        for &xj in &x[i + 1..] {
            e -= 2.0 * (xj - xi).abs().ln();
        }
    }
    e
}

fn gradient_raw(x: &[f64], c: Charges) -> Vec<f64> {
    x.iter()
        .enumerate()
        .map(|(i, &xi)| {
            let mut s = c.p / (1.0 - xi) - c.q / (1.0 + xi);
            for (j, &xj) in x.iter().enumerate() {
                if j != i {
                    s -= 1.0 / (xi - xj);
                }
            }
            2.0 * s
        })
        .collect()
}

fn hessian(x: &[f64], c: Charges) -> DMatrix<f64> {
    let n = x.len();
    let mut h = DMatrix::zeros(n, n);
    for i in 0..n {
        let mut d = c.p / (1.0 - x[i]).powi(2) + c.q / (1.0 + x[i]).powi(2);
        for j in 0..n {
            if j != i {
                let w = 1.0 / (x[i] - x[j]).powi(2);
                d += w;
                h[(i, j)] = -2.0 * w;
            }
        }
        h[(i, i)] = 2.0 * d;
    }
    h
}

fn max_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, g| m.max(g.abs()))
}

/// Gradient of the potential energy at a configuration carrying endpoint charges.
pub fn gradient(c: &Configuration) -> Result<Vec<f64>> {
    let charges = c
        .charges
        .ok_or_else(|| domain("gradient", "configuration carries no endpoint charges"))?;
    if c.points.iter().any(|x| !(x.abs() < 1.0)) {
        return Err(domain("gradient", "points must be strictly interior"));
    }
    let mut sorted = c.points.clone();
    sorted.sort_by(f64::total_cmp);
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(domain("gradient", "points must be distinct"));
    }
    Ok(gradient_raw(&c.points, charges))
}

/// Chebyshev points scaled by `1 - 1/n`, ascending.
fn initial_guess(n: usize) -> Vec<f64> {
    let scale = 1.0 - 1.0 / n as f64;
    (0..n)
        .map(|k| -scale * (std::f64::consts::PI * (k as f64 + 0.5) / n as f64).cos())
        .collect()
}

/// Minimizes the potential energy of `n` points for charges `p`, `q`.
pub fn minimize_potential(n: usize, p: f64, q: f64, opts: &SolveOptions) -> Result<SolveReport> {
    if n == 0 {
        return Err(domain("minimize_potential", "n must be at least 1"));
    }
    minimize_potential_from(initial_guess(n), p, q, opts)
}

/// As [`minimize_potential`], from a given strictly interior, strictly ascending start.
pub fn minimize_potential_from(initial: Vec<f64>, p: f64, q: f64, opts: &SolveOptions) -> Result<SolveReport> {
    let charges = Charges::new(p, q)?;
    if !(opts.tol > 0.0) {
        return Err(domain(
            "minimize_potential",
            format!("tol = {} must be positive", opts.tol),
        ));
    }
    if initial.is_empty() || !interior_and_ordered(&initial) {
        return Err(domain(
            "minimize_potential",
            "initial points must be nonempty, strictly interior and strictly ascending",
        ));
    }
    let mut x = initial;
    let mut g = gradient_raw(&x, charges);
    let mut e = energy_of(&x, charges);
    let mut iterations = 0;
    while max_norm(&g) > opts.tol && iterations < opts.max_iterations {
        iterations += 1;
        let h = hessian(&x, charges);
        let rhs = -DVector::from_column_slice(&g);
        let step = match h.cholesky() {
            Some(ch) => ch.solve(&rhs),
            None => rhs * 0.1,
        };
        let slope: f64 = step.iter().zip(&g).map(|(d, gi)| d * gi).sum();
        // near the optimum energy differences drop below rounding; trust the full step
        let small_decrement = -slope < 1e-12 * e.abs().max(1.0);
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..60 {
            let trial: Vec<f64> = x.iter().zip(step.iter()).map(|(xi, d)| xi + t * d).collect();
            if interior_and_ordered(&trial) {
                let et = energy_of(&trial, charges);
                if small_decrement || et <= e + 1e-4 * t * slope {
                    x = trial;
                    e = et;
                    accepted = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if !accepted {
            // fall back to the gradient-norm merit for the full step
            let trial: Vec<f64> = x.iter().zip(step.iter()).map(|(xi, d)| xi + d).collect();
            if !interior_and_ordered(&trial) {
                break;
            }
            let gt = gradient_raw(&trial, charges);
            if max_norm(&gt) >= max_norm(&g) {
                break;
            }
            e = energy_of(&trial, charges);
            x = trial;
        }
        g = gradient_raw(&x, charges);
    }
    let grad_norm = max_norm(&g);
    let points = Configuration::with_charges(x, p, q)?;
    let energy = potential_energy_config(&points)?;
    Ok(SolveReport {
        points,
        iterations,
        grad_norm,
        converged: grad_norm <= opts.tol,
        energy,
    })
}

/// Fekete points of `[-1, 1]`: both endpoints plus the minimizer for unit charges.
///
/// Every optimal configuration contains `±1`, since otherwise rescaling the
/// points outward increases all mutual distances.
pub fn fekete_maximize(big_n: usize, opts: &SolveOptions) -> Result<SolveReport> {
    if big_n < 2 {
        return Err(domain("fekete_maximize", format!("N = {big_n} must be at least 2")));
    }
    let (interior, iterations, grad_norm, converged) = if big_n == 2 {
        (Vec::new(), 0, 0.0, true)
    } else {
        let r = minimize_potential(big_n - 2, 1.0, 1.0, opts)?;
        (r.points.points, r.iterations, r.grad_norm, r.converged)
    };
    let mut pts = Vec::with_capacity(big_n);
    pts.push(-1.0);
    pts.extend(interior);
    pts.push(1.0);
    let points = Configuration::new(pts)?;
    let energy = log_energy_config(&points)?;
    Ok(SolveReport {
        points,
        iterations,
        grad_norm,
        converged,
        energy,
    })
}
