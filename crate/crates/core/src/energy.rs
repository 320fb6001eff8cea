//! Logarithmic energies of point configurations in `[-1, 1]`, and the closed
//! forms of the optimal energies and discriminants.
//!
//! Every quantity here is already a logarithm; discriminants are never
//! exponentiated.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::jacobi::{self, JacobiParams};
use crate::real::{CompensatedSum, Real};
use crate::specfun::zeta_prime_neg1_exact;

/// Endpoint charges: `p` at `+1`, `q` at `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Charges {
    pub p: f64,
    pub q: f64,
}

impl Charges {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        check_charges("Charges::new", p, q)?;
        Ok(Self { p, q })
    }

    pub fn jacobi(&self) -> JacobiParams {
        JacobiParams {
            alpha: 2.0 * self.p - 1.0,
            beta: 2.0 * self.q - 1.0,
        }
    }
}

fn check_charges(function: &'static str, p: f64, q: f64) -> Result<()> {
    if p > 0.0 && q > 0.0 && p.is_finite() && q.is_finite() {
        Ok(())
    } else {
        Err(domain(function, format!("charges p = {p}, q = {q} must be positive")))
    }
}

/// Points in `[-1, 1]`, optionally with endpoint charges for the external-field problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Configuration {
    pub points: Vec<f64>,
    pub charges: Option<Charges>,
}

impl Configuration {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if let Some(x) = points.iter().find(|x| !(x.abs() <= 1.0)) {
            return Err(domain("Configuration::new", format!("point {x} lies outside [-1, 1]")));
        }
        Ok(Self { points, charges: None })
    }

    pub fn with_charges(points: Vec<f64>, p: f64, q: f64) -> Result<Self> {
        let mut c = Self::new(points)?;
        c.charges = Some(Charges::new(p, q)?);
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A closed interval `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalSpec {
    pub a: f64,
    pub b: f64,
}

impl IntervalSpec {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(b > a) || !(b - a).is_finite() {
            return Err(domain(
                "IntervalSpec::new",
                format!("[{a}, {b}] is not a proper interval"),
            ));
        }
        Ok(Self { a, b })
    }

    /// Logarithmic capacity `(b - a)/4`.
    pub fn capacity(&self) -> f64 {
        (self.b - self.a) / 4.0
    }

    /// `W = -log cap`.
    pub fn robin_constant<R: Real>(&self) -> R {
        -(R::from_f64(self.b) - R::from_f64(self.a)).ln() + R::from_f64(4.0).ln()
    }

    /// Scale factor `η` mapping `[-1, 1]` onto this interval.
    pub fn eta(&self) -> f64 {
        (self.b - self.a) / 2.0
    }
}

/// Sum of `-2 log|x_j - x_k|` over pairs `j < k`.
fn pair_sum(points: &[f64], function: &'static str) -> Result<CompensatedSum<f64>> {
    let mut acc = CompensatedSum::new();
    for (j, &xj) in points.iter().enumerate() {
        for &xk in &points[j + 1..] {
            let d = (xj - xk).abs();
            if d == 0.0 {
                return Err(Error::InfiniteEnergy(format!("{function}: coincident points at {xj}")));
            }
            acc.add(-2.0 * d.ln());
        }
    }
    Ok(acc)
}

/// `E_0 = Σ_{j≠k} log(1/|x_j - x_k|)`.
pub fn log_energy_config(c: &Configuration) -> Result<f64> {
    Ok(pair_sum(&c.points, "log_energy_config")?.value())
}

/// `2 log(1/T_n) = -2[p Σ log(1-x_i) + Σ_{j<k} log|x_j-x_k| + q Σ log(1+x_i)]`.
pub fn potential_energy_config(c: &Configuration) -> Result<f64> {
    let charges = c
        .charges
        .ok_or_else(|| domain("potential_energy_config", "configuration carries no endpoint charges"))?;
    let mut acc = pair_sum(&c.points, "potential_energy_config")?;
    for &x in &c.points {
        if !(x.abs() < 1.0) {
            return Err(Error::InfiniteEnergy(format!(
                "potential_energy_config: point {x} is not strictly interior"
            )));
        }
        acc.add(-2.0 * charges.p * (1.0 - x).ln());
        acc.add(-2.0 * charges.q * (1.0 + x).ln());
    }
    Ok(acc.value())
}

/// Minimal potential energy `𝓛([-1,1], q, p; n)` of `n` points in the field of
/// charges `p` at `+1` and `q` at `-1`.
pub fn potential_energy_exact<R: Real>(n: usize, p: f64, q: f64) -> Result<R> {
    check_charges("potential_energy_exact", p, q)?;
    if n == 0 {
        return Err(domain("potential_energy_exact", "n must be at least 1"));
    }
    let params = Charges { p, q }.jacobi();
    let (pr, qr) = (R::from_f64(p), R::from_f64(q));
    let two = R::from_f64(2.0);
    let mut acc = CompensatedSum::new();
    acc.add(two * (R::from_usize(n) + pr + qr - R::one()) * jacobi::leading_coeff_log::<R>(n, params));
    acc.add(-jacobi::discriminant_log::<R>(n, params));
    acc.add(-two * pr * jacobi::value_at_one_log::<R>(n, params));
    acc.add(-two * qr * jacobi::value_at_one_log::<R>(n, params.swapped()));
    Ok(acc.value())
}

/// Logarithmic energy of the elliptic `(p, q)`-Fekete points, the zeros of `P_n^(2p-1, 2q-1)`.
pub fn elliptic_log_energy_exact<R: Real>(n: usize, p: f64, q: f64) -> Result<R> {
    check_charges("elliptic_log_energy_exact", p, q)?;
    if n < 2 {
        return Err(domain(
            "elliptic_log_energy_exact",
            format!("n = {n} must be at least 2"),
        ));
    }
    let params = Charges { p, q }.jacobi();
    let nr = R::from_usize(n);
    Ok(
        R::from_f64(2.0) * (nr - R::one()) * jacobi::leading_coeff_log::<R>(n, params)
            - jacobi::discriminant_log::<R>(n, params),
    )
}

/// Minimal logarithmic energy `𝓔_0([-1,1]; N)` of `N` points.
///
/// The optimum is `±1` together with the zeros of `P_{N-2}^(1,1)`; `N = 2`
/// uses `λ_0 = D_0 = P_0(1) = 1`.
pub fn interval_energy_exact<R: Real>(big_n: usize) -> Result<R> {
    if big_n < 2 {
        return Err(domain(
            "interval_energy_exact",
            format!("N = {big_n} must be at least 2"),
        ));
    }
    let n = big_n - 2;
    let params = JacobiParams { alpha: 1.0, beta: 1.0 };
    let mut acc = CompensatedSum::new();
    acc.add(R::from_usize(2 * (big_n - 1)) * jacobi::leading_coeff_log::<R>(n, params));
    if n >= 1 {
        acc.add(-jacobi::discriminant_log::<R>(n, params));
    }
    acc.add(-R::from_f64(4.0) * jacobi::value_at_one_log::<R>(n, params));
    acc.add(-R::from_f64(2.0) * R::ln_2());
    Ok(acc.value())
}

/// Minimal logarithmic energy of `N` points on `[a, b]`, by rescaling `[-1, 1]`.
pub fn interval_energy_on<R: Real>(interval: IntervalSpec, big_n: usize) -> Result<R> {
    let base = interval_energy_exact::<R>(big_n)?;
    // b - a is exact in R, not in f64
    let le = (R::from_f64(interval.b) - R::from_f64(interval.a)).ln() - R::ln_2();
    rescale_with_log(RescaleKind::Interval, base, le, big_n)
}

fn x_log_x<R: Real>(x: R) -> R {
    if x == R::zero() {
        R::zero()
    } else {
        x * x.ln()
    }
}

/// `log Δ_N([-1,1])`, the log of the maximal product of mutual distances.
pub fn interval_discriminant_log<R: Real>(big_n: usize) -> Result<R> {
    if big_n < 2 {
        return Err(domain(
            "interval_discriminant_log",
            format!("N = {big_n} must be at least 2"),
        ));
    }
    let nr = R::from_usize(big_n);
    let mut acc = CompensatedSum::new();
    acc.add(nr * (nr - R::one()) * R::ln_2());
    acc.add(x_log_x(nr));
    let three = R::from_f64(3.0);
    for k in 1..big_n {
        acc.add(three * x_log_x(R::from_usize(k)));
    }
    for k in big_n - 1..=2 * (big_n - 1) {
        acc.add(-x_log_x(R::from_usize(k)));
    }
    Ok(acc.value())
}

/// `log Δ_n^(p,q)([-1,1])`, the log of the maximal weighted product.
pub fn pq_discriminant_log<R: Real>(n: usize, p: f64, q: f64) -> Result<R> {
    check_charges("pq_discriminant_log", p, q)?;
    if n == 0 {
        return Err(domain("pq_discriminant_log", "n must be at least 1"));
    }
    let two = R::from_f64(2.0);
    let (tp, tq) = (two * R::from_f64(p), two * R::from_f64(q));
    let nr = R::from_usize(n);
    let mut acc = CompensatedSum::new();
    acc.add(nr * (nr + tp + tq - R::one()) * R::ln_2());
    for k in 1..=n {
        let kr = R::from_usize(k);
        acc.add(x_log_x(kr));
        acc.add(x_log_x(kr + tp - R::one()));
        acc.add(x_log_x(kr + tq - R::one()));
    }
    for k in n - 1..=2 * (n - 1) {
        acc.add(-x_log_x(R::from_usize(k) + tp + tq));
    }
    Ok(acc.value())
}

/// `Σ_{k=m+1}^{n} (k + offset) log(k + offset)`, summed directly.
pub fn logsum_shifted<R: Real>(m: usize, n: usize, offset: R) -> Result<R> {
    if n <= m {
        return Err(domain("logsum_shifted", format!("n = {n} must exceed m = {m}")));
    }
    let first = R::from_usize(m + 1) + offset;
    if !(first > R::zero()) {
        return Err(domain(
            "logsum_shifted",
            format!("summand argument {first:?} is not positive"),
        ));
    }
    let mut acc = CompensatedSum::new();
    for k in m + 1..=n {
        acc.add(x_log_x(R::from_usize(k) + offset));
    }
    Ok(acc.value())
}

/// The same sum as `ζ'(-1, n+1+offset) - ζ'(-1, m+1+offset)`.
pub fn logsum_shifted_zeta<R: Real>(m: usize, n: usize, offset: R) -> Result<R> {
    if n <= m {
        return Err(domain("logsum_shifted_zeta", format!("n = {n} must exceed m = {m}")));
    }
    let hi = zeta_prime_neg1_exact(R::from_usize(n + 1) + offset)?;
    let lo = zeta_prime_neg1_exact(R::from_usize(m + 1) + offset)?;
    Ok(hi - lo)
}

/// Which optimal energy is being moved from `[-1, 1]` to `η[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RescaleKind {
    Potential { p: f64, q: f64 },
    Interval,
}

/// Energy on the interval scaled by `η`, given the `[-1, 1]` value `base`.
///
/// Potential: `base - (log η) n² - (log η)(2p + 2q - 1) n`.
/// Interval: `base - (log η)(N² - N)`, which for `[a, b]` (η = (b-a)/2) is
/// `base + (W([a,b]) - log 2)(N² - N)`.
pub fn rescale_energy<R: Real>(kind: RescaleKind, base: R, eta: f64, n: usize) -> Result<R> {
    if !(eta > 0.0) || !eta.is_finite() {
        return Err(domain("rescale_energy", format!("eta = {eta} must be positive")));
    }
    rescale_with_log(kind, base, R::from_f64(eta).ln(), n)
}

fn rescale_with_log<R: Real>(kind: RescaleKind, base: R, le: R, n: usize) -> Result<R> {
    let nr = R::from_usize(n);
    match kind {
        RescaleKind::Potential { p, q } => {
            check_charges("rescale_energy", p, q)?;
            let s = R::from_f64(2.0) * (R::from_f64(p) + R::from_f64(q)) - R::one();
            Ok(base - le * nr * nr - le * s * nr)
        }
        RescaleKind::Interval => Ok(base - le * (nr * nr - nr)),
    }
}
