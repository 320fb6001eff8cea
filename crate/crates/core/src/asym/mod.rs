//! Truncated Poincaré-type expansions
//! `c₂ n² + c n log n + c₁ n + c_log log n + C + Σ_{m=1}^{M} c_m n^-m`.
//!
//! Tail coefficients are assembled from exact Bernoulli data in the working
//! precision; constants combine them with `log 2`, `log π`, `log A`,
//! `log Γ` and `ψ^(-2)`.

mod coeffs;
mod routes;

use serde::{Deserialize, Serialize};

use crate::energy::IntervalSpec;
use crate::error::{domain, Error, Result};
use crate::jacobi::JacobiParams;
use crate::real::{CompensatedSum, Real};
use crate::specfun::{log_gamma, negapolygamma2, Constants};

pub use coeffs::{discriminant_psi_exact, elliptic_h_exact, interval_tail_exact, potential_h_exact};
pub use routes::{interval_energy_expansion_from_endpoints, potential_energy_expansion_composed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExpansionKind {
    #[serde(rename = "log_lambda")]
    LogLambda,
    #[serde(rename = "log_P1")]
    LogP1,
    #[serde(rename = "log_D")]
    LogD,
    #[serde(rename = "potential")]
    Potential,
    #[serde(rename = "elliptic_E0")]
    EllipticE0,
    #[serde(rename = "interval_E0")]
    IntervalE0,
    #[serde(rename = "general_interval_E0")]
    GeneralIntervalE0,
}

impl ExpansionKind {
    pub const ALL: [ExpansionKind; 7] = [
        ExpansionKind::LogLambda,
        ExpansionKind::LogP1,
        ExpansionKind::LogD,
        ExpansionKind::Potential,
        ExpansionKind::EllipticE0,
        ExpansionKind::IntervalE0,
        ExpansionKind::GeneralIntervalE0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExpansionKind::LogLambda => "log_lambda",
            ExpansionKind::LogP1 => "log_P1",
            ExpansionKind::LogD => "log_D",
            ExpansionKind::Potential => "potential",
            ExpansionKind::EllipticE0 => "elliptic_E0",
            ExpansionKind::IntervalE0 => "interval_E0",
            ExpansionKind::GeneralIntervalE0 => "general_interval_E0",
        }
    }
}

/// Parameters an expansion was built for.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExpansionParams {
    Jacobi { alpha: f64, beta: f64 },
    Charges { p: f64, q: f64 },
    Interval { a: f64, b: f64 },
    Unit {},
}

fn is_zero<R: Real>(x: &R) -> bool {
    *x == R::zero()
}

/// Coefficients of the growing terms and the constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "R: Real")]
pub struct Leading<R> {
    /// Only nonzero in intermediate sums; never present in a finished expansion.
    #[serde(default = "R::zero", skip_serializing_if = "is_zero")]
    pub n2logn: R,
    pub n2: R,
    pub nlogn: R,
    pub n: R,
    pub logn: R,
    #[serde(rename = "const")]
    pub constant: R,
}

impl<R: Real> Default for Leading<R> {
    fn default() -> Self {
        Self {
            n2logn: R::zero(),
            n2: R::zero(),
            nlogn: R::zero(),
            n: R::zero(),
            logn: R::zero(),
            constant: R::zero(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "R: Real")]
pub struct Expansion<R> {
    pub kind: ExpansionKind,
    pub params: ExpansionParams,
    pub leading: Leading<R>,
    /// `tail[m-1]` multiplies `n^-m`.
    pub tail: Vec<R>,
}

impl<R: Real> Expansion<R> {
    /// Highest available truncation order `M`.
    pub fn order(&self) -> usize {
        self.tail.len()
    }

    pub fn evaluate(&self, n: usize, m_prime: usize) -> Result<R> {
        evaluate_expansion(self, n, m_prime)
    }
}

/// Value of the expansion at `n` with the tail cut after `n^-M'`.
///
/// Terms are summed in a fixed order: leading terms by decreasing growth,
/// then the tail by increasing `m`.
pub fn evaluate_expansion<R: Real>(e: &Expansion<R>, n: usize, m_prime: usize) -> Result<R> {
    if n < 2 {
        return Err(domain("evaluate_expansion", format!("n = {n} must be at least 2")));
    }
    if m_prime > e.order() {
        return Err(Error::Capacity {
            function: "evaluate_expansion",
            requested: m_prime,
            available: e.order(),
        });
    }
    let nr = R::from_usize(n);
    let ln = nr.ln();
    let l = &e.leading;
    let mut acc = CompensatedSum::new();
    acc.add(l.n2logn * nr * nr * ln);
    acc.add(l.n2 * nr * nr);
    acc.add(l.nlogn * nr * ln);
    acc.add(l.n * nr);
    acc.add(l.logn * ln);
    acc.add(l.constant);
    let inv = R::one() / nr;
    let mut power = R::one();
    for c in &e.tail[..m_prime] {
        power *= inv;
        acc.add(*c * power);
    }
    Ok(acc.value())
}

fn check_order<R: Real>(order: usize, function: &'static str) -> Result<()> {
    if order > R::MAX_EXPANSION_ORDER {
        return Err(Error::Capacity {
            function,
            requested: order,
            available: R::MAX_EXPANSION_ORDER,
        });
    }
    Ok(())
}

fn check_charges(function: &'static str, p: f64, q: f64) -> Result<()> {
    if p > 0.0 && q > 0.0 && p.is_finite() && q.is_finite() {
        Ok(())
    } else {
        Err(domain(function, format!("charges p = {p}, q = {q} must be positive")))
    }
}

fn tail<R: Real>(order: usize, f: impl Fn(usize) -> Result<R>) -> Result<Vec<R>> {
    (1..=order).map(f).collect()
}

/// `log λ_n^(α,β) ≈ (log 2) n - ½ log n + (α+β) log 2 - ½ log π + Σ c_m n^-m`.
pub fn leading_coeff_expansion<R: Real>(params: JacobiParams, order: usize) -> Result<Expansion<R>> {
    check_order::<R>(order, "leading_coeff_expansion")?;
    leading_coeff_uncapped(params, order)
}

fn leading_coeff_uncapped<R: Real>(params: JacobiParams, order: usize) -> Result<Expansion<R>> {
    let (a, b) = (R::from_f64(params.alpha), R::from_f64(params.beta));
    Ok(Expansion {
        kind: ExpansionKind::LogLambda,
        params: ExpansionParams::Jacobi {
            alpha: params.alpha,
            beta: params.beta,
        },
        leading: Leading {
            n: R::ln_2(),
            logn: -R::from_f64(0.5),
            constant: (a + b) * R::ln_2() - R::from_f64(0.5) * R::ln_pi(),
            ..Leading::default()
        },
        tail: tail(order, |m| coeffs::lambda_tail(m, &a, &b))?,
    })
}

/// `log P_n^(α,β)(1) ≈ α log n - log Γ(α+1) + Σ c_m n^-m`.
pub fn value_at_one_expansion<R: Real>(params: JacobiParams, order: usize) -> Result<Expansion<R>> {
    check_order::<R>(order, "value_at_one_expansion")?;
    let a = R::from_f64(params.alpha);
    Ok(Expansion {
        kind: ExpansionKind::LogP1,
        params: ExpansionParams::Jacobi {
            alpha: params.alpha,
            beta: params.beta,
        },
        leading: Leading {
            logn: a,
            constant: -log_gamma(a + R::one())?,
            ..Leading::default()
        },
        tail: tail(order, |m| coeffs::p1_tail(m, &a))?,
    })
}

/// `log D_n^(α,β)`.
pub fn discriminant_expansion<R: Real>(params: JacobiParams, order: usize) -> Result<Expansion<R>> {
    check_order::<R>(order, "discriminant_expansion")?;
    let (a, b) = (R::from_f64(params.alpha), R::from_f64(params.beta));
    let one = R::one();
    let half = R::from_f64(0.5);
    let k = Constants::<R>::compute();
    let (a1, b1) = (a + one, b + one);
    let s = a + b;
    let mut c = CompensatedSum::new();
    c.add(-R::from_f64(0.125));
    c.add(-half * (s + half) * (s + half));
    c.add(half * (R::from_f64(11.0) / R::from_f64(6.0) + s * s) * R::ln_2());
    c.add(R::ln_pi());
    c.add(R::from_f64(3.0) * k.log_glaisher);
    c.add(a1 * log_gamma(a1)?);
    c.add(-negapolygamma2(a1)?);
    c.add(b1 * log_gamma(b1)?);
    c.add(-negapolygamma2(b1)?);
    Ok(Expansion {
        kind: ExpansionKind::LogD,
        params: ExpansionParams::Jacobi {
            alpha: params.alpha,
            beta: params.beta,
        },
        leading: Leading {
            n2: R::ln_2(),
            n: R::from_f64(2.0) * s * R::ln_2() - R::ln_pi(),
            logn: half * (R::from_f64(2.5) - a1 * a1 - b1 * b1),
            constant: c.value(),
            ..Leading::default()
        },
        tail: tail(order, |m| coeffs::discriminant_tail(m, &a, &b))?,
    })
}

/// Minimal potential energy `𝓛([-1,1], q, p; n)`.
///
/// For `p = q` the coefficients are produced by the symmetric formulas.
pub fn potential_energy_expansion<R: Real>(p: f64, q: f64, order: usize) -> Result<Expansion<R>> {
    if p == q {
        potential_energy_expansion_symmetric(p, order)
    } else {
        potential_energy_expansion_general(p, q, order)
    }
}

fn potential_energy_expansion_general<R: Real>(p: f64, q: f64, order: usize) -> Result<Expansion<R>> {
    check_order::<R>(order, "potential_energy_expansion")?;
    check_charges("potential_energy_expansion", p, q)?;
    let (pr, qr) = (R::from_f64(p), R::from_f64(q));
    let two = R::from_f64(2.0);
    let quarter = R::from_f64(0.25);
    let k = Constants::<R>::compute();
    let s = pr + qr - R::one();
    let mut c = CompensatedSum::new();
    c.add(two * (s * s - R::from_f64(11.0) / R::from_f64(24.0)) * R::ln_2());
    c.add(-(pr + qr) * R::ln_pi());
    c.add(-R::from_f64(3.0) * k.log_glaisher);
    c.add(negapolygamma2(two * pr)?);
    c.add(negapolygamma2(two * qr)?);
    Ok(Expansion {
        kind: ExpansionKind::Potential,
        params: ExpansionParams::Charges { p, q },
        leading: Leading {
            n2: R::ln_2(),
            nlogn: -R::one(),
            n: two * R::ln_2() * s,
            logn: -two * ((pr - quarter) * (pr - quarter) + (qr - quarter) * (qr - quarter)),
            constant: c.value(),
            ..Leading::default()
        },
        tail: tail(order, |m| Ok(coeffs::potential_tail(m, coeffs::h(m, &pr, &qr)?)))?,
    })
}

/// Minimal potential energy for equal charges `p = q`.
pub fn potential_energy_expansion_symmetric<R: Real>(p: f64, order: usize) -> Result<Expansion<R>> {
    check_order::<R>(order, "potential_energy_expansion_symmetric")?;
    check_charges("potential_energy_expansion_symmetric", p, p)?;
    let pr = R::from_f64(p);
    let two = R::from_f64(2.0);
    let quarter = R::from_f64(0.25);
    let k = Constants::<R>::compute();
    let t = two * pr - R::one();
    let mut c = CompensatedSum::new();
    c.add(two * (t * t - R::from_f64(11.0) / R::from_f64(24.0)) * R::ln_2());
    c.add(-two * pr * R::ln_pi());
    c.add(-R::from_f64(3.0) * k.log_glaisher);
    c.add(two * negapolygamma2(two * pr)?);
    Ok(Expansion {
        kind: ExpansionKind::Potential,
        params: ExpansionParams::Charges { p, q: p },
        leading: Leading {
            n2: R::ln_2(),
            nlogn: -R::one(),
            n: two * R::ln_2() * t,
            logn: -R::from_f64(4.0) * (pr - quarter) * (pr - quarter),
            constant: c.value(),
            ..Leading::default()
        },
        tail: tail(order, |m| Ok(coeffs::potential_tail(m, coeffs::h_symmetric(m, &pr)?)))?,
    })
}

/// Logarithmic energy of the elliptic `(p, q)`-Fekete points.
pub fn elliptic_log_energy_expansion<R: Real>(p: f64, q: f64, order: usize) -> Result<Expansion<R>> {
    check_order::<R>(order, "elliptic_log_energy_expansion")?;
    check_charges("elliptic_log_energy_expansion", p, q)?;
    let (pr, qr) = (R::from_f64(p), R::from_f64(q));
    let two = R::from_f64(2.0);
    let k = Constants::<R>::compute();
    let s = pr + qr;
    let mut c = CompensatedSum::new();
    c.add(-two * (s * s - R::from_f64(13.0) / R::from_f64(24.0)) * R::ln_2());
    c.add(-R::from_f64(3.0) * k.log_glaisher);
    c.add(-two * pr * log_gamma(two * pr)?);
    c.add(negapolygamma2(two * pr)?);
    c.add(-two * qr * log_gamma(two * qr)?);
    c.add(negapolygamma2(two * qr)?);
    Ok(Expansion {
        kind: ExpansionKind::EllipticE0,
        params: ExpansionParams::Charges { p, q },
        leading: Leading {
            n2: R::ln_2(),
            nlogn: -R::one(),
            n: -two * R::ln_2(),
            logn: two * (pr * pr + qr * qr - R::from_f64(0.125)),
            constant: c.value(),
            ..Leading::default()
        },
        tail: tail(order, |m| coeffs::elliptic_tail(m, &pr, &qr))?,
    })
}

/// Minimal logarithmic energy `𝓔_0([-1,1]; N)`.
pub fn interval_energy_expansion<R: Real>(order: usize) -> Result<Expansion<R>> {
    check_order::<R>(order, "interval_energy_expansion")?;
    let k = Constants::<R>::compute();
    Ok(Expansion {
        kind: ExpansionKind::IntervalE0,
        params: ExpansionParams::Unit {},
        leading: Leading {
            n2: R::ln_2(),
            nlogn: -R::one(),
            n: -R::from_f64(2.0) * R::ln_2(),
            logn: -R::from_f64(0.25),
            constant: R::from_f64(13.0) / R::from_f64(12.0) * R::ln_2() - R::from_f64(3.0) * k.log_glaisher,
            ..Leading::default()
        },
        tail: tail(order, coeffs::interval_tail::<R>)?,
    })
}

/// Minimal logarithmic energy of `N` points on `[a, b]`: the `[-1,1]`
/// expansion with `N²` coefficient `W` and `N` coefficient `-(log 2 + W)`,
/// where `W = -log((b-a)/4)`.
pub fn general_interval_energy_expansion<R: Real>(a: f64, b: f64, order: usize) -> Result<Expansion<R>> {
    let w: R = IntervalSpec::new(a, b)?.robin_constant();
    let mut e = interval_energy_expansion::<R>(order)?;
    e.kind = ExpansionKind::GeneralIntervalE0;
    e.params = ExpansionParams::Interval { a, b };
    e.leading.n2 = w;
    e.leading.n = -(R::ln_2() + w);
    Ok(e)
}

/// Builds the expansion of `kind` for `params`.
pub fn build_expansion<R: Real>(kind: ExpansionKind, params: ExpansionParams, order: usize) -> Result<Expansion<R>> {
    let bad = || {
        domain(
            "build_expansion",
            format!("parameters {params:?} do not fit {}", kind.name()),
        )
    };
    match (kind, params) {
        (ExpansionKind::LogLambda, ExpansionParams::Jacobi { alpha, beta }) => {
            leading_coeff_expansion(JacobiParams::new(alpha, beta)?, order)
        }
        (ExpansionKind::LogP1, ExpansionParams::Jacobi { alpha, beta }) => {
            value_at_one_expansion(JacobiParams::new(alpha, beta)?, order)
        }
        (ExpansionKind::LogD, ExpansionParams::Jacobi { alpha, beta }) => {
            discriminant_expansion(JacobiParams::new(alpha, beta)?, order)
        }
        (ExpansionKind::Potential, ExpansionParams::Charges { p, q }) => potential_energy_expansion(p, q, order),
        (ExpansionKind::EllipticE0, ExpansionParams::Charges { p, q }) => elliptic_log_energy_expansion(p, q, order),
        (ExpansionKind::IntervalE0, ExpansionParams::Unit {}) => interval_energy_expansion(order),
        (ExpansionKind::GeneralIntervalE0, ExpansionParams::Interval { a, b }) => {
            general_interval_energy_expansion(a, b, order)
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests;
