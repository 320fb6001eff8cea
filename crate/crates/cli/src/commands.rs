//! Subcommand implementations.

use fekete_core::asym::{build_expansion, Expansion, ExpansionKind, ExpansionParams};
use fekete_core::energy::{
    elliptic_log_energy_exact, interval_discriminant_log, interval_energy_exact, interval_energy_on,
    potential_energy_exact, pq_discriminant_log, IntervalSpec,
};
use fekete_core::jacobi::{zeros, JacobiParams};
use fekete_core::minimize::{fekete_maximize, minimize_potential, SolveOptions, SolveReport};
use fekete_core::verify::{exact_value, truncation_study};
use fekete_core::{DoubleDouble, Precision, Real};
use serde::Serialize;

use crate::output::{csv_table, emit, json, num, num64, opt, CliError, CliResult};
use crate::{Cli, Command, Format, Kind};

const DEFAULT_SLOPE_TOL: f64 = 0.15;
const DEFAULT_ZERO_TOL: f64 = 1e-8;

pub fn run(cli: &Cli) -> CliResult<()> {
    let ext = cli.precision == Precision::Extended;
    let bytes = match (cli.command, ext) {
        (Command::Exact, false) => exact::<f64>(cli)?,
        (Command::Exact, true) => exact::<DoubleDouble>(cli)?,
        (Command::Coeffs, false) => coeffs::<f64>(cli)?,
        (Command::Coeffs, true) => coeffs::<DoubleDouble>(cli)?,
        (Command::Table, false) => table::<f64>(cli)?,
        (Command::Table, true) => table::<DoubleDouble>(cli)?,
        (Command::Zeros, _) => zeros_cmd(cli)?,
        (Command::Minimize, _) => minimize_cmd(cli)?,
        (Command::Verify, _) if cli.kind == Kind::Minimize => return verify_minimize(cli),
        (Command::Verify, false) => return verify::<f64>(cli),
        (Command::Verify, true) => return verify::<DoubleDouble>(cli),
    };
    emit(&bytes, cli.out.as_deref())
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// `(p, q)` from `--p/--q` or `--alpha/--beta`; unit charges if neither is given.
fn charges(cli: &Cli) -> CliResult<(f64, f64)> {
    let by_charge = cli.p.is_some() || cli.q.is_some();
    let by_jacobi = cli.alpha.is_some() || cli.beta.is_some();
    let (p, q) = match (by_charge, by_jacobi) {
        (true, true) => return Err(usage("give either --p/--q or --alpha/--beta, not both")),
        (true, false) => {
            let p = cli.p.or(cli.q).unwrap_or(1.0);
            (p, cli.q.unwrap_or(p))
        }
        (false, true) => {
            let a = cli.alpha.or(cli.beta).unwrap_or(1.0);
            ((a + 1.0) / 2.0, (cli.beta.unwrap_or(a) + 1.0) / 2.0)
        }
        (false, false) => (1.0, 1.0),
    };
    if !(p > 0.0 && q > 0.0 && p.is_finite() && q.is_finite()) {
        return Err(usage(format!("charges p = {p}, q = {q} must be positive")));
    }
    Ok((p, q))
}

/// Jacobi parameters from `--alpha/--beta` or `--p/--q`; Legendre if neither is given.
fn jacobi_params(cli: &Cli) -> CliResult<JacobiParams> {
    if cli.p.is_none() && cli.q.is_none() && cli.alpha.is_none() && cli.beta.is_none() {
        return Ok(JacobiParams::new(0.0, 0.0)?);
    }
    if cli.alpha.is_some() || cli.beta.is_some() {
        if cli.p.is_some() || cli.q.is_some() {
            return Err(usage("give either --p/--q or --alpha/--beta, not both"));
        }
        let a = cli.alpha.or(cli.beta).unwrap_or(0.0);
        return Ok(JacobiParams::new(a, cli.beta.unwrap_or(a))?);
    }
    let (p, q) = charges(cli)?;
    Ok(JacobiParams::from_charges(p, q)?)
}

fn expansion_request(cli: &Cli) -> CliResult<(ExpansionKind, ExpansionParams)> {
    let jacobi = || -> CliResult<ExpansionParams> {
        let j = jacobi_params(cli)?;
        Ok(ExpansionParams::Jacobi {
            alpha: j.alpha,
            beta: j.beta,
        })
    };
    let pq = || -> CliResult<ExpansionParams> {
        let (p, q) = charges(cli)?;
        Ok(ExpansionParams::Charges { p, q })
    };
    Ok(match cli.kind {
        Kind::Potential => (ExpansionKind::Potential, pq()?),
        Kind::Elliptic => (ExpansionKind::EllipticE0, pq()?),
        Kind::Interval => (ExpansionKind::IntervalE0, ExpansionParams::Unit {}),
        Kind::GeneralInterval => (
            ExpansionKind::GeneralIntervalE0,
            ExpansionParams::Interval { a: cli.a, b: cli.b },
        ),
        Kind::LogLambda => (ExpansionKind::LogLambda, jacobi()?),
        Kind::LogP1 => (ExpansionKind::LogP1, jacobi()?),
        Kind::LogD => (ExpansionKind::LogD, jacobi()?),
        Kind::Minimize => return Err(usage("--kind minimize is only meaningful for `verify`")),
    })
}

fn expansion<R: Real>(cli: &Cli) -> CliResult<Expansion<R>> {
    let (kind, params) = expansion_request(cli)?;
    Ok(build_expansion::<R>(kind, params, cli.order)?)
}

#[derive(Serialize)]
struct ExactRow<R> {
    n: usize,
    #[serde(rename = "L_exact")]
    l_exact: Option<R>,
    #[serde(rename = "E0_exact")]
    e0_exact: Option<R>,
    log_delta: Option<R>,
}

fn exact<R: Real>(cli: &Cli) -> CliResult<Vec<u8>> {
    let mut rows = Vec::new();
    for &n in cli.counts()? {
        let row = match cli.kind {
            Kind::Potential | Kind::Elliptic | Kind::Minimize => {
                let (p, q) = charges(cli)?;
                ExactRow {
                    n,
                    l_exact: Some(potential_energy_exact::<R>(n, p, q)?),
                    e0_exact: if n >= 2 {
                        Some(elliptic_log_energy_exact::<R>(n, p, q)?)
                    } else {
                        None
                    },
                    log_delta: Some(pq_discriminant_log::<R>(n, p, q)?),
                }
            }
            Kind::Interval => ExactRow {
                n,
                l_exact: None,
                e0_exact: Some(interval_energy_exact::<R>(n)?),
                log_delta: Some(interval_discriminant_log::<R>(n)?),
            },
            Kind::GeneralInterval => {
                let e = interval_energy_on::<R>(IntervalSpec::new(cli.a, cli.b)?, n)?;
                ExactRow {
                    n,
                    l_exact: None,
                    e0_exact: Some(e),
                    log_delta: Some(-e),
                }
            }
            Kind::LogLambda | Kind::LogP1 | Kind::LogD => {
                return Err(usage(
                    "`exact` supports --kind potential, elliptic, interval, general-interval",
                ))
            }
        };
        rows.push(row);
    }
    match cli.format_or(Format::Csv) {
        Format::Json => json(&rows),
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![r.n.to_string(), opt(r.l_exact), opt(r.e0_exact), opt(r.log_delta)])
                .collect();
            csv_table(&["n", "L_exact", "E0_exact", "log_delta"], &body)
        }
    }
}

fn coeffs<R: Real>(cli: &Cli) -> CliResult<Vec<u8>> {
    let e = expansion::<R>(cli)?;
    match cli.format_or(Format::Json) {
        Format::Json => json(&e),
        Format::Csv => {
            let l = &e.leading;
            let mut body = vec![
                vec!["n2".to_string(), num(l.n2)],
                vec!["nlogn".to_string(), num(l.nlogn)],
                vec!["n".to_string(), num(l.n)],
                vec!["logn".to_string(), num(l.logn)],
                vec!["const".to_string(), num(l.constant)],
            ];
            for (m, c) in e.tail.iter().enumerate() {
                body.push(vec![format!("tail_{}", m + 1), num(*c)]);
            }
            csv_table(&["term", "coefficient"], &body)
        }
    }
}

#[derive(Serialize)]
struct TableRow<R> {
    n: usize,
    m_prime: usize,
    exact: R,
    truncated: R,
    error: R,
}

fn table_rows<R: Real>(e: &Expansion<R>, ns: &[usize]) -> CliResult<Vec<TableRow<R>>> {
    let mut rows = Vec::new();
    for &n in ns {
        let exact = exact_value::<R>(e.kind, &e.params, n)?;
        for m_prime in 0..=e.order() {
            let truncated = e.evaluate(n, m_prime)?;
            rows.push(TableRow {
                n,
                m_prime,
                exact,
                truncated,
                error: (exact - truncated).abs(),
            });
        }
    }
    Ok(rows)
}

fn table<R: Real>(cli: &Cli) -> CliResult<Vec<u8>> {
    let e = expansion::<R>(cli)?;
    let rows = table_rows(&e, cli.counts()?)?;
    match cli.format_or(Format::Csv) {
        Format::Json => json(&rows),
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.m_prime.to_string(),
                        num(r.exact),
                        num(r.truncated),
                        num(r.error),
                    ]
                })
                .collect();
            csv_table(&["n", "m_prime", "exact", "truncated", "error"], &body)
        }
    }
}

#[derive(Serialize)]
struct SlopeRow {
    m_prime: usize,
    slope: f64,
    expected: f64,
    within: bool,
}

#[derive(Serialize)]
struct OptimalRow {
    n: usize,
    m_prime: usize,
}

#[derive(Serialize)]
struct VerifyReport<R> {
    kind: ExpansionKind,
    params: ExpansionParams,
    tolerance: f64,
    rows: Vec<TableRow<R>>,
    slopes: Vec<SlopeRow>,
    optimal_truncation: Vec<OptimalRow>,
    passed: bool,
}

fn verify<R: Real>(cli: &Cli) -> CliResult<()> {
    let tol = cli.tol.unwrap_or(DEFAULT_SLOPE_TOL);
    let ns = cli.counts()?;
    if ns.len() < 2 {
        return Err(usage("slope fits need at least two values of n"));
    }
    let e = expansion::<R>(cli)?;
    let study = truncation_study(&e, ns, e.order())?;
    let slopes: Vec<SlopeRow> = study
        .rows
        .iter()
        .map(|r| SlopeRow {
            m_prime: r.m_prime,
            slope: r.slope,
            expected: r.expected_slope(),
            within: r.within(tol),
        })
        .collect();
    let optimal: Vec<OptimalRow> = ns
        .iter()
        .zip(study.optimal_truncation())
        .map(|(&n, m_prime)| OptimalRow { n, m_prime })
        .collect();
    let report = VerifyReport {
        kind: e.kind,
        params: e.params,
        tolerance: tol,
        rows: table_rows(&e, ns)?,
        passed: slopes.iter().all(|s| s.within),
        slopes,
        optimal_truncation: optimal,
    };
    let bytes = match cli.format_or(Format::Csv) {
        Format::Json => json(&report)?,
        Format::Csv => {
            let body: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    let s = &report.slopes[r.m_prime];
                    let best = report
                        .optimal_truncation
                        .iter()
                        .any(|o| o.n == r.n && o.m_prime == r.m_prime);
                    vec![
                        r.n.to_string(),
                        r.m_prime.to_string(),
                        num(r.exact),
                        num(r.truncated),
                        num(r.error),
                        num64(s.slope),
                        num64(s.expected),
                        s.within.to_string(),
                        best.to_string(),
                    ]
                })
                .collect();
            csv_table(
                &[
                    "n",
                    "m_prime",
                    "exact",
                    "truncated",
                    "error",
                    "slope",
                    "expected_slope",
                    "within",
                    "optimal",
                ],
                &body,
            )?
        }
    };
    emit(&bytes, cli.out.as_deref())?;
    let off: Vec<String> = report
        .slopes
        .iter()
        .filter(|s| !s.within)
        .map(|s| format!("M'={} slope {:.4} expected {} ± {tol}", s.m_prime, s.slope, s.expected))
        .collect();
    if off.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(off.join("; ")))
    }
}

#[derive(Serialize)]
struct SolverRow {
    n: usize,
    iterations: usize,
    converged: bool,
    grad_norm: f64,
    max_deviation: f64,
    within: bool,
}

fn verify_minimize(cli: &Cli) -> CliResult<()> {
    let tol = cli.tol.unwrap_or(DEFAULT_ZERO_TOL);
    let (p, q) = charges(cli)?;
    let params = JacobiParams::from_charges(p, q)?;
    let opts = SolveOptions::default();
    let mut rows = Vec::new();
    for &n in cli.counts()? {
        let r = minimize_potential(n, p, q, &opts)?;
        let z = zeros(n, params)?;
        let dev = r
            .points
            .points
            .iter()
            .zip(&z.points)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        rows.push(SolverRow {
            n,
            iterations: r.iterations,
            converged: r.converged,
            grad_norm: r.grad_norm,
            max_deviation: dev,
            within: r.converged && dev <= tol,
        });
    }
    let bytes = match cli.format_or(Format::Csv) {
        Format::Json => json(&rows)?,
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.iterations.to_string(),
                        r.converged.to_string(),
                        num64(r.grad_norm),
                        num64(r.max_deviation),
                        r.within.to_string(),
                    ]
                })
                .collect();
            csv_table(
                &["n", "iterations", "converged", "grad_norm", "max_deviation", "within"],
                &body,
            )?
        }
    };
    emit(&bytes, cli.out.as_deref())?;
    let off: Vec<String> = rows
        .iter()
        .filter(|r| !r.within)
        .map(|r| format!("n={} deviation {:e} converged {}", r.n, r.max_deviation, r.converged))
        .collect();
    if off.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(off.join("; ")))
    }
}

#[derive(Serialize)]
struct ZeroRow {
    n: usize,
    alpha: f64,
    beta: f64,
    points: Vec<f64>,
}

fn zeros_cmd(cli: &Cli) -> CliResult<Vec<u8>> {
    let params = jacobi_params(cli)?;
    let mut rows = Vec::new();
    for &n in cli.counts()? {
        let z = zeros(n, params)?;
        rows.push(ZeroRow {
            n,
            alpha: params.alpha,
            beta: params.beta,
            points: z.points,
        });
    }
    match cli.format_or(Format::Csv) {
        Format::Json => json(&rows),
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .flat_map(|r| {
                    r.points
                        .iter()
                        .enumerate()
                        .map(move |(i, x)| vec![r.n.to_string(), (i + 1).to_string(), num64(*x)])
                })
                .collect();
            csv_table(&["n", "index", "x"], &body)
        }
    }
}

#[derive(Serialize)]
struct MinimizeRow {
    n: usize,
    iterations: usize,
    converged: bool,
    grad_norm: f64,
    energy: f64,
    points: Vec<f64>,
    reference: Vec<f64>,
}

fn solve_one(cli: &Cli, n: usize, opts: &SolveOptions) -> CliResult<(SolveReport, Vec<f64>)> {
    match cli.kind {
        Kind::Interval => {
            let r = fekete_maximize(n, opts)?;
            let mut reference = vec![-1.0];
            if n > 2 {
                reference.extend(zeros(n - 2, JacobiParams::new(1.0, 1.0)?)?.points);
            }
            reference.push(1.0);
            Ok((r, reference))
        }
        Kind::Potential | Kind::Minimize => {
            let (p, q) = charges(cli)?;
            let r = minimize_potential(n, p, q, opts)?;
            let reference = zeros(n, JacobiParams::from_charges(p, q)?)?.points;
            Ok((r, reference))
        }
        _ => Err(usage("`minimize` supports --kind potential or interval")),
    }
}

fn minimize_cmd(cli: &Cli) -> CliResult<Vec<u8>> {
    let opts = SolveOptions::default();
    let mut rows = Vec::new();
    for &n in cli.counts()? {
        let (r, reference) = solve_one(cli, n, &opts)?;
        rows.push(MinimizeRow {
            n,
            iterations: r.iterations,
            converged: r.converged,
            grad_norm: r.grad_norm,
            energy: r.energy,
            points: r.points.points,
            reference,
        });
    }
    match cli.format_or(Format::Csv) {
        Format::Json => json(&rows),
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .flat_map(|r| {
                    r.points.iter().zip(&r.reference).enumerate().map(move |(i, (x, z))| {
                        vec![
                            r.n.to_string(),
                            (i + 1).to_string(),
                            num64(*x),
                            num64(*z),
                            num64((x - z).abs()),
                        ]
                    })
                })
                .collect();
            csv_table(&["n", "index", "x", "reference", "abs_diff"], &body)
        }
    }
}
