//! Second constructions of two expansions, used to cross-check the closed forms.

use crate::error::Result;
use crate::jacobi::JacobiParams;
use crate::real::Real;
use crate::specfun::{hurwitz_poly, Constants};

use super::{
    check_charges, check_order, discriminant_expansion, leading_coeff_uncapped, value_at_one_expansion, Expansion,
    ExpansionKind, ExpansionParams, Leading,
};

fn blank<R: Real>(kind: ExpansionKind, params: ExpansionParams, order: usize) -> Expansion<R> {
    Expansion {
        kind,
        params,
        leading: Leading::default(),
        tail: vec![R::zero(); order],
    }
}

/// `acc += c · e`, term by term, over the first `acc.order()` tail entries.
fn add_scaled<R: Real>(acc: &mut Expansion<R>, e: &Expansion<R>, c: R) {
    let (l, r) = (&mut acc.leading, &e.leading);
    l.n2logn += c * r.n2logn;
    l.n2 += c * r.n2;
    l.nlogn += c * r.nlogn;
    l.n += c * r.n;
    l.logn += c * r.logn;
    l.constant += c * r.constant;
    for (a, b) in acc.tail.iter_mut().zip(&e.tail) {
        *a += c * *b;
    }
}

/// `n · e` for an expansion without `n²` or `n log n` terms; the order drops by one.
fn times_n<R: Real>(e: &Expansion<R>) -> Expansion<R> {
    debug_assert!(e.leading.n2 == R::zero() && e.leading.nlogn == R::zero() && e.leading.n2logn == R::zero());
    Expansion {
        kind: e.kind,
        params: e.params,
        leading: Leading {
            n2: e.leading.n,
            nlogn: e.leading.logn,
            n: e.leading.constant,
            constant: e.tail.first().copied().unwrap_or_else(R::zero),
            ..Leading::default()
        },
        tail: e.tail.iter().skip(1).copied().collect(),
    }
}

/// Potential energy expansion assembled from the expansions of its parts:
/// `2(n+p+q-1) log λ_n - log D_n - 2p log P_n^(α,β)(1) - 2q log P_n^(β,α)(1)`.
pub fn potential_energy_expansion_composed<R: Real>(p: f64, q: f64, order: usize) -> Result<Expansion<R>> {
    check_order::<R>(order, "potential_energy_expansion_composed")?;
    check_charges("potential_energy_expansion_composed", p, q)?;
    let params = JacobiParams::new(2.0 * p - 1.0, 2.0 * q - 1.0)?;
    let (pr, qr) = (R::from_f64(p), R::from_f64(q));
    let two = R::from_f64(2.0);

    // λ needs one extra order because of the factor n
    let lambda = leading_coeff_uncapped::<R>(params, order + 1)?;
    let disc = discriminant_expansion::<R>(params, order)?;
    let p1a = value_at_one_expansion::<R>(params, order)?;
    let p1b = value_at_one_expansion::<R>(params.swapped(), order)?;

    let mut out = blank(ExpansionKind::Potential, ExpansionParams::Charges { p, q }, order);
    add_scaled(&mut out, &times_n(&lambda), two);
    add_scaled(&mut out, &lambda, two * (pr + qr - R::one()));
    add_scaled(&mut out, &disc, -R::one());
    add_scaled(&mut out, &p1a, -two * pr);
    add_scaled(&mut out, &p1b, -two * qr);
    Ok(out)
}

/// Expansion of `ζ'(-1, cN + a)` in `N` with `order` tail terms.
fn zeta_prime_in_n<R: Real>(c: usize, a: R, order: usize) -> Result<Expansion<R>> {
    let cr = R::from_usize(c);
    let lc = cr.ln();
    let half = R::from_f64(0.5);
    let z0 = hurwitz_poly(0, a)?;
    let z1 = hurwitz_poly(1, a)?;
    let mut e = blank(ExpansionKind::IntervalE0, ExpansionParams::Unit {}, order);
    let l = &mut e.leading;
    l.n2logn = half * cr * cr;
    l.n2 = half * cr * cr * lc - R::from_f64(0.25) * cr * cr;
    l.nlogn = -z0 * cr;
    l.n = -z0 * cr * lc;
    l.logn = -z1;
    l.constant = -z1 * lc - z1;
    let mut power = R::one();
    for k in 1..=order {
        power /= cr;
        let sign = if k % 2 == 0 { R::one() } else { -R::one() };
        e.tail[k - 1] = sign / R::from_usize(k * (k + 1)) * hurwitz_poly(k + 1, a)? * power;
    }
    Ok(e)
}

/// Interval energy expansion from
/// `𝓔_0 = -N(N-1) log 2 - N log N + 3ζ'(-1) - 3ζ'(-1,N) - ζ'(-1,N-1) + ζ'(-1,2N-1)`
/// with each `ζ'(-1, ·)` replaced by its large-argument series.
pub fn interval_energy_expansion_from_endpoints<R: Real>(order: usize) -> Result<Expansion<R>> {
    check_order::<R>(order, "interval_energy_expansion_from_endpoints")?;
    let k = Constants::<R>::compute();
    let one = R::one();
    let mut out = blank(ExpansionKind::IntervalE0, ExpansionParams::Unit {}, order);
    out.leading.n2 = -R::ln_2();
    out.leading.n = R::ln_2();
    out.leading.nlogn = -one;
    out.leading.constant = R::from_f64(3.0) * k.zeta_prime_neg1;
    add_scaled(&mut out, &zeta_prime_in_n(1, R::zero(), order)?, -R::from_f64(3.0));
    add_scaled(&mut out, &zeta_prime_in_n(1, -one, order)?, -one);
    add_scaled(&mut out, &zeta_prime_in_n(2, -one, order)?, one);
    Ok(out)
}
