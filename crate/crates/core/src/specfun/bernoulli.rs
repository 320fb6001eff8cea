//! Bernoulli numbers and polynomials, stored as exact rationals.
//!
//! Convention: `B_1 = -1/2`, so `B_1(x) = x - 1/2` and
//! `zeta(-m, a) = -B_{m+1}(a) / (m + 1)` holds with `zeta(0, 1) = -1/2`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::real::{DoubleDouble, Real};

/// Default table size: Bernoulli numbers up to `B_{MAX_ORDER + 2}`.
pub const MAX_ORDER: usize = 32;

#[derive(Debug, Clone)]
pub struct BernoulliTable {
    max_order: usize,
    numbers: Vec<BigRational>,
    /// `poly_coeffs[m][j]` is the coefficient of `x^j` in `B_m(x)`.
    poly_coeffs: Vec<Vec<BigRational>>,
    poly_coeffs_dd: Vec<Vec<DoubleDouble>>,
}

fn binomial_row(m: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one(); m + 1];
    for k in 1..m {
        row[k] = &row[k - 1] * BigInt::from(m - k + 1) / BigInt::from(k);
    }
    row
}

impl BernoulliTable {
    /// Builds `B_0 .. B_{max_order + 2}` and the matching polynomial coefficients.
    pub fn new(max_order: usize) -> Self {
        let top = max_order + 2;
        let mut numbers: Vec<BigRational> = Vec::with_capacity(top + 1);
        numbers.push(BigRational::one());
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        for m in 1..=top {
            let row = binomial_row(m + 1);
            let mut acc = BigRational::zero();
            for (k, b) in numbers.iter().enumerate() {
                acc += b * BigRational::from_integer(row[k].clone());
            }
            numbers.push(-acc / BigRational::from_integer(row[m].clone()));
        }

        let poly_coeffs: Vec<Vec<BigRational>> = (0..=top)
            .map(|m| {
                let row = binomial_row(m);
                (0..=m)
                    .map(|j| &numbers[m - j] * BigRational::from_integer(row[j].clone()))
                    .collect()
            })
            .collect();
        let poly_coeffs_dd = poly_coeffs
            .iter()
            .map(|c| c.iter().map(DoubleDouble::from_ratio).collect())
            .collect();

        Self {
            max_order,
            numbers,
            poly_coeffs,
            poly_coeffs_dd,
        }
    }

    /// Shared table of the default size.
    pub fn global() -> &'static BernoulliTable {
        static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
        TABLE.get_or_init(|| BernoulliTable::new(MAX_ORDER))
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Highest polynomial degree available (`max_order + 2`).
    pub fn max_poly_degree(&self) -> usize {
        self.max_order + 2
    }

    fn check(&self, m: usize, function: &'static str) -> Result<()> {
        if m > self.max_poly_degree() {
            return Err(Error::Capacity {
                function,
                requested: m,
                available: self.max_poly_degree(),
            });
        }
        Ok(())
    }

    pub fn number(&self, m: usize) -> Result<&BigRational> {
        self.check(m, "bernoulli_number")?;
        Ok(&self.numbers[m])
    }

    pub fn poly_coeffs(&self, m: usize) -> Result<&[BigRational]> {
        self.check(m, "bernoulli_poly")?;
        Ok(&self.poly_coeffs[m])
    }

    /// `B_m(x)` by Horner's rule in double-double, rounded once to `R`.
    pub fn eval<R: Real>(&self, m: usize, x: R) -> Result<R> {
        self.check(m, "bernoulli_poly")?;
        let x = x.to_dd();
        let acc = self.poly_coeffs_dd[m]
            .iter()
            .rev()
            .fold(DoubleDouble::ZERO, |acc, &c| acc * x + c);
        Ok(R::from_dd(acc))
    }

    /// `B_m(x)` for rational `x`, exactly.
    pub fn eval_exact(&self, m: usize, x: &BigRational) -> Result<BigRational> {
        self.check(m, "bernoulli_poly")?;
        Ok(self.poly_coeffs[m]
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c))
    }
}

/// `B_m(x)` from the shared table.
pub fn bernoulli_poly<R: Real>(m: usize, x: R) -> Result<R> {
    BernoulliTable::global().eval(m, x)
}

/// `B_m` as an exact rational from the shared table.
pub fn bernoulli_number(m: usize) -> Result<BigRational> {
    BernoulliTable::global().number(m).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Independent oracle: Akiyama–Tanigawa, which produces B_n with B_1 = +1/2.
    fn akiyama_tanigawa(n: usize) -> BigRational {
        let mut a: Vec<BigRational> = Vec::new();
        for m in 0..=n {
            a.push(q(1, m as i64 + 1));
            for j in (1..=m).rev() {
                let diff = &a[j - 1] - &a[j];
                a[j - 1] = diff * BigRational::from_integer(BigInt::from(j));
            }
        }
        a[0].clone()
    }

    #[test]
    fn numbers_match_independent_oracle() {
        let t = BernoulliTable::global();
        for n in 0..=t.max_poly_degree() {
            let mut expected = akiyama_tanigawa(n);
            if n == 1 {
                expected = -expected;
            }
            assert_eq!(t.number(n).unwrap(), &expected, "B_{n}");
        }
    }

    #[test]
    fn known_values_and_odd_vanishing() {
        let t = BernoulliTable::global();
        assert_eq!(t.number(1).unwrap(), &q(-1, 2));
        assert_eq!(t.number(4).unwrap(), &q(-1, 30));
        assert_eq!(t.number(12).unwrap(), &q(-691, 2730));
        let b32 = BigRational::new(BigInt::from(-7709321041217i64), BigInt::from(510));
        assert_eq!(t.number(32).unwrap(), &b32);
        for k in 1..=16 {
            assert!(t.number(2 * k + 1).unwrap().is_zero());
        }
    }

    #[test]
    fn operation_examples() {
        assert_eq!(bernoulli_poly(0, 0.7).unwrap(), 1.0);
        assert_eq!(bernoulli_poly(1, 0.0).unwrap(), -0.5);
        assert!((bernoulli_poly(4, 0.0).unwrap() + 1.0 / 30.0).abs() < 1e-17);
    }

    #[test]
    fn capacity_error_past_table() {
        let err = bernoulli_poly(35, 0.5f64).unwrap_err();
        assert!(matches!(err, Error::Capacity { requested: 35, .. }));
    }

    #[test]
    fn exact_evaluation_difference_identity() {
        let t = BernoulliTable::global();
        let x = q(-7, 3);
        for m in 1..=t.max_poly_degree() {
            let lhs = t.eval_exact(m, &(&x + BigRational::one())).unwrap() - t.eval_exact(m, &x).unwrap();
            let mut rhs = BigRational::from_integer(BigInt::from(m));
            for _ in 0..m - 1 {
                rhs *= &x;
            }
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    proptest! {
        #[test]
        fn difference_identity(x in -2.0f64..3.0, m in 1usize..=32) {
            let t = BernoulliTable::global();
            let lhs = t.eval(m, x + 1.0).unwrap() - t.eval(m, x).unwrap();
            let rhs = m as f64 * x.powi(m as i32 - 1);
            let scale = rhs.abs().max(t.eval(m, x).unwrap().abs()).max(1e-300);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale, "m={} x={} lhs={} rhs={}", m, x, lhs, rhs);
        }
    }
}
