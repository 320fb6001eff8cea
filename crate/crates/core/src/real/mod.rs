//! Scalar arithmetic modes.
//!
//! Every exact formula and every expansion is generic over [`Real`]. Two
//! implementations exist: `f64` (standard precision, about 16 significant
//! digits) and [`DoubleDouble`] (extended precision, about 32 digits). The
//! extended mode is needed to see asymptotic tails of order `n^-5` underneath
//! energies of order `n^2`.

mod dd;
mod sum;

use std::fmt::{self, Debug};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub use dd::DoubleDouble;
pub use sum::{compensated_sum, CompensatedSum};

/// Run-time selection of the scalar type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    #[default]
    #[serde(rename = "std")]
    Standard,
    #[serde(rename = "ext")]
    Extended,
}

impl Precision {
    /// Environment variable consulted for the default mode.
    pub const ENV_VAR: &'static str = "FEKETE_PRECISION";

    /// Reads `FEKETE_PRECISION`; unset or unparsable values give `Standard`.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or_default()
    }

    pub fn significant_digits(self) -> usize {
        match self {
            Precision::Standard => 17,
            Precision::Extended => 32,
        }
    }

    pub fn epsilon(self) -> f64 {
        match self {
            Precision::Standard => f64::EPSILON,
            Precision::Extended => <DoubleDouble as Real>::EPSILON,
        }
    }
}

impl FromStr for Precision {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "std" | "standard" | "double" | "f64" => Ok(Precision::Standard),
            "ext" | "extended" | "dd" | "double-double" => Ok(Precision::Extended),
            other => Err(format!("unknown precision '{other}' (expected std or ext)")),
        }
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Precision::Standard => "std",
            Precision::Extended => "ext",
        })
    }
}

/// Field operations plus the handful of elementary functions the formulas need.
pub trait Real:
    Copy
    + Debug
    + Default
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    const PRECISION: Precision;
    /// Unit roundoff scale used for series cut-offs.
    const EPSILON: f64;
    /// Largest asymptotic order offered in this mode.
    const MAX_EXPANSION_ORDER: usize;

    fn from_f64(x: f64) -> Self;
    fn from_dd(x: DoubleDouble) -> Self;
    fn to_f64(self) -> f64;
    fn to_dd(self) -> DoubleDouble;

    fn ln(self) -> Self;
    fn exp(self) -> Self;
    fn sqrt(self) -> Self;
    fn powi(self, n: i32) -> Self;

    fn pi() -> Self;
    fn ln_2() -> Self;
    fn euler_gamma() -> Self;

    /// Scientific notation with the mode's round-trip digit count.
    fn to_sci_string(self) -> String;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }

    fn from_i64(n: i64) -> Self {
        Self::from_dd(DoubleDouble::from_i64(n))
    }

    fn from_usize(n: usize) -> Self {
        Self::from_i64(n as i64)
    }

    fn from_ratio(r: &BigRational) -> Self {
        Self::from_dd(DoubleDouble::from_ratio(r))
    }

    fn abs(self) -> Self {
        if self < Self::zero() {
            -self
        } else {
            self
        }
    }

    fn ln_pi() -> Self {
        Self::pi().ln()
    }

    fn ln_2pi() -> Self {
        (Self::pi() + Self::pi()).ln()
    }

    fn is_finite(self) -> bool {
        self.to_f64().is_finite()
    }
}

impl Real for f64 {
    const PRECISION: Precision = Precision::Standard;
    const EPSILON: f64 = f64::EPSILON;
    const MAX_EXPANSION_ORDER: usize = 10;

    fn from_f64(x: f64) -> Self {
        x
    }
    fn from_dd(x: DoubleDouble) -> Self {
        x.to_f64()
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn to_dd(self) -> DoubleDouble {
        DoubleDouble::from_f64(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn ln_2() -> Self {
        std::f64::consts::LN_2
    }
    fn euler_gamma() -> Self {
        0.577_215_664_901_532_9
    }
    fn to_sci_string(self) -> String {
        format!("{:.16e}", self)
    }
    fn abs(self) -> Self {
        f64::abs(self)
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Real for DoubleDouble {
    const PRECISION: Precision = Precision::Extended;
    // 2^-104
    const EPSILON: f64 = 4.930_380_657_631_324e-32;
    const MAX_EXPANSION_ORDER: usize = 16;

    fn from_f64(x: f64) -> Self {
        DoubleDouble::from_f64(x)
    }
    fn from_dd(x: DoubleDouble) -> Self {
        x
    }
    fn to_f64(self) -> f64 {
        DoubleDouble::to_f64(self)
    }
    fn to_dd(self) -> DoubleDouble {
        self
    }
    fn ln(self) -> Self {
        DoubleDouble::ln(self)
    }
    fn exp(self) -> Self {
        DoubleDouble::exp(self)
    }
    fn sqrt(self) -> Self {
        DoubleDouble::sqrt(self)
    }
    fn powi(self, n: i32) -> Self {
        DoubleDouble::powi(self, n)
    }
    fn pi() -> Self {
        DoubleDouble::PI
    }
    fn ln_2() -> Self {
        DoubleDouble::LN_2
    }
    fn euler_gamma() -> Self {
        DoubleDouble::EULER_GAMMA
    }
    fn to_sci_string(self) -> String {
        DoubleDouble::to_sci_string(self, 32)
    }
    fn abs(self) -> Self {
        DoubleDouble::abs(self)
    }
}
