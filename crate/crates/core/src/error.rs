use thiserror::Error;

/// Errors raised by the energy, special-function and solver routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error in {function}: {detail}")]
    Domain { function: &'static str, detail: String },

    /// A requested order exceeds a precomputed table or the expansion length.
    #[error("capacity exceeded in {function}: requested {requested}, available {available}")]
    Capacity {
        function: &'static str,
        requested: usize,
        available: usize,
    },

    /// Coincident points, or a point on the boundary where an endpoint charge sits.
    #[error("infinite energy: {0}")]
    InfiniteEnergy(String),

    /// An iterative method did not converge.
    #[error("{method} did not converge after {iterations} iterations: {detail}")]
    NoConvergence {
        method: &'static str,
        iterations: usize,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        function,
        detail: detail.into(),
    }
}
