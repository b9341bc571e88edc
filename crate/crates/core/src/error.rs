use thiserror::Error;

/// Failures shared by the kernels, the quadrature engine and the extended
/// functions built on them.
///
/// Non-convergence of a series or quadrature is *not* an error: it is
/// reported through the `converged` flag of the result so callers can still
/// inspect the partial value. Only outright invalid input or a broken
/// integrand surfaces here.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the domain of the requested function.
    #[error("{0}")]
    Domain(String),

    /// Argument sits on a pole (gamma at a non-positive integer, a
    /// hypergeometric denominator parameter in {0, -1, -2, ...}).
    #[error("pole at {0}")]
    Pole(f64),

    /// The result is larger than the scalar type can represent.
    #[error("result overflows the representable range: {0}")]
    Overflow(String),

    /// An integrand returned NaN or an infinity at an interior node.
    #[error("integrand is not finite at x = {at:e} (value {value})")]
    NonFinite { at: f64, value: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Shorthand for building a [`Error::Domain`] failure.
pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
