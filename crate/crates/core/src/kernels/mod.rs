//! Classical scalar kernels: gamma, beta, Pochhammer, `K_nu`, Kummer's
//! `Phi` and Gauss' `2F1`.

pub mod bessel;
pub mod gamma;
pub mod hypergeometric;
pub mod summation;

pub use bessel::{bessel_k, BesselK};
pub use gamma::{beta, gamma, ln_beta, log_gamma, pochhammer};
pub use hypergeometric::{gauss_2f1, kummer_phi};
pub use summation::CompensatedSum;

use crate::real::Real;

/// A computed value together with what it cost and how far it can be trusted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub value: T,
    /// Absolute error estimate, always `>= 0`.
    pub abs_error_estimate: T,
    pub converged: bool,
    /// Series terms summed or quadrature nodes evaluated.
    pub work: usize,
}

impl<T: Real> EvalResult<T> {
    pub fn exact(value: T) -> Self {
        Self {
            value,
            abs_error_estimate: T::zero(),
            converged: value.is_finite(),
            work: 0,
        }
    }

    /// Multiplies by an exactly known factor.
    pub fn scale(self, factor: T) -> Self {
        Self {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            converged: self.converged && (self.value * factor).is_finite(),
            work: self.work,
        }
    }

    pub fn rel_error_estimate(&self) -> T {
        if self.value == T::zero() {
            self.abs_error_estimate
        } else {
            self.abs_error_estimate / self.value.abs()
        }
    }
}
