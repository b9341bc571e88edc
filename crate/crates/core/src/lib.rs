//! Extended Whittaker functions and the special functions underneath them.
//!
//! The tower, bottom up:
//!
//! - [`kernels`]: gamma, beta, `K_nu`, Kummer's `Phi`, Gauss' `2F1`;
//! - [`quadrature`]: double-exponential rules on `(0, 1)`, `(a, b)`, `(0, inf)`;
//! - [`beta_ext`]: `B_p`, `B_{p,q}` and the Bessel-kernel `B_v`;
//! - [`hypergeometric_ext`]: the `Phi` and `F` families built on them;
//! - [`whittaker`]: `M_{p,v,lambda,rho}`, its integral representations,
//!   Mellin and Laplace-type transforms and the derivative rule.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the `*F64` and
//! `*F32` aliases below name the concrete instantiations.
//!
//! ```
//! use whittaker_ext::{m_pv, QuadratureSpecF64, WhittakerParamsF64};
//!
//! let params = WhittakerParamsF64::new(0.8, 1.0, 0.25, 1.1).unwrap();
//! let m = m_pv(&params, 2.0, &QuadratureSpecF64::default()).unwrap();
//! assert!(m.converged);
//! assert!((m.value - 0.079195851403545832).abs() < 1e-11);
//! ```

// `!(x > 0)` is deliberate throughout: NaN must fail every precondition.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod beta_ext;
pub mod error;
pub mod hypergeometric_ext;
pub mod kernels;
pub mod quadrature;
pub mod real;
pub mod whittaker;

pub use beta_ext::{beta_p, beta_pq, beta_v, BetaKernel};
pub use error::{Error, Result};
pub use hypergeometric_ext::{
    f_p, f_p_integral, f_pq, f_pq_integral, f_pv_integral, f_pv_series, phi_p, phi_p_integral, phi_pq, phi_pq_integral,
    phi_pv_derivative, phi_pv_integral, phi_pv_series, phi_pv_transform_check, ExtendedSeries,
};
pub use kernels::{bessel_k, beta, gamma, gauss_2f1, kummer_phi, ln_beta, log_gamma, pochhammer, EvalResult};
pub use quadrature::{QuadResult, QuadratureSpec};
pub use real::Real;
pub use whittaker::{
    bessel_moment, laplace_closed_form, laplace_corollary_2f1, laplace_numeric, m_classical, m_p, m_pq, m_pv, m_pv_alt,
    m_pv_derivative_formula, m_pv_derivative_lhs, m_pv_integral, mellin_closed_form, mellin_corollary_v0,
    mellin_numeric, transform_check, Form, LaplaceQuery, MellinQuery, Representation, WhittakerM, WhittakerParams,
};

pub type EvalResultF64 = EvalResult<f64>;
pub type QuadResultF64 = QuadResult<f64>;
pub type QuadratureSpecF64 = QuadratureSpec<f64>;
pub type BetaKernelF64 = BetaKernel<f64>;
pub type ExtendedSeriesF64 = ExtendedSeries<f64>;
pub type WhittakerParamsF64 = WhittakerParams<f64>;
pub type WhittakerMF64 = WhittakerM<f64>;
pub type MellinQueryF64 = MellinQuery<f64>;
pub type LaplaceQueryF64 = LaplaceQuery<f64>;
pub type RepresentationF64 = Representation<f64>;

pub type EvalResultF32 = EvalResult<f32>;
pub type QuadratureSpecF32 = QuadratureSpec<f32>;
pub type BetaKernelF32 = BetaKernel<f32>;
pub type WhittakerParamsF32 = WhittakerParams<f32>;
