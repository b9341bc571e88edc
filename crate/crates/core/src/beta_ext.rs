//! Extended beta functions.
//!
//! All three extensions share the integrand `t^{a-1} (1-t)^{b-1} w(t)` on
//! `(0, 1)` and differ only in the damping factor `w`:
//!
//! | function            | `w(t)`                                                     |
//! |---------------------|------------------------------------------------------------|
//! | `B(a, b)`           | 1                                                          |
//! | `B_p(a, b)`         | `exp(-p / (t (1 - t)))`                                    |
//! | `B_{p,q}(a, b)`     | `exp(-p / t - q / (1 - t))`                                |
//! | `B_v(a, b; p)`      | `sqrt(2p / pi) (t (1 - t))^{-1/2} K_{v+1/2}(p / (t (1 - t)))` |
//!
//! Integrands are assembled in log space so large exponents, tiny `t` and
//! huge Bessel arguments neither overflow nor produce `0 * inf`.

use crate::error::{domain, Result};
use crate::kernels::{beta, BesselK, EvalResult};
use crate::quadrature::{try_integrate_01, QuadratureSpec};
use crate::real::Real;

/// Damping factor of an extended beta integrand.
#[derive(Debug, Clone, Copy)]
pub enum BetaKernel<T> {
    Classical,
    P { p: T },
    PQ { p: T, q: T },
    PV { p: T, v: T, bessel: BesselK<T> },
}

impl<T: Real> BetaKernel<T> {
    /// `B_p`; `p = 0` is the classical beta.
    pub fn p(p: T) -> Result<Self> {
        if !(p >= T::zero()) || !p.is_finite() {
            return domain(format!("p must be >= 0, got {p}"));
        }
        Ok(if p == T::zero() { Self::Classical } else { Self::P { p } })
    }

    /// `B_{p,q}`; `p = q = 0` is the classical beta.
    pub fn pq(p: T, q: T) -> Result<Self> {
        if !(p >= T::zero()) || !p.is_finite() {
            return domain(format!("p must be >= 0, got {p}"));
        }
        if !(q >= T::zero()) || !q.is_finite() {
            return domain(format!("q must be >= 0, got {q}"));
        }
        Ok(if p == T::zero() && q == T::zero() {
            Self::Classical
        } else {
            Self::PQ { p, q }
        })
    }

    /// Bessel-kernel `B_v(.; p)`, defined for `p > 0` only.
    pub fn pv(p: T, v: T) -> Result<Self> {
        if !(p > T::zero()) || !p.is_finite() {
            return domain(format!("p must be > 0, got {p}"));
        }
        if !(v >= T::zero()) || !v.is_finite() {
            return domain(format!("v must be >= 0, got {v}"));
        }
        Ok(Self::PV {
            p,
            v,
            bessel: BesselK::new(v + T::half())?,
        })
    }

    /// `B_v` with the reduction chain applied at the origin: `p = v = 0`
    /// is the classical beta. `p = 0` with `v > 0` is rejected.
    pub fn pv_or_classical(p: T, v: T) -> Result<Self> {
        if p == T::zero() && v == T::zero() {
            return Ok(Self::Classical);
        }
        if p == T::zero() {
            return domain(format!("p must be > 0 when v > 0 (v = {v})"));
        }
        Self::pv(p, v)
    }

    pub fn is_classical(&self) -> bool {
        matches!(self, Self::Classical)
    }

    /// `ln w(t)` given `t` and `1 - t`.
    #[inline]
    pub fn ln_weight(&self, t: T, tc: T) -> T {
        match *self {
            Self::Classical => T::zero(),
            Self::P { p } => -p / (t * tc),
            Self::PQ { p, q } => -p / t - q / tc,
            Self::PV { p, bessel, .. } => {
                let s = t * tc;
                T::half() * (T::two() * p / T::PI()).ln() - T::half() * s.ln() + bessel.ln(p / s)
            }
        }
    }

    fn check_exponents(&self, a: T, b: T) -> Result<()> {
        if self.is_classical() && !(a > T::zero() && b > T::zero()) {
            return domain(format!(
                "the unextended beta integral needs a > 0 and b > 0, got a = {a}, b = {b}"
            ));
        }
        if !(a.is_finite() && b.is_finite()) {
            return domain("beta exponents must be finite");
        }
        Ok(())
    }

    /// `int_0^1 t^{a-1} (1-t)^{b-1} w(t) exp(ln_extra(t, 1-t)) dt` by
    /// quadrature, for any kernel (the classical one included).
    pub fn integrate<F>(&self, a: T, b: T, ln_extra: F, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>>
    where
        F: Fn(T, T) -> T,
    {
        self.check_exponents(a, b)?;
        let (am1, bm1) = (a - T::one(), b - T::one());
        let q = try_integrate_01(
            |t, tc| Ok((am1 * t.ln() + bm1 * tc.ln() + self.ln_weight(t, tc) + ln_extra(t, tc)).exp()),
            spec,
        )?;
        Ok(q.into())
    }

    /// The extended beta value itself; exact (log-gamma) for the classical kernel.
    pub fn beta(&self, a: T, b: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
        self.check_exponents(a, b)?;
        match self {
            Self::Classical => beta(a, b).map(EvalResult::exact),
            _ => self.integrate(a, b, |_, _| T::zero(), spec),
        }
    }
}

/// `B_p(a, b) = int_0^1 t^{a-1} (1-t)^{b-1} exp(-p / (t (1-t))) dt`.
///
/// `p = 0` returns the classical beta exactly. For `p > 0` any real `a`,
/// `b` are accepted since the damping factor suppresses both endpoints.
pub fn beta_p<T: Real>(a: T, b: T, p: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    BetaKernel::p(p)?.beta(a, b, spec)
}

/// `B_{p,q}(a, b) = int_0^1 t^{a-1} (1-t)^{b-1} exp(-p/t - q/(1-t)) dt`.
pub fn beta_pq<T: Real>(a: T, b: T, p: T, q: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    BetaKernel::pq(p, q)?.beta(a, b, spec)
}

/// Bessel-kernel extended beta
/// `B_v(a, b; p) = sqrt(2p/pi) int_0^1 t^{a-3/2} (1-t)^{b-3/2} K_{v+1/2}(p / (t (1-t))) dt`,
/// for `p > 0`, `v >= 0`.
pub fn beta_v<T: Real>(a: T, b: T, p: T, v: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    BetaKernel::pv(p, v)?.beta(a, b, spec)
}
