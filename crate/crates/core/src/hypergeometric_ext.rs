//! Extended confluent (`Phi`) and Gauss (`F`) hypergeometric families.
//!
//! Every member has the series form
//!
//! ```text
//! sum_n (a)_n c_n z^n / n!,    c_n = B_w(b + n, c - b) / B(b, c - b)
//! ```
//!
//! where `B_w` is one of the extended betas (the `(a)_n` factor is absent
//! for the confluent family), and the integral form
//!
//! ```text
//! 1 / B(b, c - b) int_0^1 t^{b-1} (1-t)^{c-b-1} w(t) g(z t) dt
//! ```
//!
//! with `g(x) = e^x` or `(1 - x)^{-a}`.
//!
//! The coefficients are positive and non-increasing in `n` (the integrand
//! of `c_{n+1}` is pointwise below that of `c_n`), which gives a rigorous
//! geometric tail bound for the series.

use std::sync::RwLock;

use crate::beta_ext::BetaKernel;
use crate::error::{domain, Result};
use crate::kernels::hypergeometric::MAX_TERMS;
use crate::kernels::{beta, ln_beta, CompensatedSum, EvalResult};
use crate::quadrature::QuadratureSpec;
use crate::real::{rel_dev, Real};

const CANCELLATION_WARN: f64 = 1e6;

/// Consecutive negligible terms required before the series may stop.
const QUIET_TERMS: usize = 5;

fn check_bc<T: Real>(b: T, c: T) -> Result<()> {
    if !(b > T::zero() && c > b && c.is_finite()) {
        return domain(format!("need c > b > 0, got b = {b}, c = {c}"));
    }
    Ok(())
}

/// A member of the extended families at fixed `(a, b, c)` and kernel, with
/// a memo table of series coefficients shared across `z` evaluations.
///
/// The memo table sits behind a lock: concurrent readers see either a
/// finished coefficient or wait for the single writer extending the table.
#[derive(Debug)]
pub struct ExtendedSeries<T> {
    kernel: BetaKernel<T>,
    a: Option<T>,
    b: T,
    c: T,
    norm: T,
    ln_norm: T,
    spec: QuadratureSpec<T>,
    coefficients: RwLock<Vec<EvalResult<T>>>,
}

impl<T: Real> ExtendedSeries<T> {
    /// Confluent member `Phi_w(b; c; .)`.
    pub fn confluent(kernel: BetaKernel<T>, b: T, c: T, spec: QuadratureSpec<T>) -> Result<Self> {
        Self::new(kernel, None, b, c, spec)
    }

    /// Gauss member `F_w(a, b; c; .)`.
    pub fn gauss(kernel: BetaKernel<T>, a: T, b: T, c: T, spec: QuadratureSpec<T>) -> Result<Self> {
        if !a.is_finite() {
            return domain(format!("a must be finite, got {a}"));
        }
        Self::new(kernel, Some(a), b, c, spec)
    }

    fn new(kernel: BetaKernel<T>, a: Option<T>, b: T, c: T, spec: QuadratureSpec<T>) -> Result<Self> {
        check_bc(b, c)?;
        spec.validate()?;
        Ok(Self {
            kernel,
            a,
            b,
            c,
            norm: beta(b, c - b)?,
            ln_norm: ln_beta(b, c - b)?,
            spec,
            coefficients: RwLock::new(Vec::new()),
        })
    }

    pub fn kernel(&self) -> &BetaKernel<T> {
        &self.kernel
    }

    pub fn params(&self) -> (Option<T>, T, T) {
        (self.a, self.b, self.c)
    }

    /// Same kernel and `a`, parameters shifted to `(b + n, c + n)`.
    pub fn shifted(&self, n: usize) -> Result<Self> {
        let s = T::from_usize_lossy(n);
        Self::new(self.kernel, self.a, self.b + s, self.c + s, self.spec)
    }

    fn compute_coefficient(&self, n: usize) -> Result<EvalResult<T>> {
        let bn = self.b + T::from_usize_lossy(n);
        let cb = self.c - self.b;
        if self.kernel.is_classical() {
            return Ok(EvalResult::exact((ln_beta(bn, cb)? - self.ln_norm).exp()));
        }
        let r = self.kernel.beta(bn, cb, &self.spec)?;
        Ok(EvalResult {
            value: r.value / self.norm,
            abs_error_estimate: r.abs_error_estimate / self.norm + T::epsilon() * (r.value / self.norm).abs(),
            converged: r.converged,
            work: r.work,
        })
    }

    /// The normalized coefficient `c_n`, memoized.
    pub fn coefficient(&self, n: usize) -> Result<EvalResult<T>> {
        {
            let table = self.coefficients.read().unwrap_or_else(|e| e.into_inner());
            if let Some(c) = table.get(n) {
                return Ok(*c);
            }
        }
        let mut table = self.coefficients.write().unwrap_or_else(|e| e.into_inner());
        while table.len() <= n {
            let k = table.len();
            table.push(self.compute_coefficient(k)?);
        }
        Ok(table[n])
    }

    /// Number of coefficients computed so far.
    pub fn cached(&self) -> usize {
        self.coefficients.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    /// Evaluates the series at `z` (`|z| < 1` for the Gauss family).
    pub fn eval(&self, z: T) -> Result<EvalResult<T>> {
        if !z.is_finite() {
            return domain(format!("z must be finite, got {z}"));
        }
        if self.a.is_some() && !(z.abs() < T::one()) {
            return domain(format!("the F-family series needs |z| < 1, got z = {z}"));
        }
        let c0 = self.coefficient(0)?;
        if z == T::zero() || self.a == Some(T::zero()) {
            return Ok(c0);
        }
        let za = z.abs();
        // Beyond n0 the weight ratio |(a + n) z / (n + 1)| is bounded by q_n below.
        let n0 = match self.a {
            Some(a) => a.abs().ceil().to_usize().unwrap_or(0) + 1,
            None => 0,
        };
        let tol = T::epsilon();
        let mut sum = CompensatedSum::new();
        let mut coef_err = T::zero();
        let mut coef_ok = true;
        let mut work = 0usize;
        let mut weight = T::one();
        let mut quiet = 0usize;
        let mut tail = T::zero();
        let mut done = false;
        let mut n = 0usize;
        while n < MAX_TERMS {
            let cn = self.coefficient(n)?;
            let term = weight * cn.value;
            sum.add(term);
            coef_err = coef_err + weight.abs() * cn.abs_error_estimate;
            coef_ok &= cn.converged;
            work += cn.work.max(1);
            if weight == T::zero() || cn.value == T::zero() {
                tail = T::zero();
                done = true;
                break;
            }
            let target = tol * sum.value().abs();
            quiet = if term.abs() <= target { quiet + 1 } else { 0 };
            if n >= n0 {
                let nf = T::from_usize_lossy(n);
                let q = match self.a {
                    Some(a) => za * ((a + nf) / (nf + T::one())).max(T::one()),
                    None => za / (nf + T::one()),
                };
                if q < T::one() {
                    tail = term.abs() * q / (T::one() - q);
                    if tail <= target && quiet >= QUIET_TERMS {
                        done = true;
                        break;
                    }
                }
            }
            let nf = T::from_usize_lossy(n);
            let step = z / (nf + T::one());
            weight = match self.a {
                Some(a) => weight * (a + nf) * step,
                None => weight * step,
            };
            n += 1;
            if !weight.is_finite() {
                break;
            }
        }
        if sum.condition() > T::lit(CANCELLATION_WARN) {
            log::warn!(
                "extended hypergeometric series at z = {z} lost ~{:.1} digits to cancellation",
                sum.condition().log10().to_f64_lossy()
            );
        }
        let value = sum.value();
        Ok(EvalResult {
            value,
            abs_error_estimate: tail + coef_err + T::lit(4.0) * T::epsilon() * sum.abs_sum(),
            converged: done && coef_ok && value.is_finite(),
            work,
        })
    }
}

/// `1 / B(b, c - b) int_0^1 t^{b-1} (1-t)^{c-b-1} w(t) e^{z t} dt`.
pub fn confluent_integral<T: Real>(
    kernel: &BetaKernel<T>,
    b: T,
    c: T,
    z: T,
    spec: &QuadratureSpec<T>,
) -> Result<EvalResult<T>> {
    check_bc(b, c)?;
    if !z.is_finite() {
        return domain(format!("z must be finite, got {z}"));
    }
    let r = kernel.integrate(b, c - b, |t, _| z * t, spec)?;
    Ok(r.scale(T::one() / beta(b, c - b)?))
}

/// `1 / B(b, c - b) int_0^1 t^{b-1} (1-t)^{c-b-1} w(t) (1 - z t)^{-a} dt`, `z < 1`.
pub fn gauss_integral<T: Real>(
    kernel: &BetaKernel<T>,
    a: T,
    b: T,
    c: T,
    z: T,
    spec: &QuadratureSpec<T>,
) -> Result<EvalResult<T>> {
    check_bc(b, c)?;
    if !(z < T::one()) {
        return domain(format!("the F-family integral needs z < 1, got z = {z}"));
    }
    let zc = T::one() - z;
    let r = kernel.integrate(
        b,
        c - b,
        |t, tc| {
            // 1 - z t = (1 - z) + z (1 - t) keeps full accuracy as z -> 1.
            let base = if z > T::zero() { zc + z * tc } else { T::one() - z * t };
            -a * base.ln()
        },
        spec,
    )?;
    Ok(r.scale(T::one() / beta(b, c - b)?))
}

/// `Phi_p(b; c; z)` by series.
pub fn phi_p<T: Real>(b: T, c: T, p: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    ExtendedSeries::confluent(BetaKernel::p(p)?, b, c, *spec)?.eval(z)
}

/// `Phi_p(b; c; z)` by its integral representation.
pub fn phi_p_integral<T: Real>(b: T, c: T, p: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    confluent_integral(&BetaKernel::p(p)?, b, c, z, spec)
}

/// `Phi_{p,q}(b; c; z)` by series.
pub fn phi_pq<T: Real>(b: T, c: T, p: T, q: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    ExtendedSeries::confluent(BetaKernel::pq(p, q)?, b, c, *spec)?.eval(z)
}

/// `Phi_{p,q}(b; c; z)` by its integral representation.
pub fn phi_pq_integral<T: Real>(b: T, c: T, p: T, q: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    confluent_integral(&BetaKernel::pq(p, q)?, b, c, z, spec)
}

/// `Phi_{p,v}(b; c; z)` by series. `p = v = 0` falls back to Kummer's function.
pub fn phi_pv_series<T: Real>(b: T, c: T, p: T, v: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    ExtendedSeries::confluent(BetaKernel::pv_or_classical(p, v)?, b, c, *spec)?.eval(z)
}

/// `Phi_{p,v}(b; c; z)` by its Bessel-kernel integral; needs `p > 0`.
pub fn phi_pv_integral<T: Real>(b: T, c: T, p: T, v: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    confluent_integral(&BetaKernel::pv(p, v)?, b, c, z, spec)
}

/// `F_p(a, b; c; z)` by series, `|z| < 1`.
pub fn f_p<T: Real>(a: T, b: T, c: T, p: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    ExtendedSeries::gauss(BetaKernel::p(p)?, a, b, c, *spec)?.eval(z)
}

/// `F_p(a, b; c; z)` by its integral representation, `z < 1`.
pub fn f_p_integral<T: Real>(a: T, b: T, c: T, p: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    gauss_integral(&BetaKernel::p(p)?, a, b, c, z, spec)
}

/// `F_{p,q}(a, b; c; z)` by series, `|z| < 1`.
pub fn f_pq<T: Real>(a: T, b: T, c: T, p: T, q: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    ExtendedSeries::gauss(BetaKernel::pq(p, q)?, a, b, c, *spec)?.eval(z)
}

/// `F_{p,q}(a, b; c; z)` by its integral representation, `z < 1`.
#[allow(clippy::too_many_arguments)]
pub fn f_pq_integral<T: Real>(a: T, b: T, c: T, p: T, q: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    gauss_integral(&BetaKernel::pq(p, q)?, a, b, c, z, spec)
}

/// `F_{p,v}(a, b; c; z)` by series, `|z| < 1`.
#[allow(clippy::too_many_arguments)]
pub fn f_pv_series<T: Real>(a: T, b: T, c: T, p: T, v: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    ExtendedSeries::gauss(BetaKernel::pv_or_classical(p, v)?, a, b, c, *spec)?.eval(z)
}

/// `F_{p,v}(a, b; c; z)` by its Bessel-kernel integral, `p > 0`, `z < 1`.
///
/// Also defined for `z <= -1`, where the series diverges.
#[allow(clippy::too_many_arguments)]
pub fn f_pv_integral<T: Real>(a: T, b: T, c: T, p: T, v: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    gauss_integral(&BetaKernel::pv(p, v)?, a, b, c, z, spec)
}

/// Relative deviation `|Phi(b; c; z) - e^z Phi(c - b; c; -z)| / |Phi(b; c; z)|`
/// of the Kummer-type transformation for `Phi_{p,v}`.
pub fn phi_pv_transform_check<T: Real>(b: T, c: T, p: T, v: T, z: T, spec: &QuadratureSpec<T>) -> Result<T> {
    let kernel = BetaKernel::pv_or_classical(p, v)?;
    check_bc(b, c)?;
    if z == T::zero() {
        // Both sides are B_v(b, c-b)/B(b, c-b); the kernel is symmetric under t -> 1-t.
        return Ok(T::zero());
    }
    let lhs = ExtendedSeries::confluent(kernel, b, c, *spec)?.eval(z)?.value;
    let rhs = z.exp() * ExtendedSeries::confluent(kernel, c - b, c, *spec)?.eval(-z)?.value;
    Ok(rel_dev(lhs, rhs))
}

/// `d^n/dz^n Phi_{p,v}(b; c; z) = (b)_n / (c)_n Phi_{p,v}(b + n; c + n; z)`.
pub fn phi_pv_derivative<T: Real>(
    b: T,
    c: T,
    p: T,
    v: T,
    z: T,
    n: usize,
    spec: &QuadratureSpec<T>,
) -> Result<EvalResult<T>> {
    let series = ExtendedSeries::confluent(BetaKernel::pv_or_classical(p, v)?, b, c, *spec)?;
    derivative_of(&series, z, n)
}

/// `n`-th `z`-derivative of a confluent series via the shift rule.
pub fn derivative_of<T: Real>(series: &ExtendedSeries<T>, z: T, n: usize) -> Result<EvalResult<T>> {
    if series.a.is_some() {
        return domain("derivative_of expects a confluent series");
    }
    if n == 0 {
        return series.eval(z);
    }
    let factor = (0..n).fold(T::one(), |acc, k| {
        let k = T::from_usize_lossy(k);
        acc * (series.b + k) / (series.c + k)
    });
    Ok(series.shifted(n)?.eval(z)?.scale(factor))
}
