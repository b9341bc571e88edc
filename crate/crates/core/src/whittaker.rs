//! Whittaker's `M_{lambda,rho}` and its extensions
//!
//! ```text
//! M_{p,v,lambda,rho}(z) = z^{rho+1/2} e^{-z/2} Phi_{p,v}(rho - lambda + 1/2; 2 rho + 1; z)
//! ```
//!
//! with the `B_p` and `B_{p,q}` siblings, their integral representations,
//! the Mellin transform in `p`, a Laplace-type integral and the derivative
//! rule.

use crate::beta_ext::BetaKernel;
use crate::error::{domain, Result};
use crate::hypergeometric_ext::{derivative_of, ExtendedSeries};
use crate::kernels::{gauss_2f1, kummer_phi, ln_beta, log_gamma, BesselK, EvalResult};
use crate::quadrature::{try_integrate_01, try_integrate_finite, try_integrate_semi_inf, QuadratureSpec};
use crate::real::{rel_dev, Real};

/// Which version of a closed form or representation to evaluate.
///
/// `AsPrinted` reproduces a formula exactly as it was originally published,
/// including its misprints, so the discrepancy stays measurable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Form {
    #[default]
    Corrected,
    AsPrinted,
}

/// Parameters `(p, v, lambda, rho)` of `M_{p,v,lambda,rho}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerParams<T> {
    p: T,
    v: T,
    lambda: T,
    rho: T,
}

impl<T: Real> WhittakerParams<T> {
    /// Requires `p, v >= 0`, `rho > -1/2` and `rho +- lambda > -1/2`.
    pub fn new(p: T, v: T, lambda: T, rho: T) -> Result<Self> {
        let h = -T::half();
        if !(p >= T::zero() && p.is_finite()) {
            return domain(format!("p must be >= 0, got {p}"));
        }
        if !(v >= T::zero() && v.is_finite()) {
            return domain(format!("v must be >= 0, got {v}"));
        }
        if !(lambda.is_finite() && rho.is_finite()) {
            return domain("lambda and rho must be finite");
        }
        if !(rho > h && rho + lambda > h && rho - lambda > h) {
            return domain(format!(
                "need rho > -1/2 and rho +- lambda > -1/2, got lambda = {lambda}, rho = {rho}"
            ));
        }
        Ok(Self { p, v, lambda, rho })
    }

    /// Classical parameters (`p = v = 0`).
    pub fn classical(lambda: T, rho: T) -> Result<Self> {
        Self::new(T::zero(), T::zero(), lambda, rho)
    }

    pub fn p(&self) -> T {
        self.p
    }
    pub fn v(&self) -> T {
        self.v
    }
    pub fn lambda(&self) -> T {
        self.lambda
    }
    pub fn rho(&self) -> T {
        self.rho
    }

    pub fn with_p(&self, p: T) -> Result<Self> {
        Self::new(p, self.v, self.lambda, self.rho)
    }

    /// `(lambda - n/2, rho + n/2)`, the parameters on the right of the derivative rule.
    pub fn shifted(&self, n: usize) -> Result<Self> {
        let h = T::from_usize_lossy(n) * T::half();
        Self::new(self.p, self.v, self.lambda - h, self.rho + h)
    }

    /// Numerator parameter `rho - lambda + 1/2` of the defining series.
    pub fn b(&self) -> T {
        self.rho - self.lambda + T::half()
    }

    /// `rho + lambda + 1/2`, numerator of the alternative form.
    pub fn b_alt(&self) -> T {
        self.rho + self.lambda + T::half()
    }

    /// Denominator parameter `2 rho + 1`.
    pub fn c(&self) -> T {
        T::two() * self.rho + T::one()
    }

    /// Bessel kernel; `p = v = 0` gives the classical function.
    pub fn kernel(&self) -> Result<BetaKernel<T>> {
        BetaKernel::pv_or_classical(self.p, self.v)
    }

    /// `ln B(rho - lambda + 1/2, rho + lambda + 1/2)`.
    fn ln_norm(&self) -> Result<T> {
        ln_beta(self.b(), self.b_alt())
    }
}

fn check_z<T: Real>(z: T) -> Result<()> {
    if !(z > T::zero() && z.is_finite()) {
        return domain(format!("z must be > 0, got {z}"));
    }
    Ok(())
}

/// `z^{rho+1/2} e^{sign z/2}` evaluated as one exponential.
fn prefactor<T: Real>(rho: T, z: T, sign: T) -> T {
    ((rho + T::half()) * z.ln() + sign * z * T::half()).exp()
}

/// A Whittaker-type function at fixed parameters. The underlying series
/// memoizes its coefficients, so repeated evaluation at many `z` is cheap.
#[derive(Debug)]
pub struct WhittakerM<T> {
    rho: T,
    series: ExtendedSeries<T>,
}

impl<T: Real> WhittakerM<T> {
    /// `z^{rho+1/2} e^{-z/2} Phi_w(rho - lambda + 1/2; 2 rho + 1; z)` for the given kernel.
    pub fn with_kernel(kernel: BetaKernel<T>, lambda: T, rho: T, spec: &QuadratureSpec<T>) -> Result<Self> {
        let params = WhittakerParams::classical(lambda, rho)?;
        Ok(Self {
            rho,
            series: ExtendedSeries::confluent(kernel, params.b(), params.c(), *spec)?,
        })
    }

    /// The `(p, v)` function.
    pub fn new(params: &WhittakerParams<T>, spec: &QuadratureSpec<T>) -> Result<Self> {
        Self::with_kernel(params.kernel()?, params.lambda, params.rho, spec)
    }

    pub fn eval(&self, z: T) -> Result<EvalResult<T>> {
        check_z(z)?;
        Ok(self.series.eval(z)?.scale(prefactor(self.rho, z, -T::one())))
    }

    /// The hypergeometric factor `Phi_w(rho - lambda + 1/2; 2 rho + 1; z)` alone.
    pub fn phi(&self, z: T) -> Result<EvalResult<T>> {
        self.series.eval(z)
    }

    pub fn series(&self) -> &ExtendedSeries<T> {
        &self.series
    }
}

/// Classical Whittaker function `M_{lambda,rho}(z) = z^{rho+1/2} e^{-z/2} Phi(rho - lambda + 1/2; 2 rho + 1; z)`.
pub fn m_classical<T: Real>(lambda: T, rho: T, z: T) -> Result<EvalResult<T>> {
    let params = WhittakerParams::classical(lambda, rho)?;
    check_z(z)?;
    Ok(kummer_phi(params.b(), params.c(), z)?.scale(prefactor(rho, z, -T::one())))
}

/// `M_{p,lambda,rho}`, built on `Phi_p`.
pub fn m_p<T: Real>(p: T, lambda: T, rho: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    WhittakerM::with_kernel(BetaKernel::p(p)?, lambda, rho, spec)?.eval(z)
}

/// `M_{p,q,lambda,rho}`, built on `Phi_{p,q}`.
pub fn m_pq<T: Real>(p: T, q: T, lambda: T, rho: T, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    WhittakerM::with_kernel(BetaKernel::pq(p, q)?, lambda, rho, spec)?.eval(z)
}

/// `M_{p,v,lambda,rho}(z)` by its defining series.
pub fn m_pv<T: Real>(params: &WhittakerParams<T>, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    WhittakerM::new(params, spec)?.eval(z)
}

/// The alternative form `z^{rho+1/2} e^{z/2} Phi_{p,v}(rho + lambda + 1/2; 2 rho + 1; -z)`.
pub fn m_pv_alt<T: Real>(params: &WhittakerParams<T>, z: T, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    check_z(z)?;
    let series = ExtendedSeries::confluent(params.kernel()?, params.b_alt(), params.c(), *spec)?;
    Ok(series.eval(-z)?.scale(prefactor(params.rho, z, T::one())))
}

/// Relative deviation between `e^{-z/2} Phi_{p,v}(rho - lambda + 1/2; 2 rho + 1; z)`
/// and `e^{z/2} Phi_{p,v}(rho + lambda + 1/2; 2 rho + 1; -z)`: the real form of
/// the reflection `M_{p,v,lambda,rho}(-z) = (-1)^{rho+1/2} M_{p,v,-lambda,rho}(z)`.
pub fn transform_check<T: Real>(params: &WhittakerParams<T>, z: T, spec: &QuadratureSpec<T>) -> Result<T> {
    check_z(z)?;
    let kernel = params.kernel()?;
    let lhs = ExtendedSeries::confluent(kernel, params.b(), params.c(), *spec)?
        .eval(z)?
        .value;
    let rhs = ExtendedSeries::confluent(kernel, params.b_alt(), params.c(), *spec)?
        .eval(-z)?
        .value;
    Ok(rel_dev(lhs * (-z * T::half()).exp(), rhs * (z * T::half()).exp()))
}

/// The integral representations of `M_{p,v,lambda,rho}` (all need `p > 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Representation<T> {
    /// `t` over `(0, 1)` with `e^{z t}`.
    UnitInterval,
    /// The mirror `u = 1 - t`, with `e^{-z u}`.
    Mirrored,
    /// `u` over `(a, b)` via `t = (u - a) / (b - a)`.
    Interval { a: T, b: T },
    /// `u` over `(0, inf)` via `t = u / (1 + u)`.
    HalfLine,
    /// `u` over `(-1, 1)`, the interval form at `(a, b) = (-1, 1)`.
    Symmetric,
}

impl<T: Real> Representation<T> {
    /// Representation by its number 1 to 5; `(a, b)` is used by number 3 only.
    pub fn from_index(index: u8, a: T, b: T) -> Result<Self> {
        Ok(match index {
            1 => Self::UnitInterval,
            2 => Self::Mirrored,
            3 => Self::Interval { a, b },
            4 => Self::HalfLine,
            5 => Self::Symmetric,
            _ => return domain(format!("representation must be 1..=5, got {index}")),
        })
    }

    pub fn index(&self) -> u8 {
        match self {
            Self::UnitInterval => 1,
            Self::Mirrored => 2,
            Self::Interval { .. } => 3,
            Self::HalfLine => 4,
            Self::Symmetric => 5,
        }
    }
}

/// `M_{p,v,lambda,rho}(z)` from one of its integral representations.
///
/// With `Form::AsPrinted`, representations 3 and 5 use the prefactors
/// `(b - a)^{-2 rho - 1}` and `2^{-2 rho - 1}` (and, for 5, the Bessel
/// argument `2p / ((1 + u)(1 - u))`) as originally published. The change of
/// variables actually yields `(b - a)^{1 - 2 rho}`, `2^{1 - 2 rho}` and
/// `4p / ((1 + u)(1 - u))`; the other representations have a single form.
pub fn m_pv_integral<T: Real>(
    params: &WhittakerParams<T>,
    z: T,
    rep: Representation<T>,
    form: Form,
    spec: &QuadratureSpec<T>,
) -> Result<EvalResult<T>> {
    check_z(z)?;
    let (p, rho, lambda) = (params.p, params.rho, params.lambda);
    if !(p > T::zero()) {
        return domain(format!("integral representations need p > 0, got {p}"));
    }
    let k = BesselK::new(params.v + T::half())?;
    let (e1, e2) = (rho - lambda - T::one(), rho + lambda - T::one());
    // sqrt(2p/pi) z^{rho+1/2} / B(rho - lambda + 1/2, rho + lambda + 1/2), in logs.
    let ln_pre = T::half() * (T::two() * p / T::PI()).ln() + (rho + T::half()) * z.ln() - params.ln_norm()?;
    let half_z = z * T::half();
    let q = match rep {
        Representation::UnitInterval => try_integrate_01(
            |t, tc| Ok((ln_pre + e1 * t.ln() + e2 * tc.ln() + z * t - half_z + k.ln(p / (t * tc))).exp()),
            spec,
        )?,
        Representation::Mirrored => try_integrate_01(
            |u, uc| Ok((ln_pre + e2 * u.ln() + e1 * uc.ln() - z * u + half_z + k.ln(p / (u * uc))).exp()),
            spec,
        )?,
        Representation::Interval { a, b } => {
            if !(b > a) {
                return domain(format!("representation 3 needs b > a, got a = {a}, b = {b}"));
            }
            let w = b - a;
            let ln_w = match form {
                Form::Corrected => (T::one() - T::two() * rho) * w.ln(),
                Form::AsPrinted => (-T::two() * rho - T::one()) * w.ln(),
            };
            try_integrate_finite(
                |_, ua, bu| {
                    let arg = p / ((ua / w) * (bu / w));
                    Ok((ln_pre + ln_w + e1 * ua.ln() + e2 * bu.ln() + z * (ua / w) - half_z + k.ln(arg)).exp())
                },
                a,
                b,
                spec,
            )?
        }
        Representation::HalfLine => try_integrate_semi_inf(
            |u| {
                let l1p = u.ln_1p();
                let arg = p * ((T::two() * l1p - u.ln()).exp());
                Ok((ln_pre + e1 * u.ln() - T::two() * rho * l1p + z * (u / (T::one() + u)) - half_z + k.ln(arg)).exp())
            },
            spec,
        )?,
        Representation::Symmetric => match form {
            Form::Corrected => {
                return m_pv_integral(
                    params,
                    z,
                    Representation::Interval {
                        a: -T::one(),
                        b: T::one(),
                    },
                    Form::Corrected,
                    spec,
                )
            }
            Form::AsPrinted => {
                let ln_w = (-T::two() * rho - T::one()) * T::LN_2();
                try_integrate_finite(
                    |u, up, um| {
                        let arg = T::two() * p / (up * um);
                        Ok((ln_pre + ln_w + e1 * up.ln() + e2 * um.ln() + z * u * T::half() + k.ln(arg)).exp())
                    },
                    -T::one(),
                    T::one(),
                    spec,
                )?
            }
        },
    };
    Ok(q.into())
}

/// `int_0^inf u^{r-1/2} K_{v+1/2}(u) du = 2^{r-3/2} Gamma((r-v)/2) Gamma((r+v+1)/2)`,
/// for `r - v > 0`, `r + v > -1`.
pub fn bessel_moment<T: Real>(r: T, v: T) -> Result<T> {
    if !(r - v > T::zero() && r + v > -T::one()) {
        return domain(format!("need r - v > 0 and r + v > -1, got r = {r}, v = {v}"));
    }
    let h = T::half();
    Ok(((r - T::lit(1.5)) * T::LN_2() + log_gamma((r - v) * h)? + log_gamma((r + v + T::one()) * h)?).exp())
}

/// Arguments of the Mellin transform `int_0^inf p^{r-1} M_{p,v,lambda,rho}(z) dp`.
///
/// The `p` stored in `params` is ignored: it is the integration variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MellinQuery<T> {
    params: WhittakerParams<T>,
    r: T,
    z: T,
}

impl<T: Real> MellinQuery<T> {
    /// Requires `r - v > 0`, `r + v > -1`, `rho + r +- lambda > 1/2` and `z > 0`.
    pub fn new(params: WhittakerParams<T>, r: T, z: T) -> Result<Self> {
        let (v, lambda, rho) = (params.v, params.lambda, params.rho);
        if !(r - v > T::zero() && r + v > -T::one()) {
            return domain(format!("need r - v > 0 and r + v > -1, got r = {r}, v = {v}"));
        }
        if !(rho + r + lambda > T::half() && rho + r - lambda > T::half()) {
            return domain(format!(
                "need rho + r +- lambda > 1/2, got rho = {rho}, r = {r}, lambda = {lambda}"
            ));
        }
        check_z(z)?;
        Ok(Self {
            params: params.with_p(T::zero())?,
            r,
            z,
        })
    }

    pub fn params(&self) -> &WhittakerParams<T> {
        &self.params
    }
    pub fn r(&self) -> T {
        self.r
    }
    pub fn z(&self) -> T {
        self.z
    }
}

/// Mellin transform in `p` by nested quadrature: the outer integral over
/// `p` runs on `(0, inf)`, each `M` value comes from the series.
pub fn mellin_numeric<T: Real>(query: &MellinQuery<T>, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    let MellinQuery { params, r, z } = *query;
    let rm1 = r - T::one();
    let q = try_integrate_semi_inf(
        |p| {
            let m = m_pv(&params.with_p(p)?, z, spec)?;
            Ok((rm1 * p.ln()).exp() * m.value)
        },
        spec,
    )?;
    Ok(q.into())
}

/// Mellin transform in `p` in closed form.
///
/// `Form::Corrected`:
/// ```text
/// z^{rho+1/2} e^{-z/2} 2^{r-1} Gamma((r-v)/2) Gamma((r+v+1)/2)
///   B(rho+r-lambda+1/2, rho+r+lambda+1/2) / (sqrt(pi) B(rho-lambda+1/2, rho+lambda+1/2))
///   Phi(rho+r-lambda+1/2; 2rho+2r+1; z)
/// ```
/// which is what exchanging the integrals and applying the Bessel moment
/// formula gives, and which reduces to the `v = 0` form in
/// [`mellin_corollary_v0`]. `Form::AsPrinted` is the published statement with
/// `z^{rho+1/2-r}`, `B(rho+r-+lambda-1/2)` and `Phi(rho+r-lambda-1/2; 2rho+2r; z)`.
pub fn mellin_closed_form<T: Real>(query: &MellinQuery<T>, form: Form) -> Result<EvalResult<T>> {
    let MellinQuery { params, r, z } = *query;
    let (v, lambda, rho) = (params.v, params.lambda, params.rho);
    let h = T::half();
    let (shift, z_pow, c) = match form {
        Form::Corrected => (h, rho + h, T::two() * (rho + r) + T::one()),
        Form::AsPrinted => (-h, rho + h - r, T::two() * (rho + r)),
    };
    let (b1, b2) = (rho + r - lambda + shift, rho + r + lambda + shift);
    if !(b1 > T::zero() && b2 > T::zero()) {
        return domain("beta parameters of the closed form must be positive");
    }
    let ln_const = z_pow * z.ln() - z * h
        + (r - T::one()) * T::LN_2()
        + log_gamma((r - v) * h)?
        + log_gamma((r + v + T::one()) * h)?
        + ln_beta(b1, b2)?
        - h * T::PI().ln()
        - params.ln_norm()?;
    Ok(kummer_phi(b1, c, z)?.scale(ln_const.exp()))
}

/// The `v = 0` Mellin transform
/// `z^{-r} Gamma(r) B(rho+r-lambda+1/2, rho+r+lambda+1/2) / B(rho-lambda+1/2, rho+lambda+1/2) M_{lambda,rho+r}(z)`.
pub fn mellin_corollary_v0<T: Real>(lambda: T, rho: T, r: T, z: T) -> Result<EvalResult<T>> {
    let params = WhittakerParams::classical(lambda, rho)?;
    MellinQuery::new(params, r, z)?;
    let h = T::half();
    let ln_const =
        -r * z.ln() + log_gamma(r)? + ln_beta(rho + r - lambda + h, rho + r + lambda + h)? - params.ln_norm()?;
    Ok(m_classical(lambda, rho + r, z)?.scale(ln_const.exp()))
}

/// Arguments of `int_0^inf x^{delta-1} e^{-alpha x} M_{p,v,lambda,rho}(mu x) dx`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceQuery<T> {
    params: WhittakerParams<T>,
    delta: T,
    alpha: T,
    mu: T,
}

impl<T: Real> LaplaceQuery<T> {
    /// Requires `2 alpha > mu > 0` and `delta + rho > -1/2`.
    pub fn new(params: WhittakerParams<T>, delta: T, alpha: T, mu: T) -> Result<Self> {
        if !(mu > T::zero() && T::two() * alpha > mu && alpha.is_finite()) {
            return domain(format!("need 2 alpha > mu > 0, got alpha = {alpha}, mu = {mu}"));
        }
        if !(delta + params.rho > -T::half() && delta.is_finite()) {
            return domain(format!(
                "need delta + rho > -1/2, got delta = {delta}, rho = {}",
                params.rho
            ));
        }
        Ok(Self {
            params,
            delta,
            alpha,
            mu,
        })
    }

    pub fn params(&self) -> &WhittakerParams<T> {
        &self.params
    }
    pub fn delta(&self) -> T {
        self.delta
    }
    pub fn alpha(&self) -> T {
        self.alpha
    }
    pub fn mu(&self) -> T {
        self.mu
    }

    /// `2 mu / (2 alpha + mu)`, in `(0, 1)` under the preconditions.
    pub fn argument(&self) -> T {
        T::two() * self.mu / (T::two() * self.alpha + self.mu)
    }

    fn s(&self) -> T {
        self.delta + self.params.rho + T::half()
    }

    /// `ln (Gamma(s) mu^{rho+1/2} (alpha + mu/2)^{-s})`, `s = delta + rho + 1/2`.
    fn ln_const(&self) -> Result<T> {
        let s = self.s();
        Ok(log_gamma(s)? + (self.params.rho + T::half()) * self.mu.ln() - s * (self.alpha + self.mu * T::half()).ln())
    }
}

/// `Gamma(s) mu^{rho+1/2} (alpha + mu/2)^{-s} F_{p,v}(s, rho - lambda + 1/2; 2 rho + 1; 2mu/(2alpha+mu))`
/// with `s = delta + rho + 1/2`.
pub fn laplace_closed_form<T: Real>(query: &LaplaceQuery<T>, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    let pr = &query.params;
    let f = ExtendedSeries::gauss(pr.kernel()?, query.s(), pr.b(), pr.c(), *spec)?.eval(query.argument())?;
    Ok(f.scale(query.ln_const()?.exp()))
}

/// The `p = v = 0` case with Gauss' `2F1` in place of `F_{p,v}`.
pub fn laplace_corollary_2f1<T: Real>(lambda: T, rho: T, delta: T, alpha: T, mu: T) -> Result<EvalResult<T>> {
    let query = LaplaceQuery::new(WhittakerParams::classical(lambda, rho)?, delta, alpha, mu)?;
    let pr = &query.params;
    Ok(gauss_2f1(query.s(), pr.b(), pr.c(), query.argument())?.scale(query.ln_const()?.exp()))
}

/// Relative size, against the integral of the envelope, below which the
/// Laplace integrand is treated as zero.
const LAPLACE_CUTOFF: f64 = 1e-20;

/// The Laplace-type integral by direct quadrature over `x`.
///
/// Since the series coefficients satisfy `c_n <= c_0`, `M(mu x) <= c_0 (mu x)^{rho+1/2} e^{mu x/2}`,
/// so the integrand is below `c_0 x^{delta-1} (mu x)^{rho+1/2} e^{-(alpha - mu/2) x}`.
/// Nodes where that envelope is negligible are skipped without evaluating
/// the series, which would otherwise need very many terms at large `x`.
pub fn laplace_numeric<T: Real>(query: &LaplaceQuery<T>, spec: &QuadratureSpec<T>) -> Result<EvalResult<T>> {
    let pr = &query.params;
    let m = WhittakerM::new(pr, spec)?;
    let c0 = m.series().coefficient(0)?.value;
    let (delta, alpha, mu) = (query.delta, query.alpha, query.mu);
    let rate = alpha - mu * T::half();
    let s = query.s();
    let ln_c0 = c0.ln();
    let ln_mass = ln_c0 + (pr.rho + T::half()) * mu.ln() + log_gamma(s)? - s * rate.ln();
    let ln_cut = ln_mass + T::lit(LAPLACE_CUTOFF).ln();
    let q = try_integrate_semi_inf(
        |x| {
            let lx = x.ln();
            let envelope = ln_c0 + (delta - T::one()) * lx + (pr.rho + T::half()) * (mu.ln() + lx) - rate * x;
            if envelope < ln_cut {
                return Ok(T::zero());
            }
            let mx = m.eval(mu * x)?;
            Ok(((delta - T::one()) * lx - alpha * x).exp() * mx.value)
        },
        spec,
    )?;
    Ok(q.into())
}

/// Right side of the derivative rule
/// `d^n/dz^n [e^{z/2} z^{-rho-1/2} M_{p,v,lambda,rho}(z)]
///  = (rho-lambda+1/2)_n / (2rho+1)_n e^{z/2} z^{-rho-n/2-1/2} M_{p,v,lambda-n/2,rho+n/2}(z)`.
pub fn m_pv_derivative_formula<T: Real>(
    params: &WhittakerParams<T>,
    z: T,
    n: usize,
    spec: &QuadratureSpec<T>,
) -> Result<EvalResult<T>> {
    check_z(z)?;
    let shifted = params.shifted(n)?;
    let ratio = (0..n).fold(T::one(), |acc, k| {
        let k = T::from_usize_lossy(k);
        acc * (params.b() + k) / (params.c() + k)
    });
    let m = m_pv(&shifted, z, spec)?;
    Ok(m.scale(ratio * (z * T::half() - (shifted.rho + T::half()) * z.ln()).exp()))
}

/// Left side before differentiation, `e^{z/2} z^{-rho-1/2} M_{p,v,lambda,rho}(z)`.
pub fn m_pv_derivative_lhs<T: Real>(
    params: &WhittakerParams<T>,
    z: T,
    spec: &QuadratureSpec<T>,
) -> Result<EvalResult<T>> {
    let m = m_pv(params, z, spec)?;
    Ok(m.scale((z * T::half() - (params.rho + T::half()) * z.ln()).exp()))
}

/// The same derivative obtained directly from the shift rule for `Phi_{p,v}`.
pub fn m_pv_derivative_phi<T: Real>(
    params: &WhittakerParams<T>,
    z: T,
    n: usize,
    spec: &QuadratureSpec<T>,
) -> Result<EvalResult<T>> {
    check_z(z)?;
    let series = ExtendedSeries::confluent(params.kernel()?, params.b(), params.c(), *spec)?;
    derivative_of(&series, z, n)
}
