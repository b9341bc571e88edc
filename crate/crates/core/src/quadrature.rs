//! Double-exponential quadrature on `(0, 1)`, `(a, b)` and `(0, inf)`.
//!
//! `(0, 1)` uses the tanh-sinh map `x = (1 + tanh(pi/2 sinh t)) / 2`; the
//! integrand receives both `x` and `1 - x`, each computed without
//! cancellation, so factors like `(1 - x)^{beta - 1}` stay accurate right up
//! to the endpoint and no node ever lands on 0 or 1. The half line is split
//! at 1: tanh-sinh on `(0, 1]` and exp-sinh (`x = 1 + exp(pi/2 sinh t)`) on
//! `[1, inf)`.
//!
//! Each level halves the step and only evaluates the new nodes. The error
//! estimate is the difference between the last two levels, which for a
//! double-exponential rule overstates the true error by roughly the square
//! root of the error itself.

use crate::error::{domain, Error, Result};
use crate::kernels::{CompensatedSum, EvalResult};
use crate::real::Real;

/// Level at which convergence is first tested.
const MIN_LEVEL: usize = 3;
/// Nodes inside `|t| <= SCAN_CORE` are always evaluated at the coarsest level.
const SCAN_CORE: f64 = 3.0;

/// Tolerances and budget of one integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec<T> {
    pub rel_tol: T,
    pub abs_tol: T,
    /// Number of step halvings after the first level.
    pub max_level: usize,
    pub max_nodes: usize,
}

impl<T: Real> Default for QuadratureSpec<T> {
    fn default() -> Self {
        Self {
            rel_tol: T::lit(1e-10).max(T::epsilon() * T::lit(64.0)),
            abs_tol: T::lit(1e-300).max(T::min_positive_value()),
            max_level: 12,
            max_nodes: 1 << 20,
        }
    }
}

impl<T: Real> QuadratureSpec<T> {
    pub fn with_rel_tol(mut self, rel_tol: T) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_max_level(mut self, max_level: usize) -> Self {
        self.max_level = max_level;
        self
    }

    pub fn with_max_nodes(mut self, max_nodes: usize) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > T::zero()) {
            return domain(format!("rel_tol must be > 0, got {}", self.rel_tol));
        }
        if !(self.abs_tol >= T::zero()) {
            return domain(format!("abs_tol must be >= 0, got {}", self.abs_tol));
        }
        if self.max_level < MIN_LEVEL {
            return domain(format!("max_level must be >= {MIN_LEVEL}, got {}", self.max_level));
        }
        Ok(())
    }

    fn target(&self, value: T) -> T {
        (self.rel_tol * value.abs()).max(self.abs_tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    pub abs_error_estimate: T,
    pub nodes_used: usize,
    pub converged: bool,
}

impl<T: Real> QuadResult<T> {
    fn combine(self, other: Self, spec: &QuadratureSpec<T>) -> Self {
        let value = self.value + other.value;
        let abs_error_estimate = self.abs_error_estimate + other.abs_error_estimate;
        Self {
            value,
            abs_error_estimate,
            nodes_used: self.nodes_used + other.nodes_used,
            converged: self.converged && other.converged && abs_error_estimate <= spec.target(value),
        }
    }

    fn scale(self, factor: T) -> Self {
        Self {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            ..self
        }
    }
}

impl<T: Real> From<QuadResult<T>> for EvalResult<T> {
    fn from(q: QuadResult<T>) -> Self {
        Self {
            value: q.value,
            abs_error_estimate: q.abs_error_estimate,
            converged: q.converged,
            work: q.nodes_used,
        }
    }
}

/// One node of a double-exponential rule: where to evaluate and with what weight.
trait DeMap<T: Real> {
    type Point: Copy;
    /// `None` once the node is past the representable end of the interval.
    fn node(&self, t: T) -> Option<(Self::Point, T)>;
    fn location(p: Self::Point) -> T;
    fn t_max(&self) -> T;
}

/// tanh-sinh on (0, 1); points are `(x, 1 - x)`.
struct TanhSinh;

impl<T: Real> DeMap<T> for TanhSinh {
    type Point = (T, T);

    fn node(&self, t: T) -> Option<((T, T), T)> {
        let s = T::FRAC_PI_2() * t.sinh();
        let e = (-T::two() * s.abs()).exp();
        let small = e / (T::one() + e);
        let large = (T::one() + e).recip();
        if small < T::node_floor() {
            return None;
        }
        let w = T::PI() * t.cosh() * small * large;
        let p = if t >= T::zero() { (large, small) } else { (small, large) };
        Some((p, w))
    }

    fn location(p: (T, T)) -> T {
        p.0
    }

    fn t_max(&self) -> T {
        // small(t) ~ exp(-pi sinh t) reaches the node floor here.
        (-T::node_floor().ln() / T::PI()).asinh()
    }
}

/// exp-sinh on (1, inf).
struct ExpSinhShifted;

impl<T: Real> DeMap<T> for ExpSinhShifted {
    type Point = T;

    fn node(&self, t: T) -> Option<(T, T)> {
        let e = (T::FRAC_PI_2() * t.sinh()).exp();
        if e < T::node_floor() || !e.is_finite() {
            return None;
        }
        let w = T::FRAC_PI_2() * t.cosh() * e;
        if !w.is_finite() {
            return None;
        }
        Some((T::one() + e, w))
    }

    fn location(p: T) -> T {
        p
    }

    fn t_max(&self) -> T {
        (T::lit(2.0) / T::PI() * T::ln_max() * T::half()).asinh()
    }
}

struct Panel<T> {
    sum: CompensatedSum<T>,
    nodes: usize,
}

fn eval_node<T, P, F>(f: &mut F, p: P, w: T, loc: T) -> Result<T>
where
    T: Real,
    F: FnMut(P) -> Result<T>,
{
    let y = f(p)?;
    if !y.is_finite() {
        return Err(Error::NonFinite {
            at: loc.to_f64_lossy(),
            value: y.to_f64_lossy(),
        });
    }
    Ok(w * y)
}

fn double_exponential<T, M, F>(map: M, mut f: F, spec: &QuadratureSpec<T>) -> Result<QuadResult<T>>
where
    T: Real,
    M: DeMap<T>,
    F: FnMut(M::Point) -> Result<T>,
{
    spec.validate()?;
    let t_max = map.t_max();
    let core = T::lit(SCAN_CORE);
    let mut panel = Panel {
        sum: CompensatedSum::new(),
        nodes: 0,
    };

    // Coarsest level (h = 1): scan outward from t = 0 on each side and stop
    // once contributions are negligible outside the core region.
    let mut limits = [T::zero(), T::zero()];
    if let Some((p, w)) = map.node(T::zero()) {
        let c = eval_node(&mut f, p, w, M::location(p))?;
        panel.sum.add(c);
        panel.nodes += 1;
    }
    for (side, sign) in [T::one(), -T::one()].into_iter().enumerate() {
        let mut k = 1usize;
        let mut quiet = 0;
        loop {
            let t = sign * T::from_usize_lossy(k);
            if t.abs() > t_max {
                limits[side] = t_max;
                break;
            }
            let Some((p, w)) = map.node(t) else {
                limits[side] = t.abs();
                break;
            };
            let c = eval_node(&mut f, p, w, M::location(p))?;
            panel.sum.add(c);
            panel.nodes += 1;
            let negligible = c.abs() <= T::epsilon() * panel.sum.value().abs();
            quiet = if negligible { quiet + 1 } else { 0 };
            if t.abs() >= core && quiet >= 2 {
                limits[side] = t.abs();
                break;
            }
            k += 1;
        }
    }

    let mut h = T::one();
    let mut prev = panel.sum.value();
    let mut err = T::infinity();
    let mut converged = false;
    for level in 1..=spec.max_level {
        h = h * T::half();
        let step = h + h;
        for (side, sign) in [T::one(), -T::one()].into_iter().enumerate() {
            let mut t = h;
            while t < limits[side] {
                if let Some((p, w)) = map.node(sign * t) {
                    let c = eval_node(&mut f, p, w, M::location(p))?;
                    panel.sum.add(c);
                    panel.nodes += 1;
                }
                t = t + step;
            }
        }
        let current = h * panel.sum.value();
        let roundoff = T::two() * T::epsilon() * h * panel.sum.abs_sum();
        err = (current - prev).abs().max(roundoff);
        prev = current;
        if level >= MIN_LEVEL && err <= spec.target(current) {
            converged = true;
            break;
        }
        if panel.nodes >= spec.max_nodes {
            break;
        }
    }
    Ok(QuadResult {
        value: prev,
        abs_error_estimate: err,
        nodes_used: panel.nodes,
        converged,
    })
}

/// Integrates `f(x, 1 - x)` over `(0, 1)`. The integrand may fail; the
/// first failure aborts the integration.
pub fn try_integrate_01<T, F>(mut f: F, spec: &QuadratureSpec<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T, T) -> Result<T>,
{
    double_exponential(TanhSinh, |(x, xc)| f(x, xc), spec)
}

/// Integrates `f(x, 1 - x)` over `(0, 1)`.
///
/// Endpoint singularities like `x^alpha` with `alpha > -1` are fine; a NaN or
/// infinite value at any node aborts with [`Error::NonFinite`].
pub fn integrate_01<T, F>(mut f: F, spec: &QuadratureSpec<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T, T) -> T,
{
    try_integrate_01(|x, xc| Ok(f(x, xc)), spec)
}

/// Integrates over `(a, b)` by the affine map onto `(0, 1)`. The integrand
/// receives `(u, u - a, b - u)` with both offsets computed without
/// cancellation.
pub fn try_integrate_finite<T, F>(mut f: F, a: T, b: T, spec: &QuadratureSpec<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T, T, T) -> Result<T>,
{
    if !(b > a) || !a.is_finite() || !b.is_finite() {
        return domain(format!("integrate_finite requires finite a < b, got ({a}, {b})"));
    }
    let width = b - a;
    let r = try_integrate_01(
        |t, tc| {
            let (da, db) = (width * t, width * tc);
            let u = if t <= tc { a + da } else { b - db };
            f(u, da, db)
        },
        spec,
    )?;
    Ok(r.scale(width))
}

pub fn integrate_finite<T, F>(mut f: F, a: T, b: T, spec: &QuadratureSpec<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T, T, T) -> T,
{
    try_integrate_finite(|u, da, db| Ok(f(u, da, db)), a, b, spec)
}

/// Integrates `f` over `(0, inf)`: tanh-sinh on `(0, 1]` plus exp-sinh on
/// `[1, inf)`. The split keeps algebraic behavior at 0 and the decay at
/// infinity in separate panels.
pub fn try_integrate_semi_inf<T, F>(mut f: F, spec: &QuadratureSpec<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let head = double_exponential(TanhSinh, |(x, _)| f(x), spec)?;
    let tail = double_exponential(ExpSinhShifted, &mut f, spec)?;
    Ok(head.combine(tail, spec))
}

pub fn integrate_semi_inf<T, F>(mut f: F, spec: &QuadratureSpec<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T) -> T,
{
    try_integrate_semi_inf(|x| Ok(f(x)), spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::rel_dev;

    fn spec() -> QuadratureSpec<f64> {
        QuadratureSpec::default()
    }

    #[test]
    fn constant_on_unit_interval() {
        let r = integrate_01(|_, _| 1.0, &spec()).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn arcsine_density() {
        let r = integrate_01(|x: f64, xc: f64| x.powf(-0.5) * xc.powf(-0.5), &spec()).unwrap();
        assert!(r.converged);
        assert!(rel_dev(r.value, std::f64::consts::PI) < 1e-12);
    }

    #[test]
    fn never_evaluates_endpoints() {
        integrate_01(
            |x: f64, xc: f64| {
                assert!(x > 0.0 && xc > 0.0);
                1.0
            },
            &spec(),
        )
        .unwrap();
    }

    #[test]
    fn finite_interval() {
        let r = integrate_finite(|_, _, _| 1.0, -1.0, 1.0, &spec()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-15);
        let q = integrate_finite(|_, da: f64, db: f64| da * db, 2.0, 5.0, &spec()).unwrap();
        assert!(rel_dev(q.value, 4.5) < 1e-14);
        assert!(matches!(
            integrate_finite(|_, _, _| 1.0, 1.0, 1.0, &spec()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn semi_infinite_exponential() {
        let r = integrate_semi_inf(|u: f64| (-u).exp(), &spec()).unwrap();
        assert!(r.converged);
        assert!(rel_dev(r.value, 1.0) < 1e-14);
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        let r = integrate_01(|x: f64, _| if x > 0.3 && x < 0.6 { f64::NAN } else { 1.0 }, &spec());
        assert!(matches!(r, Err(Error::NonFinite { .. })));
    }

    #[test]
    fn integrand_failures_propagate() {
        let r = try_integrate_01(|_: f64, _| Err(Error::Domain("boom".into())), &spec());
        assert_eq!(r, Err(Error::Domain("boom".into())));
    }

    #[test]
    fn tiny_budget_reports_non_convergence() {
        let s = spec().with_max_nodes(20);
        let r = integrate_01(|x: f64, xc: f64| (x * xc).powf(-0.9), &s).unwrap();
        assert!(!r.converged);
    }

    #[test]
    fn rejects_bad_spec() {
        let s = spec().with_max_level(2);
        assert!(matches!(integrate_01(|_, _| 1.0, &s), Err(Error::Domain(_))));
        let s = spec().with_rel_tol(0.0);
        assert!(matches!(integrate_01(|_, _| 1.0, &s), Err(Error::Domain(_))));
    }

    #[test]
    fn single_precision() {
        let s = QuadratureSpec::<f32>::default().with_rel_tol(1e-5);
        let r = integrate_semi_inf(|u: f32| u * (-u).exp(), &s).unwrap();
        assert!(r.converged, "{r:?}");
        assert!((r.value - 1.0).abs() < 1e-5);
    }
}
