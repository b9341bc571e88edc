//! Test-only oracles, deliberately independent of the library's
//! double-exponential quadrature: adaptive bisection with Gauss-Legendre
//! panels.

#![allow(dead_code)]

use std::f64::consts::PI;

/// Nodes and weights of the `n`-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

fn panel(rule: &[(f64, f64)], f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (m, r) = (0.5 * (a + b), 0.5 * (b - a));
    rule.iter().map(|&(x, w)| w * f(m + r * x)).sum::<f64>() * r
}

fn adapt(rule: &[(f64, f64)], f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let left = panel(rule, f, a, m);
    let right = panel(rule, f, m, b);
    let both = left + right;
    if depth == 0 || (both - whole).abs() <= tol {
        return both;
    }
    adapt(rule, f, a, m, left, 0.5 * tol, depth - 1) + adapt(rule, f, m, b, right, 0.5 * tol, depth - 1)
}

/// Adaptive Gauss-Legendre on `[a, b]` to absolute tolerance `tol`.
pub fn gl_integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let rule = gauss_legendre(20);
    let whole = panel(&rule, &f, a, b);
    adapt(&rule, &f, a, b, whole, tol, 40)
}

/// `int_0^1 t^{alpha-1} (1-t)^{beta-1} g(t) dt` for `alpha, beta > 0`, with
/// the endpoint powers removed by `t = s^{1/alpha}` on [0, 1/2] and the
/// mirrored substitution on [1/2, 1].
pub fn gl_beta_weighted(alpha: f64, beta: f64, g: impl Fn(f64) -> f64, tol: f64) -> f64 {
    // t = s^{1/alpha}: dt = s^{1/alpha - 1}/alpha ds, t^{alpha-1} dt = ds / alpha
    let left = gl_integrate(
        |s| {
            if s <= 0.0 {
                return 0.0;
            }
            let t = s.powf(1.0 / alpha);
            (1.0 - t).powf(beta - 1.0) * g(t) / alpha
        },
        0.0,
        0.5f64.powf(alpha),
        tol,
    );
    let right = gl_integrate(
        |s| {
            if s <= 0.0 {
                return 0.0;
            }
            let u = s.powf(1.0 / beta);
            (1.0 - u).powf(alpha - 1.0) * g(1.0 - u) / beta
        },
        0.0,
        0.5f64.powf(beta),
        tol,
    );
    left + right
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}
