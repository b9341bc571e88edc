#![allow(clippy::excessive_precision)] // reference digits kept as published
use crate::error::{domain, Error, Result};
use crate::real::Real;

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

// B_{2k} / (2k (2k - 1)) for the Stirling tail of ln Gamma.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

fn is_non_positive_integer<T: Real>(x: T) -> bool {
    x <= T::zero() && x == x.floor()
}

/// Lanczos series `A_g(x)` for `x >= 1/2` (argument shifted by one).
fn lanczos_sum<T: Real>(x: T) -> T {
    let xm1 = x - T::one();
    let mut acc = T::lit(LANCZOS[0]);
    for (k, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + T::lit(c) / (xm1 + T::from_usize_lossy(k));
    }
    acc
}

/// Gamma function on the real line.
///
/// Uses the Lanczos approximation for `x >= 1/2` and the reflection formula
/// below that.
pub fn gamma<T: Real>(x: T) -> Result<T> {
    if x.is_nan() {
        return domain("gamma: argument is NaN");
    }
    if is_non_positive_integer(x) {
        return Err(Error::Pole(x.to_f64_lossy()));
    }
    if x == T::one() || x == T::two() {
        return Ok(T::one());
    }
    if x < T::half() {
        // Gamma(x) Gamma(1 - x) = pi / sin(pi x)
        let s = (T::PI() * x).sin();
        let g = gamma(T::one() - x)?;
        let v = T::PI() / (s * g);
        return if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Overflow(format!("gamma({x})")))
        };
    }
    let t = x + T::lit(LANCZOS_G) - T::half();
    // t^(x - 1/2) split in two factors to delay overflow.
    let half_pow = t.powf((x - T::half()) * T::half());
    let v = (T::two() * T::PI()).sqrt() * half_pow * (half_pow * (-t).exp()) * lanczos_sum(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("gamma({x})")))
    }
}

/// `ln Gamma(x)` for `x > 0`.
pub fn log_gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) {
        return domain(format!("log_gamma requires x > 0, got {x}"));
    }
    if x == T::one() || x == T::two() {
        return Ok(T::zero());
    }
    if x < T::half() {
        return Ok(log_gamma(x + T::one())? - x.ln());
    }
    if x < T::lit(10.0) {
        let t = x + T::lit(LANCZOS_G) - T::half();
        return Ok(T::half() * (T::two() * T::PI()).ln() + (x - T::half()) * t.ln() - t + lanczos_sum(x).ln());
    }
    let inv = x.recip();
    let inv2 = inv * inv;
    let mut tail = T::zero();
    let mut pow = inv;
    for &c in STIRLING.iter() {
        tail = tail + T::lit(c) * pow;
        pow = pow * inv2;
    }
    Ok((x - T::half()) * x.ln() - x + T::half() * (T::two() * T::PI()).ln() + tail)
}

/// Rising factorial `(x)_n = x (x + 1) ... (x + n - 1)`, with `(x)_0 = 1`.
pub fn pochhammer<T: Real>(x: T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, k| acc * (x + T::from_usize_lossy(k)))
}

/// `ln B(a, b)` for `a, b > 0`.
pub fn ln_beta<T: Real>(a: T, b: T) -> Result<T> {
    if !(a > T::zero() && b > T::zero()) {
        return domain(format!("beta requires a > 0 and b > 0, got a = {a}, b = {b}"));
    }
    Ok(log_gamma(a)? + log_gamma(b)? - log_gamma(a + b)?)
}

/// Classical beta function `Gamma(a) Gamma(b) / Gamma(a + b)`, evaluated in log space.
pub fn beta<T: Real>(a: T, b: T) -> Result<T> {
    ln_beta(a, b).map(T::exp)
}
