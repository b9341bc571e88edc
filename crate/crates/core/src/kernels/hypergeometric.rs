//! Kummer's confluent function `Phi(b; c; z) = 1F1(b; c; z)` and Gauss'
//! `2F1(a, b; c; z)` by direct power series.

use super::summation::CompensatedSum;
use super::EvalResult;
use crate::error::{domain, Error, Result};
use crate::real::Real;

/// Hard cap on the number of series terms.
pub const MAX_TERMS: usize = 100_000;

/// Condition number above which a cancellation warning is logged.
const CANCELLATION_WARN: f64 = 1e6;

fn check_denominator<T: Real>(c: T) -> Result<()> {
    if c <= T::zero() && c == c.floor() {
        return Err(Error::Pole(c.to_f64_lossy()));
    }
    Ok(())
}

/// Sums `sum_n t_n` given `t_0`, the term ratio `t_{n+1} / t_n`, and a
/// bound `q_n >= sup_{k >= n} |t_{k+1} / t_k|` that is valid once
/// `n >= monotone_from`. Stops when `|t_n| / (1 - q_n)` falls below the
/// target relative to the partial sum.
pub(crate) fn sum_hypergeometric<T, R, Q>(first: T, monotone_from: usize, ratio: R, ratio_bound: Q) -> EvalResult<T>
where
    T: Real,
    R: Fn(usize) -> T,
    Q: Fn(usize) -> T,
{
    let tol = T::epsilon() * T::half();
    let mut sum = CompensatedSum::new();
    let mut term = first;
    let mut tail = T::zero();
    let mut converged = false;
    let mut n = 0usize;
    while n < MAX_TERMS {
        sum.add(term);
        if term == T::zero() {
            converged = true;
            break;
        }
        if n >= monotone_from {
            let q = ratio_bound(n);
            if q < T::one() {
                tail = term.abs() * q / (T::one() - q);
                if term.abs() / (T::one() - q) <= tol * sum.value().abs() {
                    converged = true;
                    break;
                }
            }
        }
        term = term * ratio(n);
        n += 1;
        if !term.is_finite() {
            break;
        }
    }
    let value = sum.value();
    if sum.condition() > T::lit(CANCELLATION_WARN) {
        log::warn!(
            "hypergeometric series lost ~{:.1} digits to cancellation",
            sum.condition().log10().to_f64_lossy()
        );
    }
    EvalResult {
        value,
        abs_error_estimate: tail + T::lit(4.0) * T::epsilon() * sum.abs_sum(),
        converged: converged && value.is_finite(),
        work: n + 1,
    }
}

/// Kummer's confluent hypergeometric function
/// `Phi(b; c; z) = sum_n (b)_n / (c)_n z^n / n!`.
///
/// Negative `z` is summed directly (no Kummer transformation), so large
/// negative arguments lose accuracy to cancellation; the loss is folded
/// into `abs_error_estimate`.
pub fn kummer_phi<T: Real>(b: T, c: T, z: T) -> Result<EvalResult<T>> {
    check_denominator(c)?;
    if !(b.is_finite() && z.is_finite()) {
        return domain("kummer_phi: non-finite argument");
    }
    let n0 = b.abs().max(c.abs()).ceil().to_usize().unwrap_or(0) + 1;
    let za = z.abs();
    Ok(sum_hypergeometric(
        T::one(),
        n0,
        |n| {
            let nf = T::from_usize_lossy(n);
            (b + nf) * z / ((c + nf) * (nf + T::one()))
        },
        |n| {
            let nf = T::from_usize_lossy(n);
            za / (nf + T::one()) * ((b + nf).abs() / (c + nf).abs()).max(T::one())
        },
    ))
}

/// Gauss hypergeometric series `2F1(a, b; c; z)` for `|z| < 1`.
pub fn gauss_2f1<T: Real>(a: T, b: T, c: T, z: T) -> Result<EvalResult<T>> {
    check_denominator(c)?;
    if !(z.abs() < T::one()) {
        return domain(format!("gauss_2f1 requires |z| < 1, got z = {z}"));
    }
    let n0 = a.abs().max(b.abs()).max(c.abs()).ceil().to_usize().unwrap_or(0) + 2;
    let za = z.abs();
    Ok(sum_hypergeometric(
        T::one(),
        n0,
        |n| {
            let nf = T::from_usize_lossy(n);
            (a + nf) * (b + nf) * z / ((c + nf) * (nf + T::one()))
        },
        |n| {
            let nf = T::from_usize_lossy(n);
            let f = ((a + nf) * (b + nf) / ((c + nf) * (nf + T::one()))).abs();
            za * f.max(T::one())
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::rel_dev;

    #[test]
    fn kummer_at_zero_is_one() {
        for &(b, c) in &[(1.0, 2.0), (-2.5, 0.3), (7.0, -1.5)] {
            assert_eq!(kummer_phi(b, c, 0.0_f64).unwrap().value, 1.0);
        }
    }

    #[test]
    fn kummer_closed_forms() {
        let e1 = kummer_phi(1.0_f64, 2.0, 1.0).unwrap();
        assert!(e1.converged);
        assert!(rel_dev(e1.value, std::f64::consts::E - 1.0) < 1e-15);
        // Phi(b; b; z) = e^z
        let ez = kummer_phi(2.3_f64, 2.3, -3.0).unwrap().value;
        assert!(rel_dev(ez, (-3.0_f64).exp()) < 1e-13);
    }

    #[test]
    fn kummer_terminates_for_negative_integer_numerator() {
        // Phi(-2; c; z) = 1 - 2z/c + z^2 / (c (c + 1))
        let (c, z) = (1.5_f64, 0.7);
        let r = kummer_phi(-2.0, c, z).unwrap();
        assert!(r.converged && r.work <= 4);
        assert!(rel_dev(r.value, 1.0 - 2.0 * z / c + z * z / (c * (c + 1.0))) < 1e-15);
    }

    #[test]
    fn pole_in_denominator() {
        assert_eq!(kummer_phi(1.0_f64, -2.0, 0.5), Err(Error::Pole(-2.0)));
        assert_eq!(gauss_2f1(1.0_f64, 1.0, 0.0, 0.5), Err(Error::Pole(0.0)));
    }

    #[test]
    fn gauss_closed_forms_and_domain() {
        assert_eq!(gauss_2f1(1.2_f64, 2.0, 3.0, 0.0).unwrap().value, 1.0);
        let r = gauss_2f1(1.0_f64, 1.0, 2.0, 0.5).unwrap();
        assert!(r.converged);
        assert!(rel_dev(r.value, 2.0 * std::f64::consts::LN_2) < 1e-14);
        assert!(matches!(gauss_2f1(1.0_f64, 1.0, 2.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(gauss_2f1(1.0_f64, 1.0, 2.0, -1.2), Err(Error::Domain(_))));
    }
}
