//! Finite-difference oracle: Ridders' extrapolation of central differences.

const CON: f64 = 1.4;
const CON2: f64 = CON * CON;
const NTAB: usize = 10;
const SAFE: f64 = 2.0;

/// Derivative of order `n` (1 or 2) of `f` at `x`, starting from step `h0`
/// and shrinking it by `CON` per row of the Neville tableau. Returns the
/// estimate and its error.
pub fn ridders<F, E>(mut f: F, x: f64, h0: f64, n: usize) -> Result<(f64, f64), E>
where
    F: FnMut(f64) -> Result<f64, E>,
{
    assert!(n == 1 || n == 2, "only first and second derivatives");
    let f0 = if n == 2 { f(x)? } else { 0.0 };
    let mut diff = |h: f64| -> Result<f64, E> {
        Ok(if n == 1 {
            (f(x + h)? - f(x - h)?) / (2.0 * h)
        } else {
            (f(x + h)? - 2.0 * f0 + f(x - h)?) / (h * h)
        })
    };
    let mut a = [[0.0f64; NTAB]; NTAB];
    let mut h = h0;
    a[0][0] = diff(h)?;
    let mut best = a[0][0];
    let mut err = f64::INFINITY;
    for i in 1..NTAB {
        h /= CON;
        a[0][i] = diff(h)?;
        let mut fac = CON2;
        for j in 1..=i {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= CON2;
            let e = (a[j][i] - a[j - 1][i]).abs().max((a[j][i] - a[j - 1][i - 1]).abs());
            if e <= err {
                err = e;
                best = a[j][i];
            }
        }
        if (a[i][i] - a[i - 1][i - 1]).abs() >= SAFE * err {
            break;
        }
    }
    Ok((best, err))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_smooth_functions() {
        let (d, _) = ridders::<_, ()>(|x| Ok(x.sin()), 0.7, 0.2, 1).unwrap();
        assert!((d - 0.7f64.cos()).abs() < 1e-12);
        let (d, _) = ridders::<_, ()>(|x| Ok(x.exp()), 0.3, 0.2, 2).unwrap();
        assert!((d - 0.3f64.exp()).abs() < 1e-9);
    }
}
