use crate::real::Real;

/// Neumaier's variant of Kahan summation. Also tracks `sum |x_i|`, which
/// bounds the rounding error of the total and measures cancellation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum<T> {
    sum: T,
    compensation: T,
    abs_sum: T,
}

impl<T: Real> CompensatedSum<T> {
    pub fn new() -> Self {
        Self {
            sum: T::zero(),
            compensation: T::zero(),
            abs_sum: T::zero(),
        }
    }

    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation = self.compensation + ((self.sum - t) + x);
        } else {
            self.compensation = self.compensation + ((x - t) + self.sum);
        }
        self.sum = t;
        self.abs_sum = self.abs_sum + x.abs();
    }

    pub fn value(&self) -> T {
        self.sum + self.compensation
    }

    /// Sum of absolute values of everything added so far.
    pub fn abs_sum(&self) -> T {
        self.abs_sum
    }

    /// `sum |x_i| / |sum x_i|`; 1 for same-sign terms, large under cancellation.
    pub fn condition(&self) -> T {
        let v = self.value().abs();
        if v > T::zero() {
            self.abs_sum / v
        } else if self.abs_sum > T::zero() {
            T::infinity()
        } else {
            T::one()
        }
    }
}

impl<T: Real> Extend<T> for CompensatedSum<T> {
    fn extend<I: IntoIterator<Item = T>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_small_terms_lost_by_naive_sum() {
        let mut s = CompensatedSum::<f64>::new();
        s.extend([1.0, 1e100, 1.0, -1e100]);
        assert_eq!(s.value(), 2.0);
    }

    #[test]
    fn condition_reports_cancellation() {
        let mut s = CompensatedSum::<f64>::new();
        s.extend([1.0, 2.0]);
        assert_eq!(s.condition(), 1.0);
        let mut c = CompensatedSum::<f64>::new();
        c.extend([1.0, -0.999]);
        assert!(c.condition() > 1000.0);
    }
}
