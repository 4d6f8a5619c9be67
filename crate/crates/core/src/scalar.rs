//! Scalar abstraction for the estimator kernels.
//!
//! Every closed-form quantity in this crate is a rational function of the
//! life-table counts, so the kernels are generic over the floating-point
//! scalar. `f64` is the intended production type; `f32` is available for
//! callers that trade precision for size. Concrete aliases live at the
//! crate root.

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar the estimators operate on: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + ToPrimitive + core::fmt::Debug + 'static {
    /// Convert a life-table count.
    ///
    /// Counts in practical tables fit a `f64` mantissa exactly; for `f32`
    /// the conversion rounds, consistent with the reduced-precision lane.
    fn from_count(count: u64) -> Self {
        Self::from_u64(count).expect("count representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Neumaier-compensated running sum.
///
/// Keeps the rounding error of each addition in a separate correction term
/// so prefix sums over long tables stay accurate to a few ulp instead of
/// drifting linearly with the row count.
#[derive(Debug, Clone, Copy)]
pub struct CompensatedSum<T> {
    sum: T,
    correction: T,
}

impl<T: Real> CompensatedSum<T> {
    pub fn new() -> Self {
        Self {
            sum: T::zero(),
            correction: T::zero(),
        }
    }

    pub fn add(&mut self, term: T) {
        let total = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.correction = self.correction + ((self.sum - total) + term);
        } else {
            self.correction = self.correction + ((term - total) + self.sum);
        }
        self.sum = total;
    }

    pub fn value(&self) -> T {
        self.sum + self.correction
    }
}

impl<T: Real> Default for CompensatedSum<T> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_recovers_cancellation() {
        // 1 + 2^-60 + ... + 2^-60 (2^20 terms) loses the tail entirely with
        // naive accumulation but not with compensation.
        let tiny = 2f64.powi(-60);
        let mut naive = 1.0;
        let mut comp = CompensatedSum::new();
        comp.add(1.0);
        for _ in 0..(1 << 20) {
            naive += tiny;
            comp.add(tiny);
        }
        let exact = 1.0 + tiny * (1u64 << 20) as f64;
        assert_eq!(naive, 1.0);
        assert_eq!(comp.value(), exact);
    }

    #[test]
    fn from_count_is_exact_for_table_sized_counts() {
        assert_eq!(f64::from_count(9344), 9344.0);
        assert_eq!(f32::from_count(500), 500.0);
    }
}
