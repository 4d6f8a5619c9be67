//! Closed-form survival estimators over a [`RiskTable`].
//!
//! Per event time `t_j` with `n_j` at risk and `d_j` events, the crate
//! computes:
//!
//! - the Kaplan-Meier product-limit estimate
//!   `S(t) = prod_{j: t_j <= t} (1 - d_j/n_j)`,
//! - the cumulative Greenwood sum
//!   `W(t) = sum_{j: t_j <= t} d_j / (n_j (n_j - d_j))`, which is also the
//!   asymptotic variance of `log S(t)`,
//! - Greenwood's variance of the survival estimate, `G(t) = S(t)^2 W(t)`,
//! - the cumulative variance of the Greenwood increments,
//!   `V(t) = sum_{j: t_j <= t} d_j / (n_j (n_j - d_j)^3)`,
//! - the asymptotic variance of the Greenwood estimate itself,
//!   `R(t) = S(t)^4 (4 W(t)^3 + V(t))`,
//! - Wald confidence intervals for `G(t)` based on `R(t)`.
//!
//! Rows with `n_j = d_j` make the Greenwood denominators singular; from such
//! a row onward the affected quantities are flagged undefined (`None`)
//! rather than emitted as infinities, which keeps every output serializable.
//! The survival estimate stays defined (it is 0 at such a row).
//!
//! All operations are pure functions over immutable inputs and are safe to
//! call concurrently.

use crate::error::{Error, Result};
use crate::lifetable::{RiskRow, RiskTable};
use crate::quantile::standard_normal_quantile;
use crate::scalar::{CompensatedSum, Real};

/// Which normal critical value a Wald interval uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CiConvention {
    /// `z = quantile(1 - alpha)`: the one-sided critical value, used
    /// directly in a symmetric band. Default.
    #[default]
    OneSided,
    /// `z = quantile(1 - alpha/2)`: the usual two-sided band with nominal
    /// `1 - alpha` coverage.
    TwoSided,
}

impl CiConvention {
    pub fn as_str(&self) -> &'static str {
        match self {
            CiConvention::OneSided => "one_sided",
            CiConvention::TwoSided => "two_sided",
        }
    }
}

/// Hazard estimate at a single row: `d/n` with its asymptotic variance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HazardEstimate<T> {
    /// Conditional event probability `d/n`.
    pub hazard: T,
    /// Asymptotic variance `hazard * (1 - hazard) / n`.
    pub variance: T,
}

/// All per-row estimates, one [`EstimatePoint`] per risk-table row.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimatePoint<T> {
    /// Event time of the underlying row.
    pub time: T,
    /// Kaplan-Meier survival estimate through this row.
    pub survival: T,
    /// Cumulative Greenwood sum `W`; `None` once a row with `n = d` is
    /// included.
    pub greenwood_sum: Option<T>,
    /// Greenwood variance of the survival estimate, `S^2 W`.
    pub greenwood: Option<T>,
    /// Cumulative variance of the Greenwood increments,
    /// `sum d / (n (n - d)^3)`.
    pub increment_var_sum: Option<T>,
    /// Asymptotic variance of the Greenwood estimate,
    /// `S^4 (4 W^3 + increment_var_sum)`.
    pub greenwood_var: Option<T>,
    /// Wald interval for the Greenwood estimate; defined iff
    /// `greenwood_var` is.
    pub ci_lower: Option<T>,
    pub ci_upper: Option<T>,
}

/// Right-continuous step curve of estimates, aligned one-to-one with the
/// rows of the table it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateCurve<T> {
    pub points: Vec<EstimatePoint<T>>,
    pub alpha: T,
    pub convention: CiConvention,
    /// Whether interval lower bounds were floored at zero.
    pub clamped: bool,
}

/// Curve values sampled at an arbitrary time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSample<T> {
    pub survival: T,
    pub greenwood: Option<T>,
    pub greenwood_var: Option<T>,
}

impl<T: Real> EstimateCurve<T> {
    /// Right-continuous lookup: the value at the largest event time `<= t`.
    /// Before the first event the sums are empty, so survival is 1 and both
    /// variances are 0.
    pub fn sample(&self, t: T) -> CurveSample<T> {
        let idx = self.points.partition_point(|p| p.time <= t);
        if idx == 0 {
            CurveSample {
                survival: T::one(),
                greenwood: Some(T::zero()),
                greenwood_var: Some(T::zero()),
            }
        } else {
            let point = &self.points[idx - 1];
            CurveSample {
                survival: point.survival,
                greenwood: point.greenwood,
                greenwood_var: point.greenwood_var,
            }
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

// ── Prefix accumulation ─────────────────────────────────────────────────────

/// Running estimates after consuming one more row.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RowState<T> {
    pub survival: T,
    pub greenwood_sum: Option<T>,
    pub increment_var_sum: Option<T>,
}

struct Accumulator<T> {
    survival: T,
    // While no censoring has been seen the risk sets telescope, so the
    // survival estimate is the single-rounded ratio margin / n0. This keeps
    // the uncensored case bit-exact against 1 - ECDF.
    exact_denom: Option<u64>,
    greenwood: CompensatedSum<T>,
    increment_var: CompensatedSum<T>,
    defined: bool,
}

impl<T: Real> Accumulator<T> {
    fn new() -> Self {
        Self {
            survival: T::one(),
            exact_denom: None,
            greenwood: CompensatedSum::new(),
            increment_var: CompensatedSum::new(),
            defined: true,
        }
    }

    fn advance(&mut self, row: &RiskRow<T>, is_first: bool) -> RowState<T> {
        let margin = row.at_risk - row.events;
        if is_first {
            self.exact_denom = Some(row.at_risk);
        }

        match self.exact_denom {
            Some(denom) => {
                self.survival = T::from_count(margin) / T::from_count(denom);
                if row.censored > 0 {
                    self.exact_denom = None;
                }
            }
            None => {
                let factor = T::from_count(margin) / T::from_count(row.at_risk);
                self.survival = self.survival * factor;
            }
        }

        if margin == 0 {
            self.defined = false;
        }
        if self.defined {
            let d = T::from_count(row.events);
            let n = T::from_count(row.at_risk);
            let m = T::from_count(margin);
            self.greenwood.add(d / (n * m));
            self.increment_var.add(d / (n * m * m * m));
        }

        RowState {
            survival: self.survival,
            greenwood_sum: self.defined.then(|| self.greenwood.value()),
            increment_var_sum: self.defined.then(|| self.increment_var.value()),
        }
    }
}

/// Single-pass iterator over the running estimates of every row.
pub(crate) fn row_states<T: Real>(
    table: &RiskTable<T>,
) -> impl Iterator<Item = RowState<T>> + '_ {
    let mut acc = Accumulator::new();
    table
        .rows()
        .iter()
        .enumerate()
        .map(move |(i, row)| acc.advance(row, i == 0))
}

fn state_at<T: Real>(table: &RiskTable<T>, j: usize) -> Result<RowState<T>> {
    if j >= table.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: table.len(),
        });
    }
    Ok(row_states(table).nth(j).expect("index checked"))
}

// ── Per-row operations ──────────────────────────────────────────────────────
//
// Each runs in O(j). Use `build_curve` to evaluate a whole table in one pass.

/// Kaplan-Meier survival estimate through row `j` (the empty product before
/// the first row is 1 and is exposed via [`EstimateCurve::sample`]).
pub fn km_survival<T: Real>(table: &RiskTable<T>, j: usize) -> Result<T> {
    Ok(state_at(table, j)?.survival)
}

/// Cumulative Greenwood sum `W` through row `j`; also the asymptotic
/// variance of `log S`. `None` once a row with `n = d` is included — that is
/// the flagged-undefined state, not an error.
pub fn greenwood_sum<T: Real>(table: &RiskTable<T>, j: usize) -> Result<Option<T>> {
    Ok(state_at(table, j)?.greenwood_sum)
}

/// Greenwood variance of the survival estimate through row `j`: `S^2 W`.
pub fn greenwood<T: Real>(table: &RiskTable<T>, j: usize) -> Result<Option<T>> {
    let state = state_at(table, j)?;
    Ok(state
        .greenwood_sum
        .map(|w| state.survival * state.survival * w))
}

/// Cumulative variance of the Greenwood increments through row `j`:
/// `sum d / (n (n - d)^3)`. Undefined under the same condition as the
/// Greenwood sum.
pub fn increment_variance_sum<T: Real>(table: &RiskTable<T>, j: usize) -> Result<Option<T>> {
    Ok(state_at(table, j)?.increment_var_sum)
}

/// Asymptotic variance of the Greenwood estimate through row `j`.
///
/// Evaluated as `S^4 (4 W^3 + V)` where `V` is the increment variance sum;
/// algebraically identical to the cube-root form `((4^(1/3) W)^3 + V)` with
/// fewer round-off steps.
pub fn greenwood_variance<T: Real>(table: &RiskTable<T>, j: usize) -> Result<Option<T>> {
    let state = state_at(table, j)?;
    Ok(compose_greenwood_variance(&state))
}

fn compose_greenwood_variance<T: Real>(state: &RowState<T>) -> Option<T> {
    let w = state.greenwood_sum?;
    let v = state.increment_var_sum?;
    let s2 = state.survival * state.survival;
    let four = T::from_count(4);
    Some(s2 * s2 * (four * w * w * w + v))
}

/// Asymptotic variance of `log G` through row `j`: `4 W + V / W^2`.
///
/// `None` when the Greenwood sum is undefined or zero (the latter cannot
/// occur while rows exist, but is guarded). Satisfies
/// `S^4 W^2 * log_greenwood_variance = greenwood_variance` up to round-off.
pub fn log_greenwood_variance<T: Real>(table: &RiskTable<T>, j: usize) -> Result<Option<T>> {
    let state = state_at(table, j)?;
    let (Some(w), Some(v)) = (state.greenwood_sum, state.increment_var_sum) else {
        return Ok(None);
    };
    if w == T::zero() {
        return Ok(None);
    }
    Ok(Some(T::from_count(4) * w + v / (w * w)))
}

/// Hazard estimate `d/n` for one row with its asymptotic variance
/// `d/n * (1 - d/n) / n`.
pub fn hazard_estimate<T: Real>(row: &RiskRow<T>) -> HazardEstimate<T> {
    let n = T::from_count(row.at_risk);
    let hazard = T::from_count(row.events) / n;
    HazardEstimate {
        hazard,
        variance: hazard * (T::one() - hazard) / n,
    }
}

// ── Intervals and curve assembly ────────────────────────────────────────────

/// Normal critical value for a Wald band at confidence level `1 - alpha`.
pub fn critical_value(alpha: f64, convention: CiConvention) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidAlpha(alpha));
    }
    let p = match convention {
        CiConvention::OneSided => 1.0 - alpha,
        CiConvention::TwoSided => 1.0 - alpha / 2.0,
    };
    Ok(standard_normal_quantile(p))
}

/// Wald interval `center ± z * sqrt(variance)`.
///
/// Zero variance yields a zero-width interval; negative lower bounds are
/// reported raw (callers may clamp).
pub fn wald_ci<T: Real>(
    center: T,
    variance: T,
    alpha: T,
    convention: CiConvention,
) -> Result<(T, T)> {
    let alpha_f = alpha.to_f64().unwrap_or(f64::NAN);
    let z = critical_value(alpha_f, convention)?;
    if variance < T::zero() || !variance.is_finite() {
        return Err(Error::InvalidVariance(
            variance.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let z = T::from_f64(z).expect("critical value fits scalar");
    let half_width = z * variance.sqrt();
    Ok((center - half_width, center + half_width))
}

/// Evaluate every estimate over the whole table in one pass.
///
/// One [`EstimatePoint`] per row, in row order. Undefined quantities
/// propagate as `None`, never as arbitrary numbers. With `clamp` set,
/// interval lower bounds are floored at zero (a variance cannot be
/// negative); the default reports them raw.
pub fn build_curve<T: Real>(
    table: &RiskTable<T>,
    alpha: T,
    convention: CiConvention,
    clamp: bool,
) -> Result<EstimateCurve<T>> {
    let z = critical_value(alpha.to_f64().unwrap_or(f64::NAN), convention)?;
    let z = T::from_f64(z).expect("critical value fits scalar");

    let points = table
        .rows()
        .iter()
        .zip(row_states(table))
        .map(|(row, state)| {
            let greenwood = state
                .greenwood_sum
                .map(|w| state.survival * state.survival * w);
            let greenwood_var = compose_greenwood_variance(&state);
            let (ci_lower, ci_upper) = match (greenwood, greenwood_var) {
                (Some(g), Some(r)) => {
                    let half_width = z * r.sqrt();
                    let mut lo = g - half_width;
                    if clamp && lo < T::zero() {
                        lo = T::zero();
                    }
                    (Some(lo), Some(g + half_width))
                }
                _ => (None, None),
            };
            EstimatePoint {
                time: row.time,
                survival: state.survival,
                greenwood_sum: state.greenwood_sum,
                greenwood,
                increment_var_sum: state.increment_var_sum,
                greenwood_var,
                ci_lower,
                ci_upper,
            }
        })
        .collect();

    Ok(EstimateCurve {
        points,
        alpha,
        convention,
        clamped: clamp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifetable::{build_risk_table, ObservationRecord};

    fn table(raw: &[(f64, u8)]) -> RiskTable<f64> {
        let records: Vec<_> = raw
            .iter()
            .map(|&(t, s)| ObservationRecord::new(t, s))
            .collect();
        build_risk_table(&records).unwrap()
    }

    /// The worked four-record dataset used throughout: rows
    /// (t=1, n=4, d=1, c=1) and (t=3, n=2, d=1, c=1).
    fn four_record() -> RiskTable<f64> {
        table(&[(1.0, 1), (2.0, 0), (3.0, 1), (4.0, 0)])
    }

    fn single_event() -> RiskTable<f64> {
        // One row (n=3, d=1, c=2).
        table(&[(1.0, 1), (2.0, 0), (3.0, 0)])
    }

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(a.abs()).max(f64::MIN_POSITIVE)
    }

    #[test]
    fn survival_products() {
        let t = four_record();
        assert_eq!(km_survival(&t, 0).unwrap(), 0.75);
        assert_eq!(km_survival(&t, 1).unwrap(), 0.375);
        let err = km_survival(&t, 2).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { index: 2, len: 2 });
    }

    #[test]
    fn survival_is_one_before_first_event() {
        let curve = build_curve(&four_record(), 0.05, CiConvention::OneSided, false).unwrap();
        let sample = curve.sample(0.5);
        assert_eq!(sample.survival, 1.0);
        assert_eq!(sample.greenwood, Some(0.0));
        assert_eq!(sample.greenwood_var, Some(0.0));
    }

    #[test]
    fn greenwood_sum_values() {
        let t = four_record();
        // 1/12 + 1/2 = 7/12
        assert!(rel_close(
            greenwood_sum(&t, 1).unwrap().unwrap(),
            7.0 / 12.0,
            1e-15
        ));
        // single row (n=3, d=1): 1/6
        assert!(rel_close(
            greenwood_sum(&single_event(), 0).unwrap().unwrap(),
            1.0 / 6.0,
            1e-15
        ));
    }

    #[test]
    fn greenwood_sum_is_undefined_when_margin_hits_zero() {
        // Single subject, single event: n = d = 1.
        let t = table(&[(1.0, 1)]);
        assert_eq!(greenwood_sum(&t, 0).unwrap(), None);
        // Survival is still defined, and equals zero.
        assert_eq!(km_survival(&t, 0).unwrap(), 0.0);
    }

    #[test]
    fn greenwood_values() {
        let t = four_record();
        // (3/8)^2 * 7/12 = 21/256
        assert!(rel_close(
            greenwood(&t, 1).unwrap().unwrap(),
            21.0 / 256.0,
            1e-15
        ));
        // Single-event table: (2/3)^2 * 1/6 = 2/27, the binomial identity
        // S(1-S)/n = (2/3)(1/3)/3.
        assert!(rel_close(
            greenwood(&single_event(), 0).unwrap().unwrap(),
            2.0 / 27.0,
            1e-15
        ));
    }

    #[test]
    fn increment_variance_sum_values() {
        let t = four_record();
        // 1/(4*27) + 1/2 = 55/108
        assert!(rel_close(
            increment_variance_sum(&t, 1).unwrap().unwrap(),
            55.0 / 108.0,
            1e-15
        ));
        assert!(rel_close(
            increment_variance_sum(&t, 0).unwrap().unwrap(),
            1.0 / 108.0,
            1e-15
        ));
    }

    #[test]
    fn greenwood_variance_values() {
        let t = four_record();
        // (3/8)^4 * (4 (7/12)^3 + 55/108) = 45603/1769472
        assert!(rel_close(
            greenwood_variance(&t, 1).unwrap().unwrap(),
            45603.0 / 1769472.0,
            1e-15
        ));
        // Single-event table: (2/3)^4 * (4/216 + 1/24) = 26/2187.
        assert!(rel_close(
            greenwood_variance(&single_event(), 0).unwrap().unwrap(),
            26.0 / 2187.0,
            1e-15
        ));
    }

    #[test]
    fn log_greenwood_variance_values() {
        let t = four_record();
        // 4 * 7/12 + (7/12)^-2 * 55/108 = 563/147
        assert!(rel_close(
            log_greenwood_variance(&t, 1).unwrap().unwrap(),
            563.0 / 147.0,
            1e-14
        ));
        // Single-event table: 4/6 + 36/24 = 13/6.
        assert!(rel_close(
            log_greenwood_variance(&single_event(), 0).unwrap().unwrap(),
            13.0 / 6.0,
            1e-14
        ));
    }

    #[test]
    fn substitution_chain_matches_direct_form() {
        // S^4 W^2 * A.Var(log G) must reproduce the Greenwood variance.
        let t = table(&[
            (0.5, 1),
            (1.0, 1),
            (1.0, 0),
            (2.0, 1),
            (2.5, 0),
            (3.0, 1),
            (3.5, 1),
            (4.0, 0),
        ]);
        for j in 0..t.len() {
            let s = km_survival(&t, j).unwrap();
            let w = greenwood_sum(&t, j).unwrap().unwrap();
            let a = log_greenwood_variance(&t, j).unwrap().unwrap();
            let direct = greenwood_variance(&t, j).unwrap().unwrap();
            let chained = s.powi(4) * w * w * a;
            assert!(
                rel_close(direct, chained, 1e-12),
                "j={j}: {direct} vs {chained}"
            );
        }
    }

    #[test]
    fn hazard_estimates() {
        let row = RiskRow { time: 1.0, at_risk: 4, events: 1, censored: 0 };
        let h = hazard_estimate(&row);
        assert_eq!(h.hazard, 0.25);
        assert_eq!(h.variance, 0.046875);

        let row = RiskRow { time: 1.0, at_risk: 5, events: 5, censored: 0 };
        let h = hazard_estimate(&row);
        assert_eq!(h.hazard, 1.0);
        assert_eq!(h.variance, 0.0);

        let row = RiskRow { time: 1.0, at_risk: 2, events: 1, censored: 0 };
        let h = hazard_estimate(&row);
        assert_eq!(h.hazard, 0.5);
        assert_eq!(h.variance, 0.125);
    }

    #[test]
    fn wald_ci_zero_variance_is_zero_width() {
        let (lo, hi) = wald_ci(0.42, 0.0, 0.05, CiConvention::OneSided).unwrap();
        assert_eq!((lo, hi), (0.42, 0.42));
    }

    #[test]
    fn wald_ci_median_alpha_is_zero_width() {
        // quantile(1 - 0.5) = 0.
        let (lo, hi) = wald_ci(0.3, 0.7, 0.5, CiConvention::OneSided).unwrap();
        assert_eq!((lo, hi), (0.3, 0.3));
    }

    #[test]
    fn wald_ci_worked_example() {
        // Oracle: z = quantile(0.95) reference value, half-width z*sqrt(r).
        let g: f64 = 21.0 / 256.0;
        let r: f64 = 0.0257727;
        let z = 1.644_853_626_951_472_2;
        let want = (g - z * r.sqrt(), g + z * r.sqrt());
        let (lo, hi) = wald_ci(g, r, 0.05, CiConvention::OneSided).unwrap();
        assert!((lo - want.0).abs() < 1e-12);
        assert!((hi - want.1).abs() < 1e-12);
        // Coarse check against the rounded published band.
        assert!((lo - -0.18204).abs() < 1e-4);
        assert!((hi - 0.34610).abs() < 1e-4);
    }

    #[test]
    fn wald_ci_rejects_bad_inputs() {
        assert!(matches!(
            wald_ci(0.0, 1.0, 0.0, CiConvention::OneSided),
            Err(Error::InvalidAlpha(_))
        ));
        assert!(matches!(
            wald_ci(0.0, 1.0, 1.0, CiConvention::TwoSided),
            Err(Error::InvalidAlpha(_))
        ));
        assert!(matches!(
            wald_ci(0.0, -1e-9, 0.05, CiConvention::OneSided),
            Err(Error::InvalidVariance(_))
        ));
    }

    #[test]
    fn critical_values_for_both_conventions() {
        let one = critical_value(0.05, CiConvention::OneSided).unwrap();
        let two = critical_value(0.05, CiConvention::TwoSided).unwrap();
        assert!((one - 1.644854).abs() < 1e-6);
        assert!((two - 1.959964).abs() < 1e-6);
    }

    #[test]
    fn curve_matches_per_row_operations() {
        let t = four_record();
        let curve = build_curve(&t, 0.05, CiConvention::TwoSided, false).unwrap();
        assert_eq!(curve.len(), 2);
        let p = &curve.points[1];
        assert_eq!(p.survival, 0.375);
        assert!(rel_close(p.greenwood.unwrap(), 21.0 / 256.0, 1e-15));
        assert!(rel_close(
            p.greenwood_var.unwrap(),
            45603.0 / 1769472.0,
            1e-15
        ));
        assert_eq!(p.greenwood_sum, greenwood_sum(&t, 1).unwrap());
        assert_eq!(p.increment_var_sum, increment_variance_sum(&t, 1).unwrap());
    }

    #[test]
    fn curve_of_empty_table_has_no_points() {
        let t = table(&[(5.0, 0), (7.0, 0)]);
        let curve = build_curve(&t, 0.05, CiConvention::OneSided, false).unwrap();
        assert!(curve.is_empty());
        let sample = curve.sample(6.0);
        assert_eq!(sample.survival, 1.0);
        assert_eq!(sample.greenwood, Some(0.0));
    }

    #[test]
    fn undefined_tail_propagates_through_curve() {
        // Last subject dies: final row has n = d = 1.
        let t = table(&[(1.0, 1), (2.0, 1)]);
        let curve = build_curve(&t, 0.05, CiConvention::OneSided, false).unwrap();
        let first = &curve.points[0];
        assert!(first.greenwood.is_some());
        assert!(first.ci_lower.is_some());
        let last = &curve.points[1];
        assert_eq!(last.survival, 0.0);
        assert_eq!(last.greenwood_sum, None);
        assert_eq!(last.greenwood, None);
        assert_eq!(last.increment_var_sum, None);
        assert_eq!(last.greenwood_var, None);
        assert_eq!(last.ci_lower, None);
        assert_eq!(last.ci_upper, None);
    }

    #[test]
    fn clamp_floors_interval_lower_bounds() {
        let t = four_record();
        let raw = build_curve(&t, 0.05, CiConvention::OneSided, false).unwrap();
        assert!(raw.points[1].ci_lower.unwrap() < 0.0);
        let clamped = build_curve(&t, 0.05, CiConvention::OneSided, true).unwrap();
        assert_eq!(clamped.points[1].ci_lower, Some(0.0));
        assert_eq!(clamped.points[1].ci_upper, raw.points[1].ci_upper);
    }

    #[test]
    fn curve_rejects_invalid_alpha() {
        let t = four_record();
        assert!(matches!(
            build_curve(&t, 1.0, CiConvention::OneSided, false),
            Err(Error::InvalidAlpha(_))
        ));
    }

    #[test]
    fn f32_lane_produces_the_same_shape() {
        let records: Vec<ObservationRecord<f32>> = vec![
            ObservationRecord::event(1.0),
            ObservationRecord::censored(2.0),
            ObservationRecord::event(3.0),
            ObservationRecord::censored(4.0),
        ];
        let t = build_risk_table(&records).unwrap();
        let curve = build_curve(&t, 0.05f32, CiConvention::OneSided, false).unwrap();
        assert_eq!(curve.points[1].survival, 0.375f32);
        assert!((curve.points[1].greenwood.unwrap() - 21.0 / 256.0).abs() < 1e-6);
    }
}
