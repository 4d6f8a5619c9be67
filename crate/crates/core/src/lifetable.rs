//! Life-table construction from right-censored observations.
//!
//! [`build_risk_table`] turns raw `(time, status)` records into the ordered
//! risk table all estimators consume: one row per distinct event time with
//! the at-risk, event, and censoring counts.
//!
//! Conventions:
//! - Censorings tied with an event time count as at risk for that event and
//!   are removed afterwards (the standard Kaplan-Meier tie rule).
//! - Times are compared by exact numeric equality; there is no epsilon
//!   bucketing of near-equal times. Callers that want coarser grouping can
//!   pre-round.
//! - Censorings after the last event accumulate in the final row's
//!   `censored` count so every subject reconciles against the cohort size.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// One observed subject: a follow-up time plus an event flag.
///
/// `status` uses the usual coding: `1` marks an event, `0` a right-censored
/// observation. Times must be finite, non-negative, and in a common unit
/// across a dataset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservationRecord<T> {
    pub time: T,
    pub status: u8,
}

impl<T: Real> ObservationRecord<T> {
    pub fn new(time: T, status: u8) -> Self {
        Self { time, status }
    }

    /// An observed event at `time`.
    pub fn event(time: T) -> Self {
        Self::new(time, 1)
    }

    /// A right-censored observation at `time`.
    pub fn censored(time: T) -> Self {
        Self::new(time, 0)
    }

    pub fn is_event(&self) -> bool {
        self.status == 1
    }

    fn check(&self) -> std::result::Result<(), String> {
        if !self.time.is_finite() {
            return Err("time is not finite".to_string());
        }
        if self.time < T::zero() {
            return Err("time is negative".to_string());
        }
        if self.status > 1 {
            return Err(format!("status {} is not 0 or 1", self.status));
        }
        Ok(())
    }
}

/// Counts at one distinct event time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiskRow<T> {
    /// Event time.
    pub time: T,
    /// Subjects at risk immediately before `time`.
    pub at_risk: u64,
    /// Events at `time`; rows exist only at event times, so this is >= 1.
    pub events: u64,
    /// Censorings in the half-open window from `time` up to the next event
    /// time. Censorings tied with `time` were at risk for this event and
    /// land here.
    pub censored: u64,
}

/// Ordered risk table over the distinct event times of a cohort.
///
/// Invariants, enforced on construction:
/// - rows strictly increasing in time,
/// - `1 <= events <= at_risk` per row,
/// - `rows[0].at_risk == total - censored_before_first`,
/// - `rows[j+1].at_risk == rows[j].at_risk - events - censored`,
/// - every subject reconciles against `total`.
///
/// Immutable once built; freely shareable across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct RiskTable<T> {
    rows: Vec<RiskRow<T>>,
    total: u64,
    censored_before_first: u64,
}

impl<T: Real> RiskTable<T> {
    /// Build a table from pre-aggregated rows, validating every invariant.
    pub fn from_rows(
        rows: Vec<RiskRow<T>>,
        total: u64,
        censored_before_first: u64,
    ) -> Result<Self> {
        let table = Self {
            rows,
            total,
            censored_before_first,
        };
        table.validate()?;
        Ok(table)
    }

    pub fn rows(&self) -> &[RiskRow<T>] {
        &self.rows
    }

    /// Initial cohort size.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Censorings strictly before the first event time.
    pub fn censored_before_first(&self) -> u64 {
        self.censored_before_first
    }

    /// Number of distinct event times.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn validate(&self) -> Result<()> {
        if self.censored_before_first > self.total {
            return Err(Error::InvalidTable(
                "censored_before_first exceeds total".to_string(),
            ));
        }
        if self.rows.is_empty() {
            if self.censored_before_first != self.total {
                return Err(Error::InvalidTable(
                    "empty table must censor the whole cohort before the first event"
                        .to_string(),
                ));
            }
            return Ok(());
        }

        let mut expected_at_risk = self.total - self.censored_before_first;
        let mut prev_time: Option<T> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if !row.time.is_finite() || row.time < T::zero() {
                return Err(Error::InvalidTable(format!(
                    "row {i}: time must be finite and non-negative"
                )));
            }
            if let Some(prev) = prev_time {
                // Finiteness was checked above, so <= is a total comparison.
                if row.time <= prev {
                    return Err(Error::InvalidTable(format!(
                        "row {i}: times must be strictly increasing"
                    )));
                }
            }
            prev_time = Some(row.time);

            if row.events == 0 {
                return Err(Error::InvalidTable(format!(
                    "row {i}: rows exist only at event times (events >= 1)"
                )));
            }
            if row.at_risk != expected_at_risk {
                return Err(Error::InvalidTable(format!(
                    "row {i}: at_risk {} does not match the n - d - c chain ({})",
                    row.at_risk, expected_at_risk
                )));
            }
            let leaving = row.events + row.censored;
            if leaving > row.at_risk {
                return Err(Error::InvalidTable(format!(
                    "row {i}: events + censored ({leaving}) exceeds at_risk ({})",
                    row.at_risk
                )));
            }
            expected_at_risk = row.at_risk - leaving;
        }
        Ok(())
    }
}

/// Aggregate raw observations into a [`RiskTable`].
///
/// Distinct event times become rows; tied events merge into one row's event
/// count; censorings tied with an event time stay at risk for that event.
/// Datasets with zero events are legal and produce an empty-row table (the
/// estimators then return the trivial curve with survival identically 1).
///
/// Errors with [`Error::EmptyDataset`] on empty input and
/// [`Error::InvalidRecord`] (carrying the record index) on a negative or
/// non-finite time or a status other than 0/1.
pub fn build_risk_table<T: Real>(records: &[ObservationRecord<T>]) -> Result<RiskTable<T>> {
    if records.is_empty() {
        return Err(Error::EmptyDataset);
    }
    for (index, record) in records.iter().enumerate() {
        if let Err(reason) = record.check() {
            return Err(Error::InvalidRecord { index, reason });
        }
    }

    let total = records.len() as u64;
    let mut order: Vec<usize> = (0..records.len()).collect();
    // Times are validated finite, so the comparison is total.
    order.sort_by(|&a, &b| records[a].time.partial_cmp(&records[b].time).unwrap());

    // Group into (time, events, censored) triples over distinct times.
    let mut groups: Vec<(T, u64, u64)> = Vec::new();
    for &idx in &order {
        let record = &records[idx];
        match groups.last_mut() {
            Some((time, events, censored)) if *time == record.time => {
                if record.is_event() {
                    *events += 1;
                } else {
                    *censored += 1;
                }
            }
            _ => {
                let (e, c) = if record.is_event() { (1, 0) } else { (0, 1) };
                groups.push((record.time, e, c));
            }
        }
    }

    // Pure-censoring groups before the first event leave before anyone is
    // at risk for an event; everything after folds into event rows.
    let first_event = groups.iter().position(|&(_, events, _)| events > 0);
    let Some(first_event) = first_event else {
        return RiskTable::from_rows(Vec::new(), total, total);
    };
    let censored_before_first: u64 = groups[..first_event].iter().map(|&(_, _, c)| c).sum();

    let mut rows: Vec<RiskRow<T>> = Vec::new();
    let mut at_risk = total - censored_before_first;
    for &(time, events, censored) in &groups[first_event..] {
        if events > 0 {
            if let Some(prev) = rows.last() {
                at_risk -= prev.events + prev.censored;
            }
            rows.push(RiskRow {
                time,
                at_risk,
                events,
                censored,
            });
        } else {
            // Censored between events (or after the last one): attach to the
            // preceding event row.
            rows.last_mut().expect("first group has events").censored += censored;
        }
    }

    RiskTable::from_rows(rows, total, censored_before_first)
}
