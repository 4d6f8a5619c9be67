//! Survival estimation for right-censored data: the Kaplan-Meier estimate,
//! Greenwood's variance, the asymptotic variance of the Greenwood estimate
//! with Wald bands, and a deterministic Monte Carlo harness that validates
//! the analytic variances against empirical ones.
//!
//! The estimator kernels are generic over the floating-point scalar (see
//! [`scalar::Real`]); `f64` is the production lane and the aliases below fix
//! the common instantiations.

pub mod error;
pub mod estimators;
pub mod lifetable;
pub mod quantile;
pub mod scalar;
pub mod simulation;

pub use error::{Error, Result};
pub use estimators::{
    build_curve, critical_value, greenwood, greenwood_sum, greenwood_variance,
    hazard_estimate, increment_variance_sum, km_survival, log_greenwood_variance, wald_ci,
    CiConvention, CurveSample, EstimateCurve, EstimatePoint, HazardEstimate,
};
pub use lifetable::{build_risk_table, ObservationRecord, RiskRow, RiskTable};
pub use quantile::standard_normal_quantile;
pub use scalar::{CompensatedSum, Real};
pub use simulation::{
    generate_dataset, hazard_independence_check, run_validation, Censoring, EvalSummary,
    HazardDiagnostic, SimConfig, SimReport,
};

/// Double-precision lane (the default).
pub type ObservationRecord64 = ObservationRecord<f64>;
pub type RiskRow64 = RiskRow<f64>;
pub type RiskTable64 = RiskTable<f64>;
pub type EstimatePoint64 = EstimatePoint<f64>;
pub type EstimateCurve64 = EstimateCurve<f64>;

/// Single-precision lane.
pub type ObservationRecord32 = ObservationRecord<f32>;
pub type RiskRow32 = RiskRow<f32>;
pub type RiskTable32 = RiskTable<f32>;
pub type EstimatePoint32 = EstimatePoint<f32>;
pub type EstimateCurve32 = EstimateCurve<f32>;
