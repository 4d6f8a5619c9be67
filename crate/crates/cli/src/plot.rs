//! The five step plots and their underlying point table.
//!
//! - `survival.svg` — Kaplan-Meier estimate
//! - `greenwood.svg` — Greenwood variance of the survival estimate
//! - `greenwood_variance.svg` — asymptotic variance of the Greenwood estimate
//! - `survival_ci.svg` — survival with the Greenwood Wald band `S ± z sqrt(G)`
//! - `greenwood_ci.svg` — Greenwood estimate with its Wald band
//! - `plot_points.csv` — the numbers behind all five, for external tooling
//!
//! Steps are right-continuous with vertical drops at event times. Bands are
//! truncated at the last defined point and annotated when a singular row
//! makes the tail undefined.

use std::path::Path;

use kmvar::{critical_value, EstimateCurve};

use crate::svg::{render, step_points, Plot, Series};
use crate::CliError;

struct CurveData {
    times: Vec<f64>,
    survival: Vec<f64>,
    greenwood: Vec<f64>,
    greenwood_var: Vec<f64>,
    surv_lo: Vec<f64>,
    surv_hi: Vec<f64>,
    g_lo: Vec<f64>,
    g_hi: Vec<f64>,
    /// Number of leading points with defined variance quantities.
    defined: usize,
    x_end: f64,
    annotation: Option<String>,
}

fn extract(curve: &EstimateCurve<f64>) -> CurveData {
    let z = critical_value(curve.alpha, curve.convention).expect("curve alpha validated");
    let times: Vec<f64> = curve.points.iter().map(|p| p.time).collect();
    let survival: Vec<f64> = curve.points.iter().map(|p| p.survival).collect();
    let defined = curve
        .points
        .iter()
        .take_while(|p| p.greenwood.is_some())
        .count();

    let mut greenwood = Vec::with_capacity(defined);
    let mut greenwood_var = Vec::with_capacity(defined);
    let mut surv_lo = Vec::with_capacity(defined);
    let mut surv_hi = Vec::with_capacity(defined);
    let mut g_lo = Vec::with_capacity(defined);
    let mut g_hi = Vec::with_capacity(defined);
    for point in &curve.points[..defined] {
        let g = point.greenwood.expect("defined prefix");
        let half = z * g.sqrt();
        greenwood.push(g);
        greenwood_var.push(point.greenwood_var.expect("defined prefix"));
        surv_lo.push(point.survival - half);
        surv_hi.push(point.survival + half);
        g_lo.push(point.ci_lower.expect("defined prefix"));
        g_hi.push(point.ci_upper.expect("defined prefix"));
    }

    let x_end = times.last().map_or(1.0, |&t| if t > 0.0 { t * 1.05 } else { 1.0 });
    let annotation = (defined < times.len())
        .then(|| format!("undefined beyond t={}", times[defined]));

    CurveData {
        times,
        survival,
        greenwood,
        greenwood_var,
        surv_lo,
        surv_hi,
        g_lo,
        g_hi,
        defined,
        x_end,
        annotation,
    }
}

fn variance_y_range(values: &[f64], extra: &[f64]) -> (f64, f64) {
    let mut lo: f64 = 0.0;
    let mut hi: f64 = 0.0;
    for &v in values.iter().chain(extra) {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if hi == 0.0 {
        hi = 1.0;
    }
    (if lo < 0.0 { lo * 1.1 } else { 0.0 }, hi * 1.1)
}

/// Render all five SVGs plus the plot-point CSV into `dir`.
pub fn write_plots(curve: &EstimateCurve<f64>, dir: &Path) -> Result<(), CliError> {
    let data = extract(curve);
    let write = |name: &str, contents: String| -> Result<(), CliError> {
        let path = dir.join(name);
        std::fs::write(&path, contents)
            .map_err(|e| CliError::new(2, format!("cannot write {}: {e}", path.display())))
    };

    let survival_steps = step_points(&data.times, &data.survival, data.x_end, 1.0);
    write(
        "survival.svg",
        render(&Plot {
            title: "Kaplan-Meier survival estimate",
            x_label: "time",
            y_label: "S(t)",
            x_range: (0.0, data.x_end),
            y_range: (0.0, 1.05),
            series: vec![Series { points: &survival_steps, color: "#1b6ca8", dashed: false }],
            band: None,
            annotation: None,
        }),
    )?;

    let defined_times = &data.times[..data.defined];
    let greenwood_steps = step_points(defined_times, &data.greenwood, data.x_end, 0.0);
    write(
        "greenwood.svg",
        render(&Plot {
            title: "Greenwood variance of the survival estimate",
            x_label: "time",
            y_label: "G(t)",
            x_range: (0.0, data.x_end),
            y_range: variance_y_range(&data.greenwood, &[]),
            series: vec![Series { points: &greenwood_steps, color: "#b3541e", dashed: false }],
            band: None,
            annotation: data.annotation.clone(),
        }),
    )?;

    let var_steps = step_points(defined_times, &data.greenwood_var, data.x_end, 0.0);
    write(
        "greenwood_variance.svg",
        render(&Plot {
            title: "Asymptotic variance of the Greenwood estimate",
            x_label: "time",
            y_label: "R(t)",
            x_range: (0.0, data.x_end),
            y_range: variance_y_range(&data.greenwood_var, &[]),
            series: vec![Series { points: &var_steps, color: "#5a8a4a", dashed: false }],
            band: None,
            annotation: data.annotation.clone(),
        }),
    )?;

    let band_end = if data.defined == data.times.len() {
        data.x_end
    } else {
        data.times[data.defined]
    };
    let surv_band = (
        step_points(defined_times, &data.surv_lo, band_end, 1.0),
        step_points(defined_times, &data.surv_hi, band_end, 1.0),
    );
    let surv_y_lo = data.surv_lo.iter().cloned().fold(0.0f64, f64::min);
    write(
        "survival_ci.svg",
        render(&Plot {
            title: "Survival estimate with Greenwood Wald band",
            x_label: "time",
            y_label: "S(t)",
            x_range: (0.0, data.x_end),
            y_range: (if surv_y_lo < 0.0 { surv_y_lo * 1.1 } else { 0.0 }, 1.1),
            series: vec![Series { points: &survival_steps, color: "#1b6ca8", dashed: false }],
            band: Some(surv_band),
            annotation: data.annotation.clone(),
        }),
    )?;

    let g_band = (
        step_points(defined_times, &data.g_lo, band_end, 0.0),
        step_points(defined_times, &data.g_hi, band_end, 0.0),
    );
    write(
        "greenwood_ci.svg",
        render(&Plot {
            title: "Greenwood estimate with Wald band",
            x_label: "time",
            y_label: "G(t)",
            x_range: (0.0, data.x_end),
            y_range: variance_y_range(&data.greenwood, &[data.g_lo.clone(), data.g_hi.clone()].concat()),
            series: vec![Series { points: &greenwood_steps, color: "#b3541e", dashed: false }],
            band: Some(g_band),
            annotation: data.annotation.clone(),
        }),
    )?;

    // Underlying numbers for external tooling.
    let mut csv = String::from("t,s,g,r,s_ci_lo,s_ci_hi,g_ci_lo,g_ci_hi\n");
    let opt = |values: &[f64], i: usize| -> String {
        values.get(i).map(|v| v.to_string()).unwrap_or_default()
    };
    for i in 0..data.times.len() {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            data.times[i],
            data.survival[i],
            opt(&data.greenwood, i),
            opt(&data.greenwood_var, i),
            opt(&data.surv_lo, i),
            opt(&data.surv_hi, i),
            opt(&data.g_lo, i),
            opt(&data.g_hi, i),
        ));
    }
    write("plot_points.csv", csv)
}

pub const PLOT_FILES: [&str; 6] = [
    "survival.svg",
    "greenwood.svg",
    "greenwood_variance.svg",
    "survival_ci.svg",
    "greenwood_ci.svg",
    "plot_points.csv",
];

#[cfg(test)]
mod tests {
    use super::*;
    use kmvar::{build_curve, build_risk_table, CiConvention, ObservationRecord};

    fn curve_of(raw: &[(f64, u8)]) -> EstimateCurve<f64> {
        let records: Vec<_> = raw
            .iter()
            .map(|&(t, s)| ObservationRecord::new(t, s))
            .collect();
        let table = build_risk_table(&records).unwrap();
        build_curve(&table, 0.05, CiConvention::TwoSided, false).unwrap()
    }

    #[test]
    fn extract_flags_the_undefined_tail() {
        let curve = curve_of(&[(1.0, 1), (2.0, 1)]);
        let data = extract(&curve);
        assert_eq!(data.defined, 1);
        assert_eq!(data.annotation.as_deref(), Some("undefined beyond t=2"));
        assert_eq!(data.greenwood.len(), 1);
    }

    #[test]
    fn fully_defined_curve_has_no_annotation() {
        let curve = curve_of(&[(1.0, 1), (2.0, 0), (3.0, 1), (4.0, 0)]);
        let data = extract(&curve);
        assert_eq!(data.defined, 2);
        assert!(data.annotation.is_none());
        // Survival band is S +/- z sqrt(G) with the curve's convention.
        let z = critical_value(0.05, CiConvention::TwoSided).unwrap();
        let g: f64 = 21.0 / 256.0;
        assert!((data.surv_lo[1] - (0.375 - z * g.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn writes_all_six_files() {
        let dir = std::env::temp_dir().join(format!("kmvar-plot-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let curve = curve_of(&[(1.0, 1), (2.0, 0), (3.0, 1), (4.0, 0)]);
        write_plots(&curve, &dir).unwrap();
        for name in PLOT_FILES {
            let path = dir.join(name);
            assert!(path.exists(), "{name} missing");
            assert!(std::fs::metadata(&path).unwrap().len() > 0);
        }
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn no_event_dataset_plots_flat_lines() {
        let curve = curve_of(&[(5.0, 0), (7.0, 0)]);
        let data = extract(&curve);
        assert!(data.times.is_empty());
        assert_eq!(data.x_end, 1.0);
        let steps = step_points(&data.times, &data.survival, data.x_end, 1.0);
        assert_eq!(steps, vec![(0.0, 1.0), (1.0, 1.0)]);
    }
}
