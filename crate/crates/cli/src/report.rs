//! Simulation report JSON schema and the per-time summary lines.

use kmvar::{Censoring, SimConfig, SimReport};
use serde::Serialize;

#[derive(Serialize)]
struct ConfigJson<'a> {
    n: usize,
    reps: usize,
    event_rate: f64,
    censor: &'a str,
    seed: u64,
    eval_times: Vec<f64>,
}

#[derive(Serialize)]
struct EvalJson {
    t: f64,
    emp_var_s: f64,
    mean_g: Option<f64>,
    emp_var_g: Option<f64>,
    mean_r: Option<f64>,
    ratio_g: Option<f64>,
    ratio_r: Option<f64>,
    defined_count: usize,
}

#[derive(Serialize)]
struct HazardJson {
    bin_a: [f64; 2],
    bin_b: [f64; 2],
    correlation: Option<f64>,
    pairs: usize,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    config: ConfigJson<'a>,
    eval: Vec<EvalJson>,
    hazard_diagnostic: Option<HazardJson>,
}

pub fn format_censoring(censoring: Censoring) -> String {
    match censoring {
        Censoring::None => "none".to_string(),
        Censoring::Uniform { max } => format!("uniform:{max}"),
        Censoring::Exponential { rate } => format!("exp:{rate}"),
    }
}

pub fn to_json(config: &SimConfig, report: &SimReport) -> String {
    let censor = format_censoring(config.censoring);
    let json = ReportJson {
        config: ConfigJson {
            n: config.subjects,
            reps: config.reps,
            event_rate: config.event_rate,
            censor: &censor,
            seed: config.seed,
            eval_times: report.eval.iter().map(|e| e.time).collect(),
        },
        eval: report
            .eval
            .iter()
            .map(|e| EvalJson {
                t: e.time,
                emp_var_s: e.emp_var_survival,
                mean_g: e.mean_greenwood,
                emp_var_g: e.emp_var_greenwood,
                mean_r: e.mean_greenwood_var,
                ratio_g: e.ratio_greenwood,
                ratio_r: e.ratio_greenwood_var,
                defined_count: e.defined_count,
            })
            .collect(),
        hazard_diagnostic: report.hazard.as_ref().map(|h| HazardJson {
            bin_a: [h.bin_a.0, h.bin_a.1],
            bin_b: [h.bin_b.0, h.bin_b.1],
            correlation: h.correlation,
            pairs: h.pairs,
        }),
    };
    let mut text = serde_json::to_string_pretty(&json).expect("no non-finite values");
    text.push('\n');
    text
}

/// One human-readable line per evaluation time.
pub fn summary_lines(report: &SimReport) -> Vec<String> {
    let fmt = |v: Option<f64>| v.map(|x| format!("{x:.4}")).unwrap_or_else(|| "n/a".to_string());
    report
        .eval
        .iter()
        .map(|e| {
            format!(
                "t={:.6} ratio_g={} ratio_r={} defined={}",
                e.time,
                fmt(e.ratio_greenwood),
                fmt(e.ratio_greenwood_var),
                e.defined_count
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn censoring_round_trips_the_flag_syntax() {
        assert_eq!(format_censoring(Censoring::None), "none");
        assert_eq!(format_censoring(Censoring::Uniform { max: 3.0 }), "uniform:3");
        assert_eq!(format_censoring(Censoring::Exponential { rate: 0.5 }), "exp:0.5");
    }

    #[test]
    fn report_json_is_valid_and_complete() {
        let config = SimConfig {
            subjects: 50,
            event_rate: 1.0,
            censoring: Censoring::Uniform { max: 3.0 },
            reps: 20,
            seed: 7,
            eval_times: None,
        };
        let report = kmvar::run_validation(&config).unwrap();
        let text = to_json(&config, &report);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["config"]["n"], 50);
        assert_eq!(
            value["eval"].as_array().unwrap().len(),
            report.eval.len()
        );
        assert_eq!(summary_lines(&report).len(), report.eval.len());
    }
}
