//! Estimate-table export: CSV (default) and JSON.
//!
//! Numbers render with shortest round-trip decimals, so re-parsing an
//! export reproduces the library values bit for bit. Undefined values
//! serialize as empty CSV fields / JSON `null`, never as NaN text.

use kmvar::{EstimateCurve, RiskTable};
use serde::Serialize;

pub struct ExportMeta {
    pub alpha: f64,
    pub convention: &'static str,
    pub clamp: bool,
    pub input_checksum: String,
    pub records: usize,
}

#[derive(Serialize)]
struct MetaJson<'a> {
    alpha: f64,
    convention: &'a str,
    clamp: bool,
    input_checksum: &'a str,
    records: usize,
    total: u64,
}

#[derive(Serialize)]
struct PointJson {
    t: f64,
    n: u64,
    d: u64,
    c: u64,
    s: f64,
    g: Option<f64>,
    r: Option<f64>,
    ci_lo: Option<f64>,
    ci_hi: Option<f64>,
}

#[derive(Serialize)]
struct ExportJson<'a> {
    meta: MetaJson<'a>,
    points: Vec<PointJson>,
}

fn points(table: &RiskTable<f64>, curve: &EstimateCurve<f64>) -> Vec<PointJson> {
    table
        .rows()
        .iter()
        .zip(&curve.points)
        .map(|(row, point)| PointJson {
            t: row.time,
            n: row.at_risk,
            d: row.events,
            c: row.censored,
            s: point.survival,
            g: point.greenwood,
            r: point.greenwood_var,
            ci_lo: point.ci_lower,
            ci_hi: point.ci_upper,
        })
        .collect()
}

pub fn to_csv(table: &RiskTable<f64>, curve: &EstimateCurve<f64>, meta: &ExportMeta) -> String {
    let mut out = String::new();
    out.push_str(&format!("# alpha={}\n", meta.alpha));
    out.push_str(&format!("# convention={}\n", meta.convention));
    out.push_str(&format!("# clamp={}\n", meta.clamp));
    out.push_str(&format!("# input_checksum={}\n", meta.input_checksum));
    out.push_str(&format!("# records={}\n", meta.records));
    out.push_str(&format!("# total={}\n", table.total()));
    out.push_str("t,n,d,c,s,g,r,ci_lo,ci_hi\n");
    let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
    for p in points(table, curve) {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            p.t,
            p.n,
            p.d,
            p.c,
            p.s,
            opt(p.g),
            opt(p.r),
            opt(p.ci_lo),
            opt(p.ci_hi)
        ));
    }
    out
}

pub fn to_json(table: &RiskTable<f64>, curve: &EstimateCurve<f64>, meta: &ExportMeta) -> String {
    let export = ExportJson {
        meta: MetaJson {
            alpha: meta.alpha,
            convention: meta.convention,
            clamp: meta.clamp,
            input_checksum: &meta.input_checksum,
            records: meta.records,
            total: table.total(),
        },
        points: points(table, curve),
    };
    let mut text = serde_json::to_string_pretty(&export).expect("no non-finite values");
    text.push('\n');
    text
}
