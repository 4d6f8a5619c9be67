//! `kmvar` — survival estimation and validation from the command line.
//!
//! Subcommands:
//! - `estimate` — read a `time,status` CSV and write the estimate table
//! - `simulate` — Monte Carlo comparison of empirical vs analytic variances
//! - `plot` — emit five SVG step plots plus their underlying point CSV
//!
//! Exit codes: 0 success, 2 unreadable/unwritable file, 3 malformed record,
//! 64 invalid flags or configuration. Diagnostics go to stderr; data goes to
//! stdout or files.

mod args;
mod dataset;
mod export;
mod plot;
mod report;
mod svg;

use std::path::{Path, PathBuf};

use kmvar::{
    build_curve, build_risk_table, run_validation, Censoring, CiConvention, Error, SimConfig,
};

use args::{parse, ArgSpec};

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: String) -> Self {
        Self { code, message }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self::new(64, message.into())
    }
}

const USAGE: &str = "\
usage: kmvar <command> [options]

commands:
  estimate <input.csv> [--alpha A] [--convention one-sided|two-sided]
           [--clamp] [--format csv|json] [-o FILE]
      Estimate survival, Greenwood variance, its asymptotic variance, and
      Wald intervals from right-censored `time,status` data.

  simulate [--n N] [--reps R] [--event-rate RHO] [--censor none|uniform:MAX|exp:RATE]
           [--seed S] [--eval-times T1,T2,...] [-o FILE]
           [--emit-dataset FILE]
      Monte Carlo comparison of empirical and analytic variances (JSON
      report; one summary line per evaluation time on stderr). With
      --emit-dataset, write a synthetic 9344-subject cohort instead.

  plot <input.csv> [--alpha A] [--convention one-sided|two-sided] [--clamp]
       [--out-dir DIR]
      Emit survival.svg, greenwood.svg, greenwood_variance.svg,
      survival_ci.svg, greenwood_ci.svg, and plot_points.csv.

The KMVAR_OUT_DIR environment variable, when set, is prepended to relative
output paths.

exit codes: 0 ok, 2 unreadable file, 3 malformed record, 64 usage error
";

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&argv) {
        Ok(()) => {}
        Err(err) => {
            eprintln!("kmvar: {}", err.message);
            std::process::exit(err.code);
        }
    }
}

fn run(argv: &[String]) -> Result<(), CliError> {
    let Some(command) = argv.first() else {
        return Err(CliError::usage(format!("missing command\n{USAGE}")));
    };
    match command.as_str() {
        "estimate" => cmd_estimate(&argv[1..]),
        "simulate" => cmd_simulate(&argv[1..]),
        "plot" => cmd_plot(&argv[1..]),
        "-h" | "--help" | "help" => {
            print!("{USAGE}");
            Ok(())
        }
        other => Err(CliError::usage(format!("unknown command '{other}'\n{USAGE}"))),
    }
}

/// Resolve an output path against `KMVAR_OUT_DIR` when it is relative.
fn resolve_output(path: &str) -> PathBuf {
    let path = Path::new(path);
    if path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os("KMVAR_OUT_DIR") {
        Some(base) => Path::new(&base).join(path),
        None => path.to_path_buf(),
    }
}

fn write_or_stdout(target: Option<&str>, contents: &str) -> Result<(), CliError> {
    match target {
        Some(path) => {
            let resolved = resolve_output(path);
            std::fs::write(&resolved, contents)
                .map_err(|e| CliError::new(2, format!("cannot write {}: {e}", resolved.display())))
        }
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn parse_alpha(parsed: &args::Parsed) -> Result<f64, CliError> {
    let raw = parsed.value("--alpha").unwrap_or("0.05");
    let alpha: f64 = raw
        .parse()
        .map_err(|_| CliError::usage(format!("--alpha: '{raw}' is not a number")))?;
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(CliError::usage(format!("--alpha must be in (0, 1), got {raw}")));
    }
    Ok(alpha)
}

fn parse_convention(parsed: &args::Parsed) -> Result<CiConvention, CliError> {
    match parsed.value("--convention").unwrap_or("one-sided") {
        "one-sided" | "one_sided" => Ok(CiConvention::OneSided),
        "two-sided" | "two_sided" => Ok(CiConvention::TwoSided),
        other => Err(CliError::usage(format!(
            "--convention must be one-sided or two-sided, got '{other}'"
        ))),
    }
}

/// Map library errors on parsed records back to input file lines.
fn lib_error(err: Error, lines: &[usize]) -> CliError {
    match err {
        Error::EmptyDataset => CliError::new(3, "no records".to_string()),
        Error::InvalidRecord { index, reason } => CliError::new(
            3,
            format!("line {}: {reason}", lines.get(index).copied().unwrap_or(index + 1)),
        ),
        Error::InvalidAlpha(_) | Error::InvalidConfig(_) => CliError::usage(err.to_string()),
        other => CliError::new(1, other.to_string()),
    }
}

// ── estimate ────────────────────────────────────────────────────────────────

fn cmd_estimate(argv: &[String]) -> Result<(), CliError> {
    const SPEC: ArgSpec = ArgSpec {
        value_flags: &["--alpha", "--convention", "--format", "-o", "--output"],
        switch_flags: &["--clamp"],
    };
    let parsed = parse(argv, &SPEC).map_err(CliError::usage)?;
    if parsed.positional.len() != 1 {
        return Err(CliError::usage("estimate expects exactly one input file".to_string()));
    }
    let alpha = parse_alpha(&parsed)?;
    let convention = parse_convention(&parsed)?;
    let clamp = parsed.switch("--clamp");
    let format = parsed.value("--format").unwrap_or("csv");
    if format != "csv" && format != "json" {
        return Err(CliError::usage(format!("--format must be csv or json, got '{format}'")));
    }

    let loaded = dataset::read_dataset(&parsed.positional[0])?;
    let table = build_risk_table(&loaded.records).map_err(|e| lib_error(e, &loaded.lines))?;
    let curve = build_curve(&table, alpha, convention, clamp)
        .map_err(|e| lib_error(e, &loaded.lines))?;

    let meta = export::ExportMeta {
        alpha,
        convention: convention.as_str(),
        clamp,
        input_checksum: loaded.checksum,
        records: loaded.records.len(),
    };
    let contents = match format {
        "json" => export::to_json(&table, &curve, &meta),
        _ => export::to_csv(&table, &curve, &meta),
    };
    write_or_stdout(parsed.value("-o").or(parsed.value("--output")), &contents)
}

// ── simulate ────────────────────────────────────────────────────────────────

fn parse_censoring(raw: &str) -> Result<Censoring, CliError> {
    if raw == "none" {
        return Ok(Censoring::None);
    }
    if let Some(value) = raw.strip_prefix("uniform:") {
        let max: f64 = value
            .parse()
            .map_err(|_| CliError::usage(format!("--censor: bad uniform bound '{value}'")))?;
        return Ok(Censoring::Uniform { max });
    }
    if let Some(value) = raw.strip_prefix("exp:") {
        let rate: f64 = value
            .parse()
            .map_err(|_| CliError::usage(format!("--censor: bad exponential rate '{value}'")))?;
        return Ok(Censoring::Exponential { rate });
    }
    Err(CliError::usage(format!(
        "--censor must be none, uniform:MAX, or exp:RATE, got '{raw}'"
    )))
}

fn cmd_simulate(argv: &[String]) -> Result<(), CliError> {
    const SPEC: ArgSpec = ArgSpec {
        value_flags: &[
            "--n",
            "--reps",
            "--event-rate",
            "--censor",
            "--seed",
            "--eval-times",
            "-o",
            "--output",
            "--emit-dataset",
        ],
        switch_flags: &[],
    };
    let parsed = parse(argv, &SPEC).map_err(CliError::usage)?;
    if !parsed.positional.is_empty() {
        return Err(CliError::usage(format!(
            "simulate takes no positional arguments, got '{}'",
            parsed.positional[0]
        )));
    }

    let number = |flag: &str, default: &str| -> Result<f64, CliError> {
        let raw = parsed.value(flag).unwrap_or(default);
        raw.parse()
            .map_err(|_| CliError::usage(format!("{flag}: '{raw}' is not a number")))
    };
    let seed = {
        let raw = parsed.value("--seed").unwrap_or("42");
        raw.parse::<u64>()
            .map_err(|_| CliError::usage(format!("--seed: '{raw}' is not an unsigned integer")))?
    };

    if let Some(path) = parsed.value("--emit-dataset") {
        let cohort = dataset::synthetic_cohort(seed);
        let resolved = resolve_output(path);
        dataset::write_dataset(&resolved, &cohort)?;
        eprintln!("wrote {} records to {}", cohort.len(), resolved.display());
        return Ok(());
    }

    let eval_times = match parsed.value("--eval-times") {
        Some(raw) => {
            let times: Result<Vec<f64>, _> = raw.split(',').map(|t| t.trim().parse()).collect();
            Some(times.map_err(|_| {
                CliError::usage(format!("--eval-times: '{raw}' is not a comma-separated list"))
            })?)
        }
        None => None,
    };

    let config = SimConfig {
        subjects: number("--n", "500")? as usize,
        event_rate: number("--event-rate", "1.0")?,
        censoring: parse_censoring(parsed.value("--censor").unwrap_or("none"))?,
        reps: number("--reps", "1000")? as usize,
        seed,
        eval_times,
    };
    let report = run_validation(&config).map_err(|e| lib_error(e, &[]))?;

    for line in report::summary_lines(&report) {
        eprintln!("{line}");
    }
    write_or_stdout(
        parsed.value("-o").or(parsed.value("--output")),
        &report::to_json(&config, &report),
    )
}

// ── plot ────────────────────────────────────────────────────────────────────

fn cmd_plot(argv: &[String]) -> Result<(), CliError> {
    const SPEC: ArgSpec = ArgSpec {
        value_flags: &["--alpha", "--convention", "--out-dir"],
        switch_flags: &["--clamp"],
    };
    let parsed = parse(argv, &SPEC).map_err(CliError::usage)?;
    if parsed.positional.len() != 1 {
        return Err(CliError::usage("plot expects exactly one input file".to_string()));
    }
    let alpha = parse_alpha(&parsed)?;
    let convention = parse_convention(&parsed)?;
    let clamp = parsed.switch("--clamp");

    let loaded = dataset::read_dataset(&parsed.positional[0])?;
    let table = build_risk_table(&loaded.records).map_err(|e| lib_error(e, &loaded.lines))?;
    let curve = build_curve(&table, alpha, convention, clamp)
        .map_err(|e| lib_error(e, &loaded.lines))?;

    let dir = resolve_output(parsed.value("--out-dir").unwrap_or("."));
    std::fs::create_dir_all(&dir)
        .map_err(|e| CliError::new(2, format!("cannot create {}: {e}", dir.display())))?;
    plot::write_plots(&curve, &dir)?;
    eprintln!("wrote {} files to {}", plot::PLOT_FILES.len(), dir.display());
    Ok(())
}
