//! Dataset I/O: the `time,status` CSV format, input checksumming, and the
//! bundled synthetic cohort generator.

use std::path::Path;

use kmvar::ObservationRecord;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::CliError;

/// FNV-1a 64-bit hash, used to stamp outputs with their input's checksum.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &byte in bytes {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x100_0000_01b3);
    }
    hash
}

#[derive(Debug)]
pub struct LoadedDataset {
    pub records: Vec<ObservationRecord<f64>>,
    /// 1-based file line of each record (the header is line 1).
    pub lines: Vec<usize>,
    pub checksum: String,
}

/// Read a `time,status` CSV. UTF-8, comma-separated, LF or CRLF; one record
/// per line; blank lines are skipped.
pub fn read_dataset(path: &str) -> Result<LoadedDataset, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::new(2, format!("cannot read {path}: {e}")))?;
    parse_dataset(&bytes)
}

pub fn parse_dataset(bytes: &[u8]) -> Result<LoadedDataset, CliError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| CliError::new(3, "input is not valid UTF-8".to_string()))?;
    let checksum = format!("fnv1a64:{:016x}", fnv1a64(bytes));

    let mut records = Vec::new();
    let mut lines = Vec::new();
    let mut saw_header = false;
    for (i, raw_line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw_line.trim_end_matches('\r');
        let line = if line_no == 1 {
            line.trim_start_matches('\u{feff}')
        } else {
            line
        };
        if line.trim().is_empty() {
            continue;
        }
        if !saw_header {
            if line.trim() != "time,status" {
                return Err(CliError::new(
                    3,
                    format!("line {line_no}: expected header 'time,status'"),
                ));
            }
            saw_header = true;
            continue;
        }

        let mut fields = line.split(',');
        let (Some(time_text), Some(status_text), None) =
            (fields.next(), fields.next(), fields.next())
        else {
            return Err(CliError::new(
                3,
                format!("line {line_no}: expected two comma-separated fields"),
            ));
        };
        let time: f64 = time_text.trim().parse().map_err(|_| {
            CliError::new(3, format!("line {line_no}: invalid time '{}'", time_text.trim()))
        })?;
        let status: u8 = match status_text.trim() {
            "0" => 0,
            "1" => 1,
            other => {
                return Err(CliError::new(
                    3,
                    format!("line {line_no}: status '{other}' is not 0 or 1"),
                ));
            }
        };
        if !time.is_finite() || time < 0.0 {
            return Err(CliError::new(
                3,
                format!("line {line_no}: time must be finite and non-negative"),
            ));
        }
        records.push(ObservationRecord::new(time, status));
        lines.push(line_no);
    }

    if !saw_header {
        return Err(CliError::new(3, "line 1: expected header 'time,status'".to_string()));
    }
    if records.is_empty() {
        return Err(CliError::new(3, "no records".to_string()));
    }
    Ok(LoadedDataset { records, lines, checksum })
}

pub fn write_dataset(path: &Path, records: &[ObservationRecord<f64>]) -> Result<(), CliError> {
    let mut out = String::with_capacity(records.len() * 16 + 16);
    out.push_str("time,status\n");
    for record in records {
        out.push_str(&format!("{},{}\n", record.time, record.status));
    }
    std::fs::write(path, out)
        .map_err(|e| CliError::new(2, format!("cannot write {}: {e}", path.display())))
}

/// Synthetic stand-in cohort: 9344 subjects with a low constant event rate
/// and heavy late censoring (an administrative window plus light dropout),
/// shaped like a large placebo arm followed for a few years.
pub const SYNTHETIC_COHORT_SIZE: usize = 9344;

pub fn synthetic_cohort(seed: u64) -> Vec<ObservationRecord<f64>> {
    const EVENT_RATE: f64 = 0.025; // per year
    const DROPOUT_RATE: f64 = 0.008;
    const ADMIN_START: f64 = 3.5;
    const ADMIN_END: f64 = 5.4;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::MAX); // keep clear of simulation replication streams

    (0..SYNTHETIC_COHORT_SIZE)
        .map(|_| {
            let exp = |rng: &mut ChaCha8Rng, rate: f64| -> f64 {
                let u: f64 = rng.random();
                -(1.0 - u).ln() / rate
            };
            let event = exp(&mut rng, EVENT_RATE);
            let admin = ADMIN_START + rng.random::<f64>() * (ADMIN_END - ADMIN_START);
            let dropout = exp(&mut rng, DROPOUT_RATE);
            let censor = admin.min(dropout);
            if event <= censor {
                ObservationRecord::event(event)
            } else {
                ObservationRecord::censored(censor)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv_known_vectors() {
        assert_eq!(fnv1a64(b""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a64(b"a"), 0xaf63_dc4c_8601_ec8c);
    }

    #[test]
    fn parses_crlf_and_blank_lines() {
        let data = b"time,status\r\n1.5,1\r\n\r\n2,0\r\n";
        let loaded = parse_dataset(data).unwrap();
        assert_eq!(loaded.records.len(), 2);
        assert_eq!(loaded.records[0].time, 1.5);
        assert_eq!(loaded.records[0].status, 1);
        assert_eq!(loaded.lines, vec![2, 4]);
    }

    #[test]
    fn rejects_bad_header_status_and_time() {
        assert!(parse_dataset(b"t,s\n1,1\n").unwrap_err().message.contains("header"));
        let err = parse_dataset(b"time,status\n1,2\n").unwrap_err();
        assert_eq!(err.code, 3);
        assert!(err.message.contains("line 2"));
        let err = parse_dataset(b"time,status\n-1,1\n").unwrap_err();
        assert!(err.message.contains("line 2"));
        let err = parse_dataset(b"time,status\nabc,1\n").unwrap_err();
        assert!(err.message.contains("invalid time"));
    }

    #[test]
    fn header_only_is_no_records() {
        let err = parse_dataset(b"time,status\n").unwrap_err();
        assert_eq!(err.code, 3);
        assert_eq!(err.message, "no records");
    }

    #[test]
    fn synthetic_cohort_shape() {
        let cohort = synthetic_cohort(42);
        assert_eq!(cohort.len(), SYNTHETIC_COHORT_SIZE);
        let events = cohort.iter().filter(|r| r.is_event()).count();
        let fraction = events as f64 / cohort.len() as f64;
        // Low event rate, heavy late censoring.
        assert!(fraction > 0.05 && fraction < 0.20, "event fraction {fraction}");
        assert!(cohort.iter().all(|r| r.time > 0.0 && r.time < 5.4 + 1e-9));
        assert_eq!(synthetic_cohort(42), cohort);
    }
}
