//! Machine-readable run reports.
//!
//! A report is a flat list of records, one per measured quantity. Records
//! that carry a tolerance also carry a pass/fail verdict; informational
//! records (raw amplitudes, probabilities) leave both empty. Every record
//! repeats the seed and tool version so that a single row extracted from a
//! larger archive still identifies the run that produced it.
//!
//! Rendering is deterministic: fields appear in a fixed order and all
//! numbers use 17 significant digits. The per-record `elapsed_ms` field is
//! the only value that varies between identical runs; it is rendered last
//! so consumers can strip it with plain text surgery.

use sha2::{Digest, Sha256};

use crate::fmt::{json_str, sig17};

pub const TOOL_NAME: &str = "synchrony";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// One measured quantity, with an optional tolerance verdict.
pub struct Record {
    pub op: &'static str,
    pub metric: String,
    pub value: f64,
    pub tolerance: Option<f64>,
    pub pass: Option<bool>,
}

impl Record {
    pub fn info(op: &'static str, metric: impl Into<String>, value: f64) -> Self {
        Record {
            op,
            metric: metric.into(),
            value,
            tolerance: None,
            pass: None,
        }
    }

    /// A check that passes when `value` stays below `tolerance`.
    pub fn below(
        op: &'static str,
        metric: impl Into<String>,
        value: f64,
        tolerance: f64,
    ) -> Self {
        Record {
            op,
            metric: metric.into(),
            value,
            tolerance: Some(tolerance),
            pass: Some(value < tolerance),
        }
    }

    /// A check that passes when `value` exceeds `threshold` — used for
    /// counterexample gaps that are required to be *large*.
    pub fn above(
        op: &'static str,
        metric: impl Into<String>,
        value: f64,
        threshold: f64,
    ) -> Self {
        Record {
            op,
            metric: metric.into(),
            value,
            tolerance: Some(threshold),
            pass: Some(value > threshold),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

pub struct Report {
    pub seed: u64,
    pub inputs_digest: String,
    pub records: Vec<Record>,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass != Some(false))
    }

    /// The failing record with the largest distance from its tolerance.
    pub fn worst_failure(&self) -> Option<&Record> {
        self.records
            .iter()
            .filter(|r| r.pass == Some(false))
            .max_by(|a, b| {
                let da = (a.value - a.tolerance.unwrap_or(0.0)).abs();
                let db = (b.value - b.tolerance.unwrap_or(0.0)).abs();
                da.total_cmp(&db)
            })
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => self.render_json(),
            ReportFormat::Csv => self.render_csv(),
        }
    }

    fn render_json(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{{\"tool\":{},\"version\":{},\"seed\":{},\"records\":[",
            json_str(TOOL_NAME),
            json_str(TOOL_VERSION),
            self.seed
        ));
        for (i, r) in self.records.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let tolerance = match r.tolerance {
                Some(t) => sig17(t),
                None => "null".into(),
            };
            let pass = match r.pass {
                Some(true) => "true",
                Some(false) => "false",
                None => "null",
            };
            out.push_str(&format!(
                "{{\"op\":{},\"inputs_digest\":{},\"metric\":{},\"value\":{},\
                 \"tolerance\":{},\"pass\":{},\"seed\":{},\"version\":{},\"elapsed_ms\":{:.3}}}",
                json_str(r.op),
                json_str(&self.inputs_digest),
                json_str(&r.metric),
                sig17(r.value),
                tolerance,
                pass,
                self.seed,
                json_str(TOOL_VERSION),
                self.elapsed_ms
            ));
        }
        out.push_str("]}\n");
        out
    }

    fn render_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record([
            "op",
            "inputs_digest",
            "metric",
            "value",
            "tolerance",
            "pass",
            "seed",
            "version",
            "elapsed_ms",
        ])
        .expect("csv header");
        for r in &self.records {
            w.write_record([
                r.op.to_string(),
                self.inputs_digest.clone(),
                r.metric.to_string(),
                sig17(r.value),
                r.tolerance.map(sig17).unwrap_or_default(),
                r.pass.map(|p| p.to_string()).unwrap_or_default(),
                self.seed.to_string(),
                TOOL_VERSION.to_string(),
                format!("{:.3}", self.elapsed_ms),
            ])
            .expect("csv record");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
    }
}

/// Print a report to standard output and, when a path is configured,
/// write the identical bytes there as well.
pub fn emit(
    report: &Report,
    format: ReportFormat,
    path: Option<&std::path::Path>,
) -> Result<(), crate::CliError> {
    let text = report.render(format);
    print!("{text}");
    if let Some(p) = path {
        std::fs::write(p, &text).map_err(|e| {
            crate::CliError::Input(format!("cannot write report to `{}`: {e}", p.display()))
        })?;
    }
    Ok(())
}

/// Short content digest identifying the inputs of a run: the scenario bytes
/// (or rendered flag values), the operation name, and the seed.
pub fn inputs_digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    let hex = format!("{:x}", h.finalize());
    format!("sha256:{}", &hex[..16])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report {
            seed: 42,
            inputs_digest: inputs_digest(&[b"x"]),
            records: vec![
                Record::info("demo", "raw", 0.5),
                Record::below("demo", "gap", 1e-12, 1e-10),
                Record::above("demo", "excess", 0.37, 0.01),
            ],
            elapsed_ms: 1.25,
        }
    }

    #[test]
    fn verdicts_follow_their_direction() {
        let r = sample();
        assert!(r.all_pass());
        assert!(Record::below("d", "m", 2e-10, 1e-10).pass == Some(false));
        assert!(Record::above("d", "m", 1e-3, 1e-2).pass == Some(false));
    }

    #[test]
    fn json_parses_and_keeps_field_order() {
        let text = sample().render(ReportFormat::Json);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["records"].as_array().unwrap().len(), 3);
        assert_eq!(doc["records"][1]["pass"], serde_json::Value::Bool(true));
        let stripped: &str = text.split("\"elapsed_ms\"").next().unwrap();
        assert!(stripped.contains("\"seed\":42"));
    }

    #[test]
    fn csv_round_trips_byte_identically() {
        let text = sample().render(ReportFormat::Csv);
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .from_reader(text.as_bytes());
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        for rec in reader.records() {
            w.write_record(&rec.unwrap()).unwrap();
        }
        let again = String::from_utf8(w.into_inner().unwrap()).unwrap();
        assert_eq!(text, again);
    }

    #[test]
    fn digest_is_stable_and_order_sensitive() {
        assert_eq!(inputs_digest(&[b"a", b"b"]), inputs_digest(&[b"a", b"b"]));
        assert_ne!(inputs_digest(&[b"a", b"b"]), inputs_digest(&[b"b", b"a"]));
        assert_ne!(inputs_digest(&[b"ab"]), inputs_digest(&[b"a", b"b"]));
    }
}
