use std::io::{self, Write};

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;

use crate::prime_sequence::{SequenceRecord, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// One D_n per line.
    Plain,
    /// Array of objects; every number is a decimal string.
    Json,
    /// Header `n,p_n,P_n,D_n`.
    Csv,
}

#[derive(Serialize)]
struct JsonRecord {
    n: String,
    p_n: String,
    #[serde(rename = "P_n")]
    shift_product: String,
    #[serde(rename = "D_n")]
    value: String,
}

impl From<&SequenceRecord> for JsonRecord {
    fn from(r: &SequenceRecord) -> Self {
        Self {
            n: r.n.to_string(),
            p_n: r.prime.to_string(),
            shift_product: r.shift_product.to_string(),
            value: r.value.to_string(),
        }
    }
}

pub fn write_records(
    out: &mut dyn Write,
    records: &[SequenceRecord],
    format: OutputFormat,
) -> io::Result<()> {
    match format {
        OutputFormat::Plain => {
            for r in records {
                writeln!(out, "{}", r.value)?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,p_n,P_n,D_n")?;
            for r in records {
                writeln!(out, "{},{},{},{}", r.n, r.prime, r.shift_product, r.value)?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<JsonRecord> = records.iter().map(JsonRecord::from).collect();
            serde_json::to_writer(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// `(n, expected, got)` for each of the first `min(len, known.len())` records
/// that differs from `known`.
pub(crate) fn known_mismatches(
    records: &[SequenceRecord],
    known: &[u64],
) -> Vec<(usize, u64, BigInt)> {
    records
        .iter()
        .zip(known)
        .filter(|(r, &k)| r.value != BigInt::from(k))
        .map(|(r, &k)| (r.n, k, r.value.clone()))
        .collect()
}

fn status(ok: bool, color: bool) -> &'static str {
    match (ok, color) {
        (true, false) => "agree",
        (false, false) => "DIVERGE",
        (true, true) => "\x1b[32magree\x1b[0m",
        (false, true) => "\x1b[31mDIVERGE\x1b[0m",
    }
}

pub(crate) fn write_report(
    out: &mut dyn Write,
    report: &VerificationReport,
    has_reference: bool,
    color: bool,
) -> io::Result<()> {
    let count = report.terms.len();
    let first_bad = |f: fn(&crate::prime_sequence::TermCheck) -> bool| {
        report.terms.iter().find(|t| !f(t)).map(|t| t.n)
    };
    let line = |out: &mut dyn Write, label: &str, checked: usize, bad: Option<usize>| match bad {
        None => writeln!(
            out,
            "{label:<24} {checked:>6} terms  {}",
            status(true, color)
        ),
        Some(n) => writeln!(
            out,
            "{label:<24} {checked:>6} terms  {} (first at n={n})",
            status(false, color)
        ),
    };

    writeln!(out, "verify n=1..{count}")?;
    line(
        out,
        "recurrence vs direct",
        count,
        first_bad(|t| t.direct_ok()),
    )?;
    line(
        out,
        "recurrence vs bareiss",
        report.oracle_checked(),
        first_bad(|t| t.oracle_ok()),
    )?;
    if has_reference {
        line(
            out,
            "recurrence vs b-file",
            report.reference_checked(),
            first_bad(|t| t.reference_ok()),
        )?;
    }
    match report.first_failure() {
        None => writeln!(out, "PASS")?,
        Some(t) => writeln!(out, "FAIL at n={}", t.n)?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prime_sequence::prime_det_sequence;

    fn render(format: OutputFormat, count: usize) -> String {
        let mut buf = Vec::new();
        write_records(&mut buf, &prime_det_sequence(count), format).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_layout() {
        let s = render(OutputFormat::Csv, 4);
        assert_eq!(s, "n,p_n,P_n,D_n\n1,2,1,2\n2,3,2,5\n3,5,8,22\n4,7,48,140\n");
    }

    #[test]
    fn json_fields_are_strings() {
        let s = render(OutputFormat::Json, 2);
        assert_eq!(
            s.trim(),
            r#"[{"n":"1","p_n":"2","P_n":"1","D_n":"2"},{"n":"2","p_n":"3","P_n":"2","D_n":"5"}]"#
        );
        assert_eq!(render(OutputFormat::Json, 0).trim(), "[]");
    }

    #[test]
    fn mismatch_detection() {
        let recs = prime_det_sequence(8);
        assert!(known_mismatches(&recs, &[2, 5, 22, 140, 1448, 17856]).is_empty());
        let bad = known_mismatches(&recs, &[2, 5, 23]);
        assert_eq!(bad, vec![(3, 23, BigInt::from(22))]);
    }
}
