//! JSON and CSV writers.

use besselbound_core::verify::{Outcome, VerificationRecord};
use serde::Serialize;

use crate::format::{num, round_json};

/// Pretty JSON with every float rounded to 15 significant digits and keys in
/// sorted order.
pub fn json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut v = serde_json::to_value(value)?;
    round_json(&mut v);
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

/// Column order of every record table.
pub const RECORD_COLUMNS: [&str; 9] = [
    "inequality_id",
    "nu",
    "beta_or_gamma",
    "n",
    "x",
    "lhs",
    "rhs",
    "margin",
    "pass",
];

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

/// `true`, `false`, or `indeterminate`.
pub fn pass_cell(r: &VerificationRecord) -> &'static str {
    match r.outcome {
        Outcome::Pass => "true",
        Outcome::Fail => "false",
        Outcome::Indeterminate => "indeterminate",
    }
}

/// Records as CSV with [`RECORD_COLUMNS`]. Unused dimensions are empty.
pub fn records_csv(records: &[VerificationRecord]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(RECORD_COLUMNS)?;
    for r in records {
        w.write_record([
            r.inequality_id.as_str().to_string(),
            opt(r.nu),
            opt(r.beta_or_gamma),
            r.n.map(|n| n.to_string()).unwrap_or_default(),
            opt(r.x),
            num(r.lhs),
            num(r.rhs),
            num(r.margin),
            pass_cell(r).to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
}

/// Generic CSV table from a header and pre-formatted rows.
pub fn table_csv<R: AsRef<[String]>>(header: &[&str], rows: &[R]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r.as_ref())?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
}
