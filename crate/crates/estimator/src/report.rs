//! Result rows and their CSV/JSON serialization.
//!
//! Displayed numbers are rounded to two significant figures; the JSON form
//! keeps full precision. Output is byte-stable: fixed column order, fixed
//! formatting, LF line endings.

use serde::{Deserialize, Serialize};

use crate::optimizer::EstimateReport;

/// One table row in the layout of the published result tables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: u64,
    pub n_e: u64,
    pub d1: u32,
    pub d2: u32,
    pub delta_off: u32,
    pub c_mul: u32,
    pub c_exp: u32,
    pub c_sep: u32,
    pub retry_risk: f64,
    pub volume_per_run_mqd: f64,
    pub expected_volume_mqd: f64,
    pub megaqubits: f64,
    pub hours_per_run: f64,
}

pub const CSV_HEADER: &str = "n,n_e,d1,d2,delta_off,c_mul,c_exp,c_sep,retry_risk,volume_per_run_mqd,expected_volume_mqd,megaqubits,hours_per_run";

impl From<&EstimateReport> for ReportRow {
    fn from(r: &EstimateReport) -> Self {
        ReportRow {
            n: r.problem.n,
            n_e: r.problem.n_e,
            d1: r.params.d1,
            d2: r.params.d2,
            delta_off: r.params.delta_off,
            c_mul: r.params.c_mul,
            c_exp: r.params.c_exp,
            c_sep: r.params.c_sep,
            retry_risk: r.physical.retry_risk,
            volume_per_run_mqd: r.physical.volume_per_run,
            expected_volume_mqd: r.physical.expected_volume,
            megaqubits: r.physical.physical_qubits as f64 / 1e6,
            hours_per_run: r.physical.runtime_seconds / 3600.0,
        }
    }
}

/// Round to two significant figures and render without exponent notation.
pub fn sig2(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x > 0.0 { "inf".to_string() } else { "-inf".to_string() };
    }
    let neg = x < 0.0;
    let x = x.abs();
    let mut exp = x.log10().floor() as i32;
    let mut mantissa = (x / 10f64.powi(exp - 1)).round();
    if mantissa >= 100.0 {
        mantissa /= 10.0;
        exp += 1;
    }
    let value = mantissa * 10f64.powi(exp - 1);
    let decimals = (1 - exp).max(0) as usize;
    let s = format!("{value:.decimals$}");
    if neg { format!("-{s}") } else { s }
}

impl ReportRow {
    /// CSV line with two-significant-figure numeric fields.
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.n_e,
            self.d1,
            self.d2,
            self.delta_off,
            self.c_mul,
            self.c_exp,
            self.c_sep,
            sig2(self.retry_risk),
            sig2(self.volume_per_run_mqd),
            sig2(self.expected_volume_mqd),
            sig2(self.megaqubits),
            sig2(self.hours_per_run),
        )
    }
}

pub fn to_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv_line());
        out.push('\n');
    }
    out
}

pub fn to_json(rows: &[ReportRow]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig2_formatting() {
        assert_eq!(sig2(5.907), "5.9");
        assert_eq!(sig2(0.456), "0.46");
        assert_eq!(sig2(0.31), "0.31");
        assert_eq!(sig2(20.3), "20");
        assert_eq!(sig2(1734.0), "1700");
        assert_eq!(sig2(0.0), "0");
        assert_eq!(sig2(0.0999), "0.10");
        assert_eq!(sig2(99.6), "100");
        assert_eq!(sig2(112.0), "110");
        assert_eq!(sig2(0.001234), "0.0012");
    }

    fn sample_row() -> ReportRow {
        ReportRow {
            n: 2048,
            n_e: 3029,
            d1: 15,
            d2: 27,
            delta_off: 4,
            c_mul: 5,
            c_exp: 5,
            c_sep: 1024,
            retry_risk: 0.3121,
            volume_per_run_mqd: 4.132,
            expected_volume_mqd: 6.007,
            megaqubits: 21.61,
            hours_per_run: 5.076,
        }
    }

    #[test]
    fn csv_is_stable_and_headed() {
        let rows = vec![sample_row()];
        let a = to_csv(&rows);
        let b = to_csv(&rows);
        assert_eq!(a, b);
        assert!(a.starts_with(CSV_HEADER));
        assert!(a.ends_with('\n'));
        assert!(!a.contains('\r'));
        assert_eq!(
            a.lines().nth(1).unwrap(),
            "2048,3029,15,27,4,5,5,1024,0.31,4.1,6.0,22,5.1"
        );
    }

    #[test]
    fn json_round_trips() {
        let rows = vec![sample_row()];
        let text = to_json(&rows);
        let back: Vec<ReportRow> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rows);
    }
}
