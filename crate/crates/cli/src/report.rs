use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undecided => "undecided",
            Status::Skipped => "skipped",
        }
    }
}

/// One outcome per (check, type).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    #[serde(rename = "type")]
    pub ctype: String,
    pub rank: Option<u32>,
    pub status: Status,
    pub details: Value,
}

impl Report {
    pub fn new(check: &str, ctype: impl ToString, rank: Option<u32>, status: Status, details: Value) -> Report {
        Report { check: check.to_string(), ctype: ctype.to_string(), rank, status, details }
    }

    pub fn from_bool(check: &str, ctype: impl ToString, rank: Option<u32>, ok: bool, details: Value) -> Report {
        let status = if ok { Status::Pass } else { Status::Fail };
        Report::new(check, ctype, rank, status, details)
    }
}

/// 1 if anything failed, else 2 if anything is undecided, else 0.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else if reports.iter().any(|r| r.status == Status::Undecided) {
        2
    } else {
        0
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn details_text(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn render(reports: &[Report], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = serde_json::to_string_pretty(reports).unwrap_or_default();
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("check,type,rank,status,details\n");
            for r in reports {
                let rank = r.rank.map(|k| k.to_string()).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    csv_field(&r.check),
                    csv_field(&r.ctype),
                    rank,
                    r.status.as_str(),
                    csv_field(&details_text(&r.details))
                );
            }
        }
        Format::Text => {
            for r in reports {
                let line = format!(
                    "{:<9} {:<18} {:<8} {}",
                    r.status.as_str().to_uppercase(),
                    r.check,
                    r.ctype,
                    details_text(&r.details)
                );
                out.push_str(line.trim_end());
                out.push('\n');
            }
            let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
            let _ = writeln!(
                out,
                "{} checks: {} pass, {} fail, {} undecided, {} skipped",
                reports.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Undecided),
                count(Status::Skipped)
            );
        }
    }
    out
}
