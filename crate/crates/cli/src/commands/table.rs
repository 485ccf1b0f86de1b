use std::fmt::Write as _;

use dualskew_core::skewgrowth::{skew_growth, CoxeterType, Series};
use serde_json::{json, Value};

use crate::args::Format;
use crate::error::{CliError, CliResult};
use crate::parse::parse_series;

const CLOSED_FORMS: [(&str, &str); 3] = [
    ("A_l", "sum_(k=0..l) (-1)^k (1/l) C(l,k) C(l+k,k+1) t^k"),
    ("B_l", "sum_(k=0..l) (-1)^k C(l,k) C(l+k-1,k) t^k"),
    ("D_l", "sum_(k=0..l) (-1)^k (C(l,k) C(l+k-2,k) + C(l-2,k-2) C(l+k-3,k)) t^k"),
];

const DIHEDRAL_ROW: &str = "1 - p t + (p-1) t^2";

fn rows_b() -> Vec<(String, String)> {
    let mut rows: Vec<(String, String)> =
        CoxeterType::exceptional().into_iter().map(|c| (c.to_string(), skew_growth(c).poly.to_string())).collect();
    rows.push(("I2(p)".into(), DIHEDRAL_ROW.into()));
    rows
}

fn rows_a(series: Series, from: Option<u32>, to: Option<u32>) -> CliResult<Vec<(String, String)>> {
    let from = from.unwrap_or(series.min_rank()).max(series.min_rank());
    let to = to.unwrap_or(from + 8);
    let mut rows = Vec::new();
    for l in from..=to {
        let c = series.at(l)?;
        rows.push((c.to_string(), skew_growth(c).poly.to_string()));
    }
    Ok(rows)
}

fn emit(rows: &[(String, String)], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for (name, poly) in rows {
                let _ = writeln!(out, "{name}: {poly}");
            }
        }
        Format::Json => {
            let v: Vec<Value> = rows.iter().map(|(n, p)| json!({ "type": n, "poly": p })).collect();
            let _ = writeln!(out, "{}", Value::Array(v));
        }
        Format::Csv => {
            out.push_str("type,poly\n");
            for (n, p) in rows {
                let _ = writeln!(out, "{n},{p}");
            }
        }
    }
    out
}

pub fn run(which: &str, family: Option<&str>, from: Option<u32>, to: Option<u32>, format: Format) -> CliResult<String> {
    let rows = match (which.to_ascii_uppercase().as_str(), family) {
        ("A", None) => CLOSED_FORMS.iter().map(|(n, f)| (n.to_string(), f.to_string())).collect(),
        ("A", Some(f)) => rows_a(parse_series(f)?, from, to)?,
        ("B", _) => rows_b(),
        _ => return Err(CliError::usage(format!("unknown table '{which}' (expected A or B)"))),
    };
    Ok(emit(&rows, format))
}
