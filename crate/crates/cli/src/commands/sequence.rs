use std::fmt::Write as _;

use dualskew_core::roots::smallest_root_sequence;
use dualskew_core::skewgrowth::Series;
use serde_json::{json, Value};

use super::roots::root_json;
use crate::args::Format;
use crate::error::{CliError, CliResult};
use crate::parse::{parse_eps, parse_series};

pub struct SequenceArgs<'a> {
    pub family: &'a str,
    pub from: Option<u32>,
    pub to: u32,
    pub eps: &'a str,
    pub sandwich: bool,
    pub format: Format,
}

/// Smallest-root table; exit code 1 when monotonicity or the sandwich fails.
pub fn run(a: &SequenceArgs) -> CliResult<(String, i32)> {
    let series = parse_series(a.family)?;
    if a.sandwich && series != Series::D {
        return Err(CliError::usage("--sandwich applies to the D family only"));
    }
    let eps = parse_eps(a.eps)?;
    if a.to < series.min_rank() {
        return Err(CliError::usage(format!("--to must be at least {} for {series}", series.min_rank())));
    }
    let rep = smallest_root_sequence(series, a.to, &eps)?;
    let from = a.from.unwrap_or(0);
    let sandwich = if a.sandwich { rep.sandwich.clone() } else { None };
    let ok = rep.decreasing && sandwich.as_ref().map_or(true, |s| s.iter().all(|&b| b));

    let rows: Vec<(usize, &(u32, _))> = rep.entries.iter().enumerate().filter(|(_, (l, _))| *l >= from).collect();
    let mut out = String::new();
    match a.format {
        Format::Text => {
            for (i, (l, b)) in &rows {
                let _ = write!(out, "{l:>4}  {}", super::roots::root_text(b));
                if let Some(s) = &sandwich {
                    let _ = write!(out, "  sandwich={}", if s[*i] { "ok" } else { "FAIL" });
                }
                out.push('\n');
            }
            let _ = writeln!(out, "strictly decreasing: {}", if rep.decreasing { "yes" } else { "NO" });
        }
        Format::Json => {
            let entries: Vec<Value> = rows
                .iter()
                .map(|(i, (l, b))| {
                    let mut v = root_json(b);
                    v["l"] = json!(l);
                    if let Some(s) = &sandwich {
                        v["sandwich"] = json!(s[*i]);
                    }
                    v
                })
                .collect();
            let v = json!({ "family": series.to_string(), "decreasing": rep.decreasing, "entries": entries });
            let _ = writeln!(out, "{v}");
        }
        Format::Csv => {
            out.push_str(if sandwich.is_some() { "l,low,high,approx,sandwich\n" } else { "l,low,high,approx\n" });
            for (i, (l, b)) in &rows {
                let _ = write!(out, "{l},{},{},{:e}", b.low(), b.high(), b.approx());
                if let Some(s) = &sandwich {
                    let _ = write!(out, ",{}", s[*i]);
                }
                out.push('\n');
            }
        }
    }
    Ok((out, if ok { 0 } else { 1 }))
}
