use std::fmt::Write as _;

use dualskew_core::exactmath::BigRat;
use dualskew_core::roots::{refine_root, unit_roots, RootBox};
use dualskew_core::skewgrowth::{skew_growth_bounded, DEFAULT_MAX_RANK};
use serde_json::{json, Value};

use crate::args::Format;
use crate::error::CliResult;
use crate::parse::{parse_eps, parse_type};

pub fn root_json(bx: &RootBox) -> Value {
    match bx.exact_value() {
        Some(x) => json!({ "exact": x.to_string(), "approx": bx.approx() }),
        None => json!({ "low": bx.low().to_string(), "high": bx.high().to_string(), "approx": bx.approx() }),
    }
}

pub fn root_text(bx: &RootBox) -> String {
    match bx.exact_value() {
        Some(x) => x.to_string(),
        None => format!("({}, {}]  ~ {:.15e}", bx.low(), bx.high(), bx.approx()),
    }
}

/// Roots in `(0, 1]`, largest first, each exact or narrower than `eps`.
pub fn refined_roots(spec: &str, eps: &BigRat) -> CliResult<(String, u32, Vec<RootBox>)> {
    let ctype = parse_type(spec)?;
    let p = skew_growth_bounded(ctype, DEFAULT_MAX_RANK)?.poly;
    let boxes = unit_roots(&p)?
        .iter()
        .map(|b| refine_root(&p, b, eps))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((ctype.to_string(), ctype.rank(), boxes))
}

pub fn run(spec: &str, eps: &str, format: Format) -> CliResult<String> {
    let eps = parse_eps(eps)?;
    let (name, rank, boxes) = refined_roots(spec, &eps)?;
    let mut out = String::new();
    match format {
        Format::Text => {
            for (i, b) in boxes.iter().enumerate() {
                let _ = writeln!(out, "{:>3}  {}", i + 1, root_text(b));
            }
        }
        Format::Json => {
            let roots: Vec<Value> = boxes.iter().map(root_json).collect();
            let v = json!({ "type": name, "rank": rank, "roots": roots });
            let _ = writeln!(out, "{v}");
        }
        Format::Csv => {
            out.push_str("index,low,high,exact,approx\n");
            for (i, b) in boxes.iter().enumerate() {
                let exact = b.exact_value().map(|x| x.to_string()).unwrap_or_default();
                let _ = writeln!(out, "{},{},{},{},{:e}", i + 1, b.low(), b.high(), exact, b.approx());
            }
        }
    }
    Ok(out)
}
