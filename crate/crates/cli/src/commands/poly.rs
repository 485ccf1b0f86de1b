use std::fmt::Write as _;

use dualskew_core::skewgrowth::{skew_growth_bounded, DEFAULT_MAX_RANK};
use serde_json::json;

use crate::args::Format;
use crate::error::CliResult;
use crate::parse::parse_type;

pub fn run(spec: &str, format: Format) -> CliResult<String> {
    let ctype = parse_type(spec)?;
    let sg = skew_growth_bounded(ctype, DEFAULT_MAX_RANK)?;
    Ok(match format {
        Format::Text => format!("{}\n", sg.poly),
        Format::Json => {
            let coeffs: Vec<String> = sg.poly.coeffs().iter().map(|c| c.to_string()).collect();
            let v = json!({ "type": ctype.to_string(), "rank": ctype.rank(), "coeffs": coeffs });
            format!("{v}\n")
        }
        Format::Csv => {
            let mut out = String::from("degree,coeff\n");
            for (k, c) in sg.poly.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{k},{c}");
            }
            out
        }
    })
}
