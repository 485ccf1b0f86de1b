use std::fs;
use std::path::Path;

use dualskew_core::nclattice::{
    build_group_with, characteristic_poly, nc_interval, skew_growth_by_subsets, verify_mobius_identity, GroupLimits,
    NcLattice, ReflectionGroup,
};
use dualskew_core::skewgrowth::{skew_growth, CoxeterType};
use dualskew_core::Error;
use serde_json::json;

use crate::args::Format;
use crate::error::CliResult;
use crate::parse::parse_type;
use crate::report::{exit_code, render, Report, Status};

/// Builds the interval, reusing `cache` when it holds a lattice of this type.
pub fn load_or_build(group: &ReflectionGroup, cache: Option<&Path>) -> CliResult<NcLattice> {
    let ctype = group.ctype();
    if let Some(path) = cache {
        if let Ok(text) = fs::read_to_string(path) {
            if let Ok(ncl) = NcLattice::from_json(&text, ctype) {
                return Ok(ncl);
            }
        }
    }
    let ncl = nc_interval(group)?;
    if let Some(path) = cache {
        fs::write(path, ncl.to_json()?)?;
    }
    Ok(ncl)
}

fn skipped(check: &str, c: CoxeterType, e: &Error) -> Report {
    Report::new(check, c, Some(c.rank()), Status::Skipped, json!({ "reason": e.to_string() }))
}

/// The four lattice checks for one type: characteristic polynomial against
/// the table, the subset sum, the per-element Möbius identity and
/// reflection length against fixed-space codimension.
pub fn lattice_reports(c: CoxeterType, limits: GroupLimits, subset_limit: usize, cache: Option<&Path>) -> Vec<Report> {
    let checks = ["lattice-charpoly", "lattice-subsets", "lattice-mobius", "lattice-length"];
    let group = match build_group_with(c, limits) {
        Ok(g) => g,
        Err(e @ (Error::OrderLimit { .. } | Error::Unsupported { .. })) => {
            return checks.iter().map(|k| skipped(k, c, &e)).collect();
        }
        Err(e) => return checks.iter().map(|k| fail_with(k, c, &e.to_string())).collect(),
    };
    let ncl = match load_or_build(&group, cache) {
        Ok(n) => n,
        Err(e) => return checks.iter().map(|k| fail_with(k, c, &e.to_string())).collect(),
    };
    let rank = Some(c.rank());
    let expected = skew_growth(c).poly;
    let mut out = Vec::new();

    let chi = characteristic_poly(&ncl);
    let details = match chi.first_difference(&expected) {
        None => json!({ "size": ncl.len() }),
        Some(k) => json!({ "first_mismatch": k, "lattice": chi.to_string(), "table": expected.to_string() }),
    };
    out.push(Report::from_bool(checks[0], c, rank, chi == expected, details));

    out.push(match skew_growth_by_subsets(&ncl, subset_limit) {
        Ok(p) => {
            let d = p.first_difference(&expected).map_or(json!(null), |k| json!({ "first_mismatch": k }));
            Report::from_bool(checks[1], c, rank, p == expected, d)
        }
        Err(e @ Error::SubsetLimit { .. }) => skipped(checks[1], c, &e),
        Err(e) => fail_with(checks[1], c, &e.to_string()),
    });

    out.push(match verify_mobius_identity(&ncl, subset_limit) {
        Ok(ok) => Report::from_bool(checks[2], c, rank, ok, if ok { json!(null) } else { json!({ "mismatch": true }) }),
        Err(e @ Error::SubsetLimit { .. }) => skipped(checks[2], c, &e),
        Err(e) => fail_with(checks[2], c, &e.to_string()),
    });

    let bad = (0..group.len()).find(|&g| group.reflection_length(g) != group.fixed_space_codimension(g));
    out.push(match bad {
        None => Report::new(checks[3], c, rank, Status::Pass, json!({ "elements": group.len() })),
        Some(g) => Report::new(
            checks[3],
            c,
            rank,
            Status::Fail,
            json!({
                "element": group.element(g),
                "reflection_length": group.reflection_length(g),
                "codimension": group.fixed_space_codimension(g),
            }),
        ),
    });
    out
}

pub fn fail_with(check: &str, c: CoxeterType, msg: &str) -> Report {
    Report::new(check, c, Some(c.rank()), Status::Fail, json!({ "error": msg }))
}

pub fn run(spec: &str, cache: Option<&Path>, max_order: u64, subset_limit: usize, format: Format) -> CliResult<(String, i32)> {
    let c = parse_type(spec)?;
    let limits = GroupLimits { max_order, ..GroupLimits::default() };
    let reports = lattice_reports(c, limits, subset_limit, cache);
    Ok((render(&reports, format), exit_code(&reports)))
}
