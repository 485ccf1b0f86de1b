use dualskew_core::exactmath::{rat, IntPoly};
use dualskew_core::nclattice::GroupLimits;
use dualskew_core::orthopoly::{
    default_dihedral_params, verify_d_from_b, verify_d_via_h, verify_formula_a, verify_formula_b,
    verify_jacobi_identity, verify_legendre_identity, verify_recurrence, verify_rodrigues, IdentityCheck,
};
use dualskew_core::roots::{
    bruns_bound_check, interlacing_across_rank, interlacing_with_legendre, irreducibility_certificate,
    smallest_root_sequence, verify_conjecture2, BrunsOutcome, Irreducibility,
};
use dualskew_core::skewgrowth::{derivative_at_one, derivative_at_one_closed_form, skew_growth, CoxeterType, Series};
use dualskew_core::{Error, Result};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::lattice::lattice_reports;
use crate::args::{Suite, VerifyArgs};
use crate::error::CliResult;
use crate::parse::{parse_series, parse_type};
use crate::report::{Report, Status};

const ALL_SUITES: [Suite; 13] = [
    Suite::Rodrigues,
    Suite::Jacobi,
    Suite::Legendre,
    Suite::Recurrence,
    Suite::FormulaAb,
    Suite::Conj2,
    Suite::Interlace,
    Suite::Bruns,
    Suite::Divisibility,
    Suite::Derivative1,
    Suite::Sandwich,
    Suite::Conj1,
    Suite::Lattice,
];

/// Ranges and limits shared by every suite.
#[derive(Clone, Debug)]
pub struct Scope {
    pub ctype: Option<CoxeterType>,
    pub family: Option<Series>,
    pub from: Option<u32>,
    pub to: Option<u32>,
    pub max_order: u64,
    pub subset_limit: usize,
    pub precision_cap: u32,
    pub primes: Option<Vec<u64>>,
}

impl Scope {
    pub fn from_args(a: &VerifyArgs) -> CliResult<Scope> {
        Ok(Scope {
            ctype: a.ctype.as_deref().map(parse_type).transpose()?,
            family: a.family.as_deref().map(parse_series).transpose()?,
            from: a.from,
            to: a.to,
            max_order: a.max_order,
            subset_limit: a.subset_limit,
            precision_cap: a.precision_cap,
            primes: a.primes.clone(),
        })
    }

    /// Defaults: every series, default limits, no rank restriction.
    pub fn new() -> Scope {
        Scope {
            ctype: None,
            family: None,
            from: None,
            to: None,
            max_order: dualskew_core::nclattice::DEFAULT_ORDER_LIMIT,
            subset_limit: dualskew_core::nclattice::DEFAULT_SUBSET_LIMIT,
            precision_cap: dualskew_core::roots::DEFAULT_MAX_PRECISION,
            primes: None,
        }
    }

    pub fn family(mut self, s: Series) -> Scope {
        self.family = Some(s);
        self
    }

    pub fn to(mut self, to: u32) -> Scope {
        self.to = Some(to);
        self
    }

    pub fn ctype(mut self, c: CoxeterType) -> Scope {
        self.ctype = Some(c);
        self
    }

    /// `(series, rank)` pairs for the given series with lowest rank `min(s)`
    /// and highest `top(to)`, honouring a single-type restriction.
    fn ranks(&self, series: &[Series], min: impl Fn(Series) -> u32, top: impl Fn(u32) -> u32, to: u32) -> Vec<(Series, u32)> {
        if let Some(c) = self.ctype {
            return match c.series() {
                Some(s) if series.contains(&s) && c.rank() >= min(s) => vec![(s, c.rank())],
                _ => Vec::new(),
            };
        }
        let to = top(self.to.unwrap_or(to));
        series
            .iter()
            .filter(|s| self.family.map_or(true, |f| f == **s))
            .flat_map(|&s| (self.from.unwrap_or(0).max(min(s))..=to).map(move |l| (s, l)))
            .collect()
    }

    fn series_ranks(&self, series: &[Series], to: u32) -> Vec<(Series, u32)> {
        self.ranks(series, Series::min_rank, |t| t, to)
    }

    /// Series types up to `to`, plus `extra` when no family or type is fixed.
    fn types(&self, to: u32, extra: Vec<CoxeterType>) -> Vec<CoxeterType> {
        if let Some(c) = self.ctype {
            return vec![c];
        }
        let mut out: Vec<CoxeterType> = self
            .series_ranks(&[Series::A, Series::B, Series::D], to)
            .into_iter()
            .filter_map(|(s, l)| s.at(l).ok())
            .collect();
        if self.family.is_none() {
            out.extend(extra);
        }
        out
    }
}

impl Default for Scope {
    fn default() -> Self {
        Scope::new()
    }
}

type Job = Box<dyn Fn() -> Vec<Report> + Send + Sync>;

fn failed(check: &str, name: &str, rank: Option<u32>, e: &Error) -> Report {
    match e {
        Error::Unsupported { .. } | Error::OrderLimit { .. } | Error::SubsetLimit { .. } => {
            Report::new(check, name, rank, Status::Skipped, json!({ "reason": e.to_string() }))
        }
        _ => Report::new(check, name, rank, Status::Fail, json!({ "error": e.to_string() })),
    }
}

fn identity(check: &str, name: &str, rank: u32, r: Result<IdentityCheck>) -> Report {
    match r {
        Ok(c) => match c.first_mismatch {
            None => Report::new(check, name, Some(rank), Status::Pass, Value::Null),
            Some(k) => Report::new(check, name, Some(rank), Status::Fail, json!({ "first_mismatch": k })),
        },
        Err(e) => failed(check, name, Some(rank), &e),
    }
}

/// A pass/fail predicate whose failure payload is `details`.
fn predicate(check: &str, name: &str, rank: u32, r: Result<(bool, Value)>) -> Report {
    match r {
        Ok((true, _)) => Report::new(check, name, Some(rank), Status::Pass, Value::Null),
        Ok((false, d)) => Report::new(check, name, Some(rank), Status::Fail, d),
        Err(e) => failed(check, name, Some(rank), &e),
    }
}

fn identity_jobs(check: &'static str, pairs: Vec<(Series, u32)>, f: fn(Series, u32) -> Result<IdentityCheck>) -> Vec<Job> {
    pairs
        .into_iter()
        .map(|(s, l)| -> Job {
            Box::new(move || {
                let name = s.at(l).map(|c| c.to_string()).unwrap_or_else(|_| format!("{s}{l}"));
                vec![identity(check, &name, l, f(s, l))]
            })
        })
        .collect()
}

fn rodrigues(scope: &Scope) -> Vec<Job> {
    let pairs = scope.series_ranks(&[Series::A, Series::B, Series::D], 200);
    identity_jobs("rodrigues", pairs, verify_rodrigues)
}

fn jacobi(scope: &Scope) -> Vec<Job> {
    let mut extra = vec![CoxeterType::h(3).expect("H3")];
    extra.extend((3..=50).filter_map(|p| CoxeterType::i2(p).ok()));
    scope
        .types(200, extra)
        .into_iter()
        .map(|c| -> Job {
            Box::new(move || {
                let dihedral = c.dihedral_order().map(default_dihedral_params);
                vec![identity("jacobi", &c.to_string(), c.rank(), verify_jacobi_identity(c, dihedral))]
            })
        })
        .collect()
}

fn legendre(scope: &Scope) -> Vec<Job> {
    let mut jobs = identity_jobs("legendre", scope.series_ranks(&[Series::A, Series::B], 200), verify_legendre_identity);
    let d = scope.series_ranks(&[Series::D], 200);
    jobs.extend(identity_jobs("legendre-d-from-b", d, |_, l| verify_d_from_b(l)));
    jobs
}

fn recurrence(scope: &Scope) -> Vec<Job> {
    // anchors: the lowest rank in each relation
    let a_b = scope.ranks(&[Series::A, Series::B], Series::min_rank, |t| t.saturating_sub(2), 200);
    let d = scope.ranks(&[Series::D], Series::min_rank, |t| t.saturating_sub(3), 200);
    let mut jobs = identity_jobs("recurrence", a_b, verify_recurrence);
    jobs.extend(identity_jobs("recurrence", d, verify_recurrence));
    jobs
}

fn formula_ab(scope: &Scope) -> Vec<Job> {
    let big_l = scope.to.unwrap_or(25);
    let mut jobs: Vec<Job> = Vec::new();
    for l in 3..=4 * big_l + 3 {
        jobs.push(Box::new(move || {
            let r = verify_formula_a(l).map(|ok| (ok, json!({ "order": 2 * (l / 4) })));
            vec![predicate("formula-a", &format!("H_{l}"), l, r)]
        }));
    }
    for k in 0..=2 * big_l {
        jobs.push(Box::new(move || {
            let r = (0..=k)
                .map(|i| verify_formula_b(k, i).map(|ok| (ok, i)))
                .collect::<Result<Vec<_>>>()
                .map(|v| match v.iter().find(|(ok, _)| !ok) {
                    None => (true, Value::Null),
                    Some((_, i)) => (false, json!({ "order": i })),
                });
            vec![predicate("formula-b", &format!("h_{k}"), k, r)]
        }));
    }
    let d = scope.series_ranks(&[Series::D], 4 * big_l + 3);
    jobs.extend(identity_jobs("formula-d-via-h", d, |_, l| verify_d_via_h(l)));
    jobs
}

fn non_series() -> Vec<CoxeterType> {
    let mut v = CoxeterType::exceptional();
    v.extend((3..=20).filter_map(|p| CoxeterType::i2(p).ok()));
    v
}

fn conj2(scope: &Scope) -> Vec<Job> {
    scope
        .types(100, non_series())
        .into_iter()
        .map(|c| -> Job {
            Box::new(move || {
                let r = verify_conjecture2(c).map(|rep| (rep.holds(), serde_json::to_value(&rep).unwrap_or_default()));
                vec![predicate("conj2", &c.to_string(), c.rank(), r)]
            })
        })
        .collect()
}

fn interlace(scope: &Scope) -> Vec<Job> {
    let pairs = scope.series_ranks(&[Series::A, Series::B], 100);
    let top = scope.to.unwrap_or(100);
    let single = scope.ctype.is_some();
    let mut jobs: Vec<Job> = Vec::new();
    for (s, l) in pairs {
        jobs.push(Box::new(move || {
            let name = s.at(l).map(|c| c.to_string()).unwrap_or_default();
            let r = interlacing_with_legendre(s, l).map(|ok| (ok, json!({ "with": format!("P_{l}") })));
            vec![predicate("interlace-legendre", &name, l, r)]
        }));
        if single || l < top {
            jobs.push(Box::new(move || {
                let name = s.at(l).map(|c| c.to_string()).unwrap_or_default();
                let r = interlacing_across_rank(s, l).map(|ok| (ok, json!({ "with": format!("{s}{}", l + 1) })));
                vec![predicate("interlace-rank", &name, l, r)]
            }));
        }
    }
    jobs
}

fn bruns(scope: &Scope) -> Vec<Job> {
    if scope.ctype.is_some() || scope.family.is_some() {
        return Vec::new();
    }
    let cap = scope.precision_cap;
    (scope.from.unwrap_or(1).max(1)..=scope.to.unwrap_or(60))
        .map(|l| -> Job {
            Box::new(move || {
                let name = format!("P_{l}");
                match bruns_bound_check(l, cap) {
                    Ok(rep) => {
                        let (status, d) = match rep.outcome {
                            BrunsOutcome::Holds => (Status::Pass, json!({ "precision": rep.precision })),
                            BrunsOutcome::Fails { nu } => (Status::Fail, json!({ "nu": nu, "precision": rep.precision })),
                            BrunsOutcome::Undecided => (Status::Undecided, json!({ "precision_cap": rep.precision })),
                        };
                        vec![Report::new("bruns", &name, Some(l), status, d)]
                    }
                    Err(e) => vec![failed("bruns", &name, Some(l), &e)],
                }
            })
        })
        .collect()
}

fn divides_by_one_minus_2t(c: CoxeterType) -> bool {
    skew_growth(c).poly.div_exact(&IntPoly::from_i64s(&[1, -2])).is_some()
}

fn divisibility(scope: &Scope) -> Vec<Job> {
    scope
        .series_ranks(&[Series::A, Series::D], 100)
        .into_iter()
        .map(|(s, l)| -> Job {
            Box::new(move || {
                let expected = match s {
                    Series::A => l % 2 == 0,
                    _ => l == 4,
                };
                let r = s.at(l).map(|c| {
                    let got = divides_by_one_minus_2t(c);
                    (got == expected, json!({ "divides": got, "expected": expected }))
                });
                let name = format!("{s}{l}");
                vec![predicate("divisibility", &name, l, r)]
            })
        })
        .collect()
}

fn derivative1(scope: &Scope) -> Vec<Job> {
    scope
        .series_ranks(&[Series::A, Series::B, Series::D], 100)
        .into_iter()
        .map(|(s, l)| -> Job {
            Box::new(move || {
                let r = s.at(l).map(|c| {
                    let got = derivative_at_one(c);
                    let want = derivative_at_one_closed_form(c);
                    let ok = want.as_ref() == Some(&got);
                    (ok, json!({ "value": got.to_string(), "expected": want.map(|w| w.to_string()) }))
                });
                vec![predicate("derivative1", &format!("{s}{l}"), l, r)]
            })
        })
        .collect()
}

fn sandwich(scope: &Scope) -> Vec<Job> {
    if scope.ctype.is_some() {
        return Vec::new();
    }
    let to = scope.to.unwrap_or(100);
    [Series::A, Series::B, Series::D]
        .into_iter()
        .filter(|s| scope.family.map_or(true, |f| f == *s) && to >= s.min_rank())
        .map(|s| -> Job {
            Box::new(move || {
                let name = s.to_string();
                let eps = rat(1, 1_000_000);
                let rep = match smallest_root_sequence(s, to, &eps) {
                    Ok(r) => r,
                    Err(e) => return vec![failed("smallest-decreasing", &name, Some(to), &e)],
                };
                let last = rep.entries.last().map(|(_, b)| b.approx());
                let d = if rep.decreasing { json!({ "smallest": last }) } else { json!({ "decreasing": false }) };
                let mut out = vec![Report::from_bool("smallest-decreasing", &name, Some(to), rep.decreasing, d)];
                if let Some(rows) = &rep.sandwich {
                    let bad: Vec<u32> =
                        rep.entries.iter().zip(rows).filter(|(_, ok)| !**ok).map(|((l, _), _)| *l).collect();
                    let d = if bad.is_empty() { Value::Null } else { json!({ "failing_ranks": bad }) };
                    out.push(Report::from_bool("sandwich", &name, Some(to), bad.is_empty(), d));
                }
                out
            })
        })
        .collect()
}

fn conj1(scope: &Scope) -> Vec<Job> {
    scope
        .types(30, CoxeterType::exceptional())
        .into_iter()
        .map(|c| -> Job {
            let primes = scope.primes.clone();
            Box::new(move || {
                let name = c.to_string();
                match irreducibility_certificate(c, primes.as_deref()) {
                    Ok(rep) => {
                        let status = match rep.result {
                            Irreducibility::Certified { .. } => Status::Pass,
                            Irreducibility::Inconclusive { .. } => Status::Undecided,
                        };
                        let d = serde_json::to_value(&rep).unwrap_or_default();
                        vec![Report::new("conj1", &name, Some(c.rank()), status, d)]
                    }
                    Err(e) => vec![failed("conj1", &name, Some(c.rank()), &e)],
                }
            })
        })
        .collect()
}

/// Types covered by the lattice oracle by default.
pub fn lattice_types() -> Vec<CoxeterType> {
    let mut v: Vec<CoxeterType> = (1..=5).filter_map(|l| CoxeterType::a(l).ok()).collect();
    v.extend((2..=4).filter_map(|l| CoxeterType::b(l).ok()));
    v.extend(CoxeterType::d(4).ok());
    v.push(CoxeterType::g2());
    v.extend((3..=12).filter_map(|p| CoxeterType::i2(p).ok()));
    v
}

fn lattice(scope: &Scope) -> Vec<Job> {
    let types = match (scope.ctype, scope.family) {
        (Some(c), _) => vec![c],
        (None, Some(f)) => lattice_types().into_iter().filter(|c| c.series() == Some(f)).collect(),
        (None, None) => lattice_types(),
    };
    let limits = GroupLimits { max_order: scope.max_order, ..GroupLimits::default() };
    let subset_limit = scope.subset_limit;
    types
        .into_iter()
        .map(|c| -> Job { Box::new(move || lattice_reports(c, limits, subset_limit, None)) })
        .collect()
}

fn jobs(suite: Suite, scope: &Scope) -> Vec<Job> {
    match suite {
        Suite::Rodrigues => rodrigues(scope),
        Suite::Jacobi => jacobi(scope),
        Suite::Legendre => legendre(scope),
        Suite::Recurrence => recurrence(scope),
        Suite::FormulaAb => formula_ab(scope),
        Suite::Conj2 => conj2(scope),
        Suite::Interlace => interlace(scope),
        Suite::Bruns => bruns(scope),
        Suite::Divisibility => divisibility(scope),
        Suite::Derivative1 => derivative1(scope),
        Suite::Sandwich => sandwich(scope),
        Suite::Conj1 => conj1(scope),
        Suite::Lattice => lattice(scope),
        Suite::All => ALL_SUITES.iter().flat_map(|&s| jobs(s, scope)).collect(),
    }
}

/// Runs every job of `suite` on the worker pool; reports come back in job
/// order regardless of scheduling.
pub fn run_suite(suite: Suite, scope: &Scope) -> Vec<Report> {
    let jobs = jobs(suite, scope);
    let grouped: Vec<Vec<Report>> = jobs.par_iter().map(|job| job()).collect();
    grouped.into_iter().flatten().collect()
}
