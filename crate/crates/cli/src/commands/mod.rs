pub mod lattice;
pub mod plot;
pub mod poly;
pub mod roots;
pub mod sequence;
pub mod table;
pub mod verify;

use crate::args::{Cli, Command};
use crate::error::CliResult;
use crate::report::{exit_code, render};

/// Standard output text and exit code for one invocation.
pub fn run(cli: &Cli) -> CliResult<(String, i32)> {
    match &cli.command {
        Command::Poly { ctype, format } => Ok((poly::run(ctype, *format)?, 0)),
        Command::Roots { ctype, eps, format } => Ok((roots::run(ctype, eps, *format)?, 0)),
        Command::Verify(args) => {
            let scope = verify::Scope::from_args(args)?;
            let reports = verify::run_suite(args.suite, &scope);
            Ok((render(&reports, args.format), exit_code(&reports)))
        }
        Command::Sequence { family, from, to, eps, sandwich, format } => sequence::run(&sequence::SequenceArgs {
            family,
            from: *from,
            to: *to,
            eps,
            sandwich: *sandwich,
            format: *format,
        }),
        Command::Lattice { ctype, cache, max_order, subset_limit, format } => {
            lattice::run(ctype, cache.as_deref(), *max_order, *subset_limit, *format)
        }
        Command::Table { which, family, from, to, format } => {
            Ok((table::run(which, family.as_deref(), *from, *to, *format)?, 0))
        }
        Command::Plot { ctype, out, style } => Ok((plot::run(ctype, out.as_deref(), *style)?, 0)),
    }
}
