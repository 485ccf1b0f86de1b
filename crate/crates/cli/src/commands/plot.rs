use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use dualskew_core::exactmath::BigRat;
use dualskew_core::roots::RootBox;
use num_bigint::BigInt;

use super::roots::refined_roots;
use crate::args::PlotStyle;
use crate::error::CliResult;

const WIDTH: i64 = 640;
const HEIGHT: i64 = 360;
const MARGIN: i64 = 40;
/// Pixels per unit on both axes.
const SCALE: i64 = WIDTH - 2 * MARGIN - 40;
const ARM: i64 = 5;

fn x_of(t: f64) -> f64 {
    (MARGIN + 20) as f64 + t * SCALE as f64
}

fn y_axis() -> i64 {
    HEIGHT / 2
}

/// Marker position: the exact root, or the box midpoint once the box is
/// narrower than a tenth of a pixel.
fn marker_t(bx: &RootBox) -> BigRat {
    match bx.exact_value() {
        Some(x) => x.clone(),
        None => (bx.low() + bx.high()) / BigRat::from_integer(BigInt::from(2)),
    }
}

fn decimal(x: &BigRat, digits: usize) -> String {
    let s = BigRat::from_integer(num_traits::pow(BigInt::from(10), digits));
    let n = (x * s).round().to_integer();
    let text = format!("{:0>width$}", n.to_string(), width = digits + 1);
    let (int, frac) = text.split_at(text.len() - digits);
    format!("{int}.{frac}")
}

pub fn svg(name: &str, roots: &[RootBox], style: PlotStyle) -> String {
    let mut out = String::new();
    let y = y_axis();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<title>Zero locus of N(t) for {name}</title>"#);
    let _ = writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r##"<line class="real-axis" x1="{MARGIN}" y1="{y}" x2="{}" y2="{y}" stroke="#888" stroke-width="1"/>"##,
        WIDTH - MARGIN
    );
    let x0 = x_of(0.0);
    let _ = writeln!(
        out,
        r##"<line class="imag-axis" x1="{x0}" y1="{MARGIN}" x2="{x0}" y2="{}" stroke="#888" stroke-width="1"/>"##,
        HEIGHT - MARGIN
    );
    let x1 = x_of(1.0);
    let _ = writeln!(
        out,
        r##"<line class="unit-segment" x1="{x0}" y1="{y}" x2="{x1}" y2="{y}" stroke="black" stroke-width="1.5"/>"##
    );
    if style == PlotStyle::Grid {
        for i in 0..=4 {
            let t = f64::from(i) / 4.0;
            let x = x_of(t);
            let _ = writeln!(
                out,
                r##"<line class="tick" x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="#ccc" stroke-width="1"/>"##,
                MARGIN,
                HEIGHT - MARGIN
            );
            let _ = writeln!(
                out,
                r#"<text x="{x}" y="{}" font-size="11" text-anchor="middle">{t}</text>"#,
                y + 18
            );
        }
    }
    for bx in roots {
        let t = marker_t(bx);
        let x = x_of(bx.approx());
        let _ = writeln!(
            out,
            r#"<g class="root" data-t="{}"><line x1="{:.3}" y1="{y}" x2="{:.3}" y2="{y}" stroke="red" stroke-width="1.5"/><line x1="{x:.3}" y1="{}" x2="{x:.3}" y2="{}" stroke="red" stroke-width="1.5"/></g>"#,
            decimal(&t, 12),
            x - ARM as f64,
            x + ARM as f64,
            y - ARM,
            y + ARM
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{MARGIN}" y="{}" font-size="13">{name}: N(t) = 0</text>"#,
        MARGIN - 12
    );
    out.push_str("</svg>\n");
    out
}

/// Writes the plot to `out`, or returns it when `out` is `None`.
pub fn run(spec: &str, out: Option<&Path>, style: PlotStyle) -> CliResult<String> {
    // a tenth of a pixel
    let eps = BigRat::new(BigInt::from(1), BigInt::from(SCALE * 10));
    let (name, _, roots) = refined_roots(spec, &eps)?;
    let text = svg(&name, &roots, style);
    match out {
        Some(path) => {
            fs::write(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}
