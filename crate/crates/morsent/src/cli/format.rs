//! Text renderings of results. Rounding happens only here.

use std::fmt::Write;

use super::EntropyReport;
use crate::entropy::{DensityCurve, EntropyResult};

pub const TABLE_HEADER: &str = "n,lambda,S_x,S_x_err,S_p,S_p_err,sum,bound,margin";
pub const DENSITY_HEADER: &str = "coordinate,density,entropy_density";

fn fixed(v: f64, precision: usize) -> String {
    let s = format!("{v:.precision$}");
    // "-0.0000" reads as a sign error in a table
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn sci(v: f64, precision: usize) -> String {
    format!("{:.*e}", precision.saturating_sub(1).max(1), v)
}

fn table_row(r: &EntropyResult, precision: usize) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        r.n,
        r.lambda,
        fixed(r.s_x, precision),
        sci(r.s_x_err, precision),
        fixed(r.s_p, precision),
        sci(r.s_p_err, precision),
        fixed(r.sum, precision),
        fixed(r.bound, precision),
        fixed(r.margin, precision),
    )
}

pub fn table_csv(results: &[EntropyResult], precision: usize) -> String {
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for r in results {
        out.push_str(&table_row(r, precision));
        out.push('\n');
    }
    out
}

pub fn table_pretty(results: &[EntropyResult], precision: usize) -> String {
    let w = precision + 4;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3} {:>7} {:>w$} {:>w$} {:>w$} {:>w$} {:>w$}",
        "n", "lambda", "S_x", "S_p", "S_x+S_p", "1+ln(pi)", "margin"
    );
    let mut last_n = None;
    for r in results {
        if last_n.is_some() && last_n != Some(r.n) {
            let _ = writeln!(out);
        }
        last_n = Some(r.n);
        let _ = writeln!(
            out,
            "{:>3} {:>7} {:>w$} {:>w$} {:>w$} {:>w$} {:>w$}",
            r.n,
            r.lambda,
            fixed(r.s_x, precision),
            fixed(r.s_p, precision),
            fixed(r.sum, precision),
            fixed(r.bound, precision),
            fixed(r.margin, precision),
        );
    }
    out
}

pub fn entropy_csv(report: &EntropyReport, precision: usize) -> String {
    let u = &report.uncertainty;
    format!(
        "{TABLE_HEADER},delta_x,delta_p,product\n{},{},{},{}\n",
        table_row(&report.entropy, precision),
        fixed(u.delta_x, precision),
        fixed(u.delta_p, precision),
        fixed(u.product, precision),
    )
}

pub fn entropy_pretty(report: &EntropyReport, precision: usize) -> String {
    let r = &report.entropy;
    let u = &report.uncertainty;
    let p = precision;
    let mut out = String::new();
    let _ = writeln!(out, "state       n = {}, lambda = {}", r.n, r.lambda);
    let _ = writeln!(out, "S_x         {} (± {:.1e})", fixed(r.s_x, p), r.s_x_err);
    let _ = writeln!(out, "S_p         {} (± {:.1e})", fixed(r.s_p, p), r.s_p_err);
    let _ = writeln!(out, "S_x + S_p   {}", fixed(r.sum, p));
    let _ = writeln!(out, "1 + ln(pi)  {}", fixed(r.bound, p));
    let _ = writeln!(out, "margin      {}", fixed(r.margin, p));
    let _ = writeln!(out, "dx          {}", fixed(u.delta_x, p));
    let _ = writeln!(out, "dp          {}", fixed(u.delta_p, p));
    let _ = writeln!(out, "dx*dp       {}", fixed(u.product, p));
    out
}

pub fn density_csv(curve: &DensityCurve, precision: usize) -> String {
    let mut out = String::from(DENSITY_HEADER);
    out.push('\n');
    for pt in &curve.points {
        let _ = writeln!(
            out,
            "{},{},{}",
            fixed(pt.coordinate, precision),
            fixed(pt.density, precision),
            fixed(pt.entropy_density, precision)
        );
    }
    out
}
