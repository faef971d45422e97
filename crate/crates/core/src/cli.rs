//! The `qrs` command line.
//!
//! Exit codes: 0 when every report has a status its record expects, 1 when
//! some report does not, 2 for usage and engine errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::coeff::Symbol;
use crate::error::{Error, Result};
use crate::families::{build_polynomial, Family, IndexConvention, PolySpec};
use crate::parse::{parse_rational, Expr};
use crate::render::{self, Style};
use crate::report::{Status, VerificationReport};
use crate::verifier::{self, IdentityRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEXPECTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qrs", version, about = "Exact q-series identity checker for deformed Rogers-Szegő operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Args)]
pub struct OrderArg {
    /// Truncation order; each record's own default when absent.
    #[arg(long, env = "QRS_ORDER", value_parser = clap::value_parser!(u32).range(1..))]
    pub order: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the identity catalog with expected statuses.
    List,
    /// Check one identity at one meta instance.
    Verify {
        #[arg(long)]
        id: String,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Check identities over a box of meta values.
    Sweep {
        /// Restrict to these ids; the whole catalog when absent.
        #[arg(long)]
        id: Vec<String>,
        /// Meta range such as `n=0..3`; n, m and k default to 0..3.
        #[arg(long, value_parser = parse_range)]
        range: Vec<(String, (i64, i64))>,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Tabulate a polynomial family.
    Table {
        #[arg(long)]
        family: String,
        /// A degree `n` or a range `lo..hi`.
        #[arg(long, value_parser = parse_degrees)]
        degree: (usize, usize),
        /// Slot assignment such as `a=q^2` or `u=1`.
        #[arg(long, value_parser = parse_param)]
        param: Vec<(String, String)>,
        /// Index of the Pochhammer ratio in the general Al-Salam-Carlitz families.
        #[arg(long, value_enum, default_value_t = Index::Degree)]
        index: Index,
    },
    /// Expand an expression as a truncated series.
    Expand {
        expr: String,
        #[arg(long, default_value = "x")]
        var: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Index {
    Degree,
    Summation,
}

fn parse_range(s: &str) -> std::result::Result<(String, (i64, i64)), String> {
    let (name, span) = s.split_once('=').ok_or("expected name=lo..hi")?;
    let (lo, hi) = span.split_once("..").ok_or("expected lo..hi")?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad upper bound `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((name.trim().to_string(), (lo, hi)))
}

fn parse_degrees(s: &str) -> std::result::Result<(usize, usize), String> {
    let bad = |t: &str| format!("bad degree `{t}`");
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo = lo.trim().parse().map_err(|_| bad(lo))?;
            let hi = hi.trim().parse().map_err(|_| bad(hi))?;
            if lo > hi {
                return Err(format!("empty range {lo}..{hi}"));
            }
            Ok((lo, hi))
        }
        None => {
            let n = s.trim().parse().map_err(|_| bad(s))?;
            Ok((n, n))
        }
    }
}

fn parse_param(s: &str) -> std::result::Result<(String, String), String> {
    let (name, expr) = s.split_once('=').ok_or("expected slot=expression")?;
    Ok((name.trim().to_string(), expr.to_string()))
}

/// Parse `argv` (program name first), run, and write to `out` or to the
/// `--out` file. Diagnostics go to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => out.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "qrs: cannot write output: {e}");
                return EXIT_ERROR;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "qrs: {e}");
            EXIT_ERROR
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    match &cli.command {
        Command::List => Ok((list(cli.format), EXIT_OK)),
        Command::Verify { id, n, m, k, order } => {
            let rec = verifier::find(id)?;
            let meta: BTreeMap<String, i64> = [("n", n), ("m", m), ("k", k)]
                .into_iter()
                .filter_map(|(name, v)| v.map(|v| (name.to_string(), v)))
                .collect();
            let order = order.order.map_or(rec.default_order, |o| o as usize);
            let report = verifier::verify(id, order, &meta)?;
            let code = if rec.expected.admits(report.status) { EXIT_OK } else { EXIT_UNEXPECTED };
            Ok((render_reports(std::slice::from_ref(&report), cli.format, false)?, code))
        }
        Command::Sweep { id, range, order } => {
            let ids: Vec<&str> = if id.is_empty() {
                verifier::catalog().iter().map(|r| r.id).collect()
            } else {
                id.iter().map(String::as_str).collect()
            };
            let mut ranges = verifier::default_ranges();
            ranges.extend(range.iter().cloned());
            let orders: Vec<usize> = order.order.map(|o| o as usize).into_iter().collect();
            let reports = verifier::sweep(&ids, &orders, &ranges)?;
            let summary = verifier::summarize(&reports);
            let code = if summary.unexpected == 0 { EXIT_OK } else { EXIT_UNEXPECTED };
            Ok((render_reports(&reports, cli.format, true)?, code))
        }
        Command::Table { family, degree, param, index } => Ok((table(family, *degree, param, *index, cli.format)?, EXIT_OK)),
        Command::Expand { expr, var, order } => {
            let var: Symbol = var.parse().map_err(|m: String| Error::Parse { pos: 0, msg: m })?;
            let s = Expr::parse(expr)?.expand(var, *order)?;
            let text = match cli.format {
                Format::Text => render::series(&s, Style::Text),
                Format::Latex => render::series(&s, Style::Latex),
                Format::Json => {
                    let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
                    json(&serde_json::json!({ "var": var.name(), "order": s.order(), "coefficients": coeffs }))
                }
            };
            Ok((text + "\n", EXIT_OK))
        }
    }
}

fn json(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn ranges_text(rec: &IdentityRecord) -> String {
    rec.meta
        .iter()
        .map(|r| format!("{}={}..{}", r.name, r.lo, r.hi))
        .collect::<Vec<_>>()
        .join(",")
}

fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\textbackslash{}"),
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            '{' | '}' | '_' | '&' | '%' | '$' | '#' => {
                out.push('\\');
                out.push(c);
            }
            _ => out.push(c),
        }
    }
    out
}

#[derive(Serialize)]
struct ListEntry<'a> {
    id: &'a str,
    statement: &'a str,
    expected: &'static str,
    expansion: String,
    order: usize,
    meta: BTreeMap<&'a str, [i64; 2]>,
    note: &'a str,
}

fn list(format: Format) -> String {
    let cat = verifier::catalog();
    match format {
        Format::Json => {
            let entries: Vec<ListEntry> = cat
                .iter()
                .map(|r| ListEntry {
                    id: r.id,
                    statement: r.statement,
                    expected: r.expected.tag(),
                    expansion: r.expansion.to_string(),
                    order: r.default_order,
                    meta: r.meta.iter().map(|m| (m.name, [m.lo, m.hi])).collect(),
                    note: r.note,
                })
                .collect();
            json(&entries) + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            for r in cat {
                out.push_str(&format!(
                    "{:<30} {:<17} in {:<7} order {:<2} {}\n    {}\n",
                    r.id,
                    r.expected.tag(),
                    r.expansion.to_string(),
                    r.default_order,
                    ranges_text(r),
                    r.statement
                ));
            }
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{itemize}\n");
            for r in cat {
                out.push_str(&format!(
                    "  \\item \\texttt{{{}}} ({}): \\texttt{{{}}}\n",
                    latex_escape(r.id),
                    latex_escape(r.expected.tag()),
                    latex_escape(r.statement)
                ));
            }
            out.push_str("\\end{itemize}\n");
            out
        }
    }
}

fn meta_text(meta: &BTreeMap<String, i64>) -> String {
    meta.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

/// LaTeX for a canonical coefficient string; falls back to verbatim text.
fn latex_coefficient(s: &str) -> String {
    match parse_rational(s) {
        Ok(f) => render::rational(&f, Style::Latex),
        Err(_) => format!("\\text{{{}}}", latex_escape(s)),
    }
}

fn render_reports(reports: &[VerificationReport], format: Format, many: bool) -> Result<String> {
    Ok(match format {
        Format::Json if many => json(&reports) + "\n",
        Format::Json => json(&reports[0]) + "\n",
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let rec = verifier::find(&r.id)?;
                let flag = if rec.expected.admits(r.status) { "" } else { "  UNEXPECTED" };
                out.push_str(&format!("{} [{}] order {}: {}{}\n", r.id, meta_text(&r.meta), r.order, r.status, flag));
                if let Some(m) = &r.first_mismatch {
                    out.push_str(&format!("    first mismatch at {}\n", m.degree));
                    out.push_str(&format!("    lhs  = {}\n    rhs  = {}\n    diff = {}\n", m.lhs, m.rhs, m.diff));
                }
                if let Some(reason) = &r.reason {
                    out.push_str(&format!("    reason: {reason}\n"));
                }
            }
            if many {
                let s = verifier::summarize(reports);
                out.push_str(&format!(
                    "{} reports: {} pass, {} mismatch, {} unsupported, {} unexpected\n",
                    reports.len(),
                    s.pass,
                    s.mismatch,
                    s.unsupported,
                    s.unexpected
                ));
            }
            out
        }
        Format::Latex => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!(
                    "\\texttt{{{}}} $[{}]$, order {}: \\textbf{{{}}}\n",
                    latex_escape(&r.id),
                    meta_text(&r.meta),
                    r.order,
                    r.status
                ));
                if let Some(m) = &r.first_mismatch {
                    out.push_str(&format!(
                        "\\[ \\text{{at }} {}:\\quad {} \\neq {} \\]\n",
                        m.degree,
                        latex_coefficient(&m.lhs),
                        latex_coefficient(&m.rhs)
                    ));
                }
                if r.status == Status::Unsupported {
                    if let Some(reason) = &r.reason {
                        out.push_str(&format!("\\emph{{{}}}\n", latex_escape(reason)));
                    }
                }
            }
            out
        }
    })
}

#[derive(Serialize)]
struct TableRow {
    family: &'static str,
    degree: usize,
    polynomial: String,
}

fn table(family: &str, (lo, hi): (usize, usize), params: &[(String, String)], index: Index, format: Format) -> Result<String> {
    let fam: Family = family.parse()?;
    let values = params
        .iter()
        .map(|(name, src)| Ok((name.clone(), parse_rational(src)?)))
        .collect::<Result<Vec<_>>>()?;
    let index = match index {
        Index::Degree => IndexConvention::Degree,
        Index::Summation => IndexConvention::Summation,
    };
    let mut rows = Vec::new();
    for n in lo..=hi {
        let mut spec = PolySpec::new(fam, n).with_index(index);
        for (name, v) in &values {
            spec = spec.with(name, v.clone());
        }
        rows.push((n, build_polynomial(&spec)?));
    }
    let single = lo == hi;
    Ok(match format {
        Format::Json => {
            let rows: Vec<TableRow> = rows
                .iter()
                .map(|(n, p)| TableRow { family: fam.tag(), degree: *n, polynomial: p.to_string() })
                .collect();
            json(&rows) + "\n"
        }
        Format::Text | Format::Latex => {
            let style = if format == Format::Text { Style::Text } else { Style::Latex };
            let mut out = String::new();
            for (n, p) in rows {
                let body = render::collected(&p, Symbol::X, style);
                if single {
                    out.push_str(&body);
                } else {
                    out.push_str(&format!("{n}: {body}"));
                }
                out.push('\n');
            }
            out
        }
    })
}
