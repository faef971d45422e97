//! Human-facing renderings: compact text and LaTeX.
//!
//! The canonical `Display` of [`RationalFunction`] is the machine form used
//! in reports. These renderings juxtapose factors, collect a polynomial in
//! one variable, and in LaTeX mode use `\frac` and braced exponents.

use std::fmt::Write;

use num_traits::{One, Signed};

use crate::coeff::{MultiPoly, RationalFunction, Symbol};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

fn power(s: Symbol, e: usize, style: Style) -> String {
    match (e, style) {
        (1, _) => s.to_string(),
        (_, Style::Text) => format!("{s}^{e}"),
        (_, Style::Latex) => format!("{s}^{{{e}}}"),
    }
}

fn poly(p: &MultiPoly, style: Style) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms_ascending().enumerate() {
        match (c.is_negative(), idx) {
            (true, _) => out.push('-'),
            (false, 0) => {}
            (false, _) => out.push('+'),
        }
        let abs = c.abs();
        let mono: String = Symbol::ALL
            .iter()
            .filter(|&&s| m.exp(s) > 0)
            .map(|&s| power(s, m.exp(s) as usize, style))
            .collect();
        if mono.is_empty() || !abs.is_one() {
            match style {
                Style::Latex if !abs.denom().is_one() => {
                    write!(out, "\\frac{{{}}}{{{}}}", abs.numer(), abs.denom()).unwrap()
                }
                _ => write!(out, "{abs}").unwrap(),
            }
        }
        out.push_str(&mono);
    }
    out
}

/// Compact rendering of a rational function.
pub fn rational(f: &RationalFunction, style: Style) -> String {
    if let Some(d) = f.den().constant_value() {
        return poly(&f.num().scale(&d.recip()), style);
    }
    let num = poly(f.num(), style);
    let den = poly(f.den(), style);
    match style {
        Style::Latex => format!("\\frac{{{num}}}{{{den}}}"),
        Style::Text => {
            let wrap = |s: String, p: &MultiPoly| if p.len() > 1 { format!("({s})") } else { s };
            format!("{}/{}", wrap(num, f.num()), wrap(den, f.den()))
        }
    }
}

/// One term `c var^j`, with the coefficient parenthesized when it is a sum.
fn term(c: &RationalFunction, var: Symbol, j: usize, style: Style) -> String {
    if j == 0 {
        return rational(c, style);
    }
    let p = power(var, j, style);
    if c.is_one() {
        return p;
    }
    if c.neg().is_one() {
        return format!("-{p}");
    }
    let body = rational(c, style);
    let single = c.num().len() == 1 && (style == Style::Latex || c.den().is_one());
    if single {
        format!("{body}{p}")
    } else {
        format!("({body}){p}")
    }
}

fn join(terms: Vec<String>) -> String {
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        match (i, t.strip_prefix('-')) {
            (0, _) => out.push_str(&t),
            (_, Some(rest)) => write!(out, " - {rest}").unwrap(),
            (_, None) => write!(out, " + {t}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `f` as a polynomial in `var` with coefficients free of it, e.g.
/// `1 + (1+q)x + x^2`. Falls back to [`rational`] when the denominator
/// depends on `var`.
pub fn collected(f: &RationalFunction, var: Symbol, style: Style) -> String {
    let (nums, dens) = f.split_in(var);
    if dens.len() > 1 {
        return rational(f, style);
    }
    let den = &dens[0];
    let terms = nums
        .iter()
        .enumerate()
        .filter(|(_, n)| !n.is_zero())
        .map(|(j, n)| {
            let c = RationalFunction::new(n.clone(), den.clone()).expect("denominator is nonzero");
            term(&c, var, j, style)
        })
        .collect();
    join(terms)
}

/// `sum c_j var^j + O(var^{N+1})`.
pub fn series(s: &TruncatedSeries, style: Style) -> String {
    let terms: Vec<String> = s
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| term(c, s.var(), j, style))
        .collect();
    let tail = match style {
        Style::Text => format!("O({})", power(s.var(), s.order() + 1, style)),
        Style::Latex => format!("O\\left({}\\right)", power(s.var(), s.order() + 1, style)),
    };
    let body = join(terms);
    if body == "0" {
        tail
    } else {
        format!("{body} + {tail}")
    }
}
