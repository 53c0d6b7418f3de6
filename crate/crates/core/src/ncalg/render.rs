//! Canonical text rendering.
//!
//! Terms appear in storage order (words ascending, then coefficient
//! monomials ascending). Inside a term the factors follow the [`Symbol`]
//! order, joined by ` * ` for positive and ` / ` for negative exponents,
//! with operator letters last.

use num_traits::{One, Signed};

use super::coeff::{rational_text, CoeffPoly, Monomial, Rational, Symbol};
use super::poly::{Letter, NCPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// `λ` printed as `lambda`.
    Lambda,
    /// `λ = ħ/i` rewritten with `λ² = −ħ²`: even powers become `hbar^n`
    /// with the sign folded into the coefficient, odd powers keep a `/ i`.
    Hbar,
}

struct Factor {
    name: &'static str,
    exp: i32,
}

fn factor_text(f: &Factor) -> String {
    match f.exp.abs() {
        1 => f.name.to_string(),
        e => format!("{}^{}", f.name, e),
    }
}

/// Returns (is_negative, body) for one summand.
fn term_text(c: &Rational, m: &Monomial, word: &[Letter], style: Style) -> (bool, String) {
    let mut negative = c.is_negative();
    let mut factors = Vec::new();
    let mut over_i = false;
    for s in Symbol::ALL {
        let e = m.exp(s);
        if e == 0 {
            continue;
        }
        if s == Symbol::Lambda && style == Style::Hbar {
            let half = e.div_euclid(2);
            if half % 2 != 0 {
                negative = !negative;
            }
            over_i = e.rem_euclid(2) == 1;
            factors.push(Factor { name: "hbar", exp: e });
            continue;
        }
        factors.push(Factor { name: s.name(), exp: e });
    }
    let mut letters: Vec<Factor> = Vec::new();
    for l in word {
        match letters.last_mut() {
            Some(f) if f.name == l.name() => f.exp += 1,
            _ => letters.push(Factor {
                name: l.name(),
                exp: 1,
            }),
        }
    }
    // Positive symbol factors and letters share the leading position.
    let lead_positive = factors
        .first()
        .map(|f| f.exp > 0)
        .unwrap_or(!letters.is_empty());
    let mut out = String::new();
    let show_coeff = !c.abs().is_one() || !lead_positive;
    if show_coeff {
        out.push_str(&rational_text(c));
    }
    let mut first = !show_coeff;
    for f in factors.iter() {
        if first {
            out.push_str(&factor_text(f));
            first = false;
        } else if f.exp > 0 {
            out.push_str(" * ");
            out.push_str(&factor_text(f));
        } else {
            out.push_str(" / ");
            out.push_str(&factor_text(f));
        }
    }
    if over_i {
        out.push_str(" / i");
    }
    for f in &letters {
        if !first {
            out.push_str(" * ");
        }
        out.push_str(&factor_text(f));
        first = false;
    }
    (negative, out)
}

fn join(summands: Vec<(bool, String)>) -> String {
    if summands.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body)) in summands.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

pub fn render(x: &NCPoly, style: Style) -> String {
    let mut summands = Vec::new();
    for (w, c) in x.terms() {
        for (m, v) in c.terms() {
            summands.push(term_text(v, m, w, style));
        }
    }
    join(summands)
}

pub fn render_coeff(x: &CoeffPoly, style: Style) -> String {
    join(x.terms().map(|(m, v)| term_text(v, m, &[], style)).collect())
}

impl std::fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render_coeff(self, Style::Lambda))
    }
}
