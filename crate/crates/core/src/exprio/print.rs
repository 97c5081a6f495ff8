//! Canonical plain-text rendering of elements.

use crate::algebra::{Element, Monomial};
use crate::Rf;

/// Joins signed terms as `a + b - c`.
pub(crate) fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Splits `c * word` into a sign and body. `word` is `None` for a bare
/// scalar; `alone` marks a scalar that is the whole expression.
pub(crate) fn signed_term(c: &Rf, word: Option<String>, names: &[String], alone: bool) -> (bool, String) {
    if c.is_signed_term() {
        let neg = c.leading_negative();
        let abs = if neg { -c } else { c.clone() };
        let body = match word {
            None => abs.fmt_with(names),
            Some(w) if abs.is_one() => w,
            Some(w) => format!("{}*{}", abs.fmt_with(names), w),
        };
        return (neg, body);
    }
    let text = c.fmt_with(names);
    let wrapped = if c.denom().is_monomial() { format!("({text})") } else { text };
    match word {
        None if alone => (false, c.fmt_with(names)),
        None => (false, wrapped),
        Some(w) => (false, format!("{wrapped}*{w}")),
    }
}

pub fn print_monomial(m: &Monomial) -> String {
    m.text()
}

/// Terms in canonical order (shorter words first), coefficient `1` omitted.
pub fn print_element(e: &Element, names: &[String]) -> String {
    let alone = e.len() == 1;
    join_terms(e.terms().map(|(m, c)| {
        let word = if m.is_one() { None } else { Some(m.text()) };
        signed_term(c, word, names, alone)
    }))
}

/// Prints a scalar.
pub fn print_coeff(c: &Rf, names: &[String]) -> String {
    c.fmt_with(names)
}
