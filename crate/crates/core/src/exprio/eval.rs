//! Evaluation of parsed expressions into normal-ordered elements.

use thiserror::Error;

use super::parse::{parse_expr, parse_tensor, Expr, ParseError, COEFFICIENT_SYMBOLS};
use crate::algebra::{AlgebraError, Element, Generator, Letter, Monomial};
use crate::calculus::{Calculus, DerivedSymbol};
use crate::coeffs::CoeffError;
use crate::hopf::{UElement, UWord};
use crate::{Rational, Rf};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("symbol `{0}` is not available here")]
    Unavailable(String),
    #[error("bad exponent: {0}")]
    BadExponent(String),
    #[error("divisor is not a nonzero scalar")]
    BadDivisor,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl ExprError {
    /// Whether the error stems from the input text rather than the engine.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, ExprError::Algebra(_))
    }
}

/// Value of a coefficient symbol (`Q`, `Q11`, ..., `Qp`).
pub fn coefficient(calc: &Calculus, name: &str) -> Option<Rf> {
    let i = COEFFICIENT_SYMBOLS.iter().position(|s| *s == name)?;
    Some(calc.ct().values()[i].clone())
}

/// A scalar-valued symbol: parameter or coefficient.
pub fn scalar_symbol(calc: &Calculus, name: &str) -> Option<Rf> {
    calc.param(name).or_else(|| coefficient(calc, name))
}

pub fn eval(expr: &Expr, calc: &Calculus) -> Result<Element, ExprError> {
    let n = calc.nvars();
    Ok(match expr {
        Expr::Num(v) => Element::scalar(Rf::constant(n, Rational::from_integer(v.clone()))),
        Expr::Sym(s) => symbol(calc, s)?,
        Expr::Neg(a) => eval(a, calc)?.neg(),
        Expr::Add(a, b) => eval(a, calc)?.add(&eval(b, calc)?),
        Expr::Sub(a, b) => eval(a, calc)?.sub(&eval(b, calc)?),
        Expr::Mul(a, b) => calc.multiply(&eval(a, calc)?, &eval(b, calc)?)?,
        Expr::Div(a, b) => {
            let d = eval(b, calc)?
                .as_scalar()
                .filter(|c| !c.is_zero())
                .ok_or(ExprError::BadDivisor)?;
            eval(a, calc)?.scale(&d.inv()?)
        }
        Expr::Pow(a, k) => power(calc, &eval(a, calc)?, *k)?,
    })
}

fn symbol(calc: &Calculus, s: &str) -> Result<Element, ExprError> {
    if s == "xi" {
        return Ok(calc.table().letter(Letter::XInv));
    }
    if let Some(g) = Generator::from_symbol(s) {
        return Ok(calc.letter(g));
    }
    if let Some(d) = DerivedSymbol::from_symbol(s) {
        return Ok(calc.derived(d).clone());
    }
    scalar_symbol(calc, s)
        .map(Element::scalar)
        .ok_or_else(|| ExprError::Unavailable(s.to_owned()))
}

fn power(calc: &Calculus, base: &Element, k: i64) -> Result<Element, ExprError> {
    if let Some(c) = base.as_scalar() {
        return Ok(Element::scalar(c.pow(k)?));
    }
    let unit = if k >= 0 {
        base.clone()
    } else if *base == calc.letter(Generator::X) {
        calc.table().letter(Letter::XInv)
    } else {
        return Err(ExprError::BadExponent(format!(
            "negative power of `{}`",
            calc.text(base)
        )));
    };
    let mut acc = calc.table().one();
    for _ in 0..k.unsigned_abs() {
        acc = calc.multiply(&acc, &unit)?;
    }
    Ok(acc)
}

/// Evaluates an expression in the dual algebra generated by `T`, `K` and
/// `Nb`. Negative powers are allowed on group-like terms only.
pub fn eval_dual(expr: &Expr, calc: &Calculus) -> Result<UElement, ExprError> {
    let n = calc.nvars();
    Ok(match expr {
        Expr::Num(v) => UElement::one(n).scale(&Rf::constant(n, Rational::from_integer(v.clone()))),
        Expr::Sym(s) => match s.as_str() {
            "T" => UElement::t(n),
            "K" => UElement::k(n),
            "Nb" => UElement::nabla(n),
            _ => UElement::one(n).scale(
                &scalar_symbol(calc, s).ok_or_else(|| ExprError::Unavailable(s.to_owned()))?,
            ),
        },
        Expr::Neg(a) => eval_dual(a, calc)?.scale(&Rf::int(n, -1)),
        Expr::Add(a, b) => eval_dual(a, calc)?.add(&eval_dual(b, calc)?),
        Expr::Sub(a, b) => eval_dual(a, calc)?.sub(&eval_dual(b, calc)?),
        Expr::Mul(a, b) => eval_dual(a, calc)?.mul(&eval_dual(b, calc)?),
        Expr::Div(a, b) => {
            let d = dual_scalar(&eval_dual(b, calc)?)
                .filter(|c| !c.is_zero())
                .ok_or(ExprError::BadDivisor)?;
            eval_dual(a, calc)?.scale(&d.inv()?)
        }
        Expr::Pow(a, k) => {
            let base = eval_dual(a, calc)?;
            let unit = if *k >= 0 {
                base
            } else {
                let mut it = base.terms();
                match (it.next(), it.next()) {
                    (Some((w, c)), None) if !w.nabla => {
                        let inv = UWord { t: -w.t, k: -w.k, nabla: false };
                        UElement::word(n, inv).scale(&c.inv()?)
                    }
                    _ => return Err(ExprError::BadExponent(format!("negative power of `{a}`"))),
                }
            };
            let mut acc = UElement::one(n);
            for _ in 0..k.unsigned_abs() {
                acc = acc.mul(&unit);
            }
            acc
        }
    })
}

fn dual_scalar(u: &UElement) -> Option<Rf> {
    let mut it = u.terms();
    match (it.next(), it.next()) {
        (None, _) => Some(Rf::zero(u.nvars())),
        (Some((w, c)), None) if *w == UWord::ONE => Some(c.clone()),
        _ => None,
    }
}

pub fn eval_dual_str(text: &str, calc: &Calculus) -> Result<UElement, ExprError> {
    eval_dual(&parse_expr(text)?, calc)
}

pub fn eval_str(text: &str, calc: &Calculus) -> Result<Element, ExprError> {
    eval(&parse_expr(text)?, calc)
}

/// Evaluates each slot of a tensor expression independently.
pub fn eval_tensor_str(text: &str, calc: &Calculus) -> Result<Vec<Element>, ExprError> {
    parse_tensor(text)?.iter().map(|e| eval(e, calc)).collect()
}

/// The monomial of `e` when it is a single term with coefficient one.
pub fn as_monomial(e: &Element) -> Option<Monomial> {
    let mut it = e.terms();
    match (it.next(), it.next()) {
        (Some((m, c)), None) if c.is_one() => Some(*m),
        _ => None,
    }
}
