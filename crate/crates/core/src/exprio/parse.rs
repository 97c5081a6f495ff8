//! Recursive-descent parser for the expression language.
//!
//! ```text
//! tensor := expr { "(x)" expr }
//! expr   := ["-"] term { ("+" | "-") term }
//! term   := factor { ("*" | "/") factor }
//! factor := atom [ "^" ["-"] integer ]
//! atom   := integer | symbol | "(" expr ")"
//! ```
//!
//! `(x)` is always the tensor separator; write a bare `x` for the
//! coordinate.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::Generator;
use crate::Rational;

/// Symbols accepted by the parser; which of them are meaningful depends on
/// the evaluation context.
pub const DERIVED_SYMBOLS: [&str; 7] = ["H", "Nb", "T", "wx", "wth", "Lx", "Lth"];
pub const PARAMETER_SYMBOLS: [&str; 3] = ["q", "r", "p"];
/// Commutation coefficients of the active calculus type.
pub const COEFFICIENT_SYMBOLS: [&str; 6] = ["Q", "Q11", "Q12", "Q21", "Q22", "Qp"];
/// Generators of the dual algebra (T and Nb are shared with the table above).
pub const DUAL_SYMBOLS: [&str; 1] = ["K"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("bad exponent: {0}")]
    BadExponent(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Division; the divisor must evaluate to a nonzero scalar.
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    /// Rational literal as an expression.
    pub fn rational(r: &Rational) -> Expr {
        let n = Expr::Num(r.numer().clone());
        if r.is_integer() {
            n
        } else {
            Expr::Div(Box::new(n), Box::new(Expr::Num(r.denom().clone())))
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Sym(s) => f.write_str(s),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/{b}"),
            Expr::Pow(a, k) => write!(f, "{a}^{k}"),
        }
    }
}

pub fn is_known_symbol(s: &str) -> bool {
    s == "xi"
        || Generator::from_symbol(s).is_some()
        || DERIVED_SYMBOLS.contains(&s)
        || PARAMETER_SYMBOLS.contains(&s)
        || COEFFICIENT_SYMBOLS.contains(&s)
        || DUAL_SYMBOLS.contains(&s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Tensor,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if text[i..].starts_with("(x)") {
            out.push((i, Tok::Tensor));
            i += 3;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_owned())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(ParseError::SyntaxError {
                    pos: i,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::SyntaxError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.eat(&Tok::Minus) {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
            } else if self.eat(&Tok::Slash) {
                acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let atom = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(atom);
        }
        let neg = self.eat(&Tok::Minus);
        let k = match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.at += 1;
                i64::try_from(n).or_else(|_| self.error("exponent too large"))?
            }
            _ => return self.error("exponent must be an integer literal"),
        };
        let k = if neg { -k } else { k };
        if k < 0 {
            if let Expr::Sym(s) = &atom {
                if let Some(g) = Generator::from_symbol(s) {
                    if g != Generator::X {
                        return Err(ParseError::BadExponent(format!(
                            "`{s}` admits no negative powers"
                        )));
                    }
                }
            }
        }
        Ok(Expr::Pow(Box::new(atom), k))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                if !is_known_symbol(&s) {
                    return Err(ParseError::UnknownSymbol(s));
                }
                self.at += 1;
                Ok(Expr::Sym(s))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.error("expected `)`");
                }
                Ok(e)
            }
            Some(Tok::Tensor) => self.error("tensor separator is only allowed at top level"),
            Some(t) => self.error(format!("unexpected token {t:?}")),
            None => self.error("unexpected end of input"),
        }
    }
}

fn parser(text: &str) -> Result<Parser, ParseError> {
    Ok(Parser {
        toks: tokenize(text)?,
        at: 0,
        end: text.len(),
    })
}

/// Parses a single expression; the tensor separator is rejected.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = parser(text)?;
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

/// Parses `a (x) b (x) ...`; a plain expression yields one slot.
pub fn parse_tensor(text: &str) -> Result<Vec<Expr>, ParseError> {
    let mut p = parser(text)?;
    let mut slots = vec![p.expr()?];
    while p.eat(&Tok::Tensor) {
        slots.push(p.expr()?);
    }
    if p.peek().is_some() {
        return p.error("unexpected trailing input");
    }
    Ok(slots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> Box<Expr> {
        Box::new(Expr::Sym(s.to_owned()))
    }

    #[test]
    fn products_keep_order() {
        assert_eq!(parse_expr("px*x").unwrap(), Expr::Mul(sym("px"), sym("x")));
        assert_eq!(
            parse_expr("x^-3*th").unwrap(),
            Expr::Mul(Box::new(Expr::Pow(sym("x"), -3)), sym("th"))
        );
    }

    #[test]
    fn two_term_sum() {
        let e = parse_expr("ix*dx + (q^-1)*(r-1)*dth*ith").unwrap();
        assert!(matches!(e, Expr::Add(_, _)));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_expr("x^q"), Err(ParseError::SyntaxError { .. })));
        assert!(matches!(parse_expr("dx^-1"), Err(ParseError::BadExponent(_))));
        assert!(matches!(parse_expr("y"), Err(ParseError::UnknownSymbol(_))));
        assert!(matches!(parse_expr("x th"), Err(ParseError::SyntaxError { pos: 2, .. })));
        assert!(matches!(parse_expr("x (x) x"), Err(ParseError::SyntaxError { .. })));
        assert!(parse_expr("dx^2").is_ok());
    }

    #[test]
    fn tensors() {
        assert_eq!(parse_tensor("x (x) th").unwrap().len(), 2);
        assert_eq!(parse_tensor("-x*th").unwrap().len(), 1);
    }
}
