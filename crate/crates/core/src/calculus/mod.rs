//! Derived operators (vector fields, Cartan-Maurer forms, Lie derivatives),
//! their action on the function/form module, and the identity catalog.

mod catalog;

pub(crate) use catalog::{custom, known};
pub use catalog::{
    identity_catalog, verify_all, verify_identity, IdentityKind, IdentitySpec, Status, VerifyResult,
};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{
    build_rule_table, AlgebraError, CalculusType, Element, Generator, Letter, Monomial, RuleTable,
};
use crate::coeffs::qnumber;
use crate::exprio::{self, ExprError};
use crate::{Rational, Rf};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalculusError {
    #[error("argument contains operator generators: {0}")]
    NotAFunctionArgument(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("identity `{0}` does not apply to this calculus type")]
    NotApplicable(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Hopf(#[from] crate::hopf::HopfError),
    #[error(transparent)]
    Covariance(#[from] crate::covariance::CovarianceError),
}

/// Named composite operators and forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DerivedSymbol {
    /// `x px + th pth`
    H,
    /// `x pth`
    Nabla,
    /// `1 + (Q - 1) H`
    T,
    /// `dx x^-1`
    OmegaX,
    /// `dth x^-1 - dx x^-1 th x^-1`
    OmegaTheta,
    /// `ix d + d ix`
    LX,
    /// `ith d - d ith`
    LTheta,
}

impl DerivedSymbol {
    pub const ALL: [DerivedSymbol; 7] = [
        DerivedSymbol::H,
        DerivedSymbol::Nabla,
        DerivedSymbol::T,
        DerivedSymbol::OmegaX,
        DerivedSymbol::OmegaTheta,
        DerivedSymbol::LX,
        DerivedSymbol::LTheta,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            DerivedSymbol::H => "H",
            DerivedSymbol::Nabla => "Nb",
            DerivedSymbol::T => "T",
            DerivedSymbol::OmegaX => "wx",
            DerivedSymbol::OmegaTheta => "wth",
            DerivedSymbol::LX => "Lx",
            DerivedSymbol::LTheta => "Lth",
        }
    }

    pub fn from_symbol(s: &str) -> Option<DerivedSymbol> {
        Self::ALL.into_iter().find(|d| d.symbol() == s)
    }
}

/// A calculus type together with its rule table and derived symbols.
///
/// `assignment` records parameters fixed to exact values; the coefficient
/// ring keeps all parameter names so output stays comparable.
#[derive(Debug)]
pub struct Calculus {
    ct: CalculusType,
    table: RuleTable,
    derived: BTreeMap<DerivedSymbol, Element>,
    assignment: BTreeMap<String, Rational>,
}

impl Calculus {
    pub fn new(ct: CalculusType) -> Result<Self, AlgebraError> {
        Self::with_assignment(ct, BTreeMap::new())
    }

    /// Specialises `ct` at `assignment` and builds the table of the result.
    pub fn specialized(
        ct: &CalculusType,
        assignment: BTreeMap<String, Rational>,
    ) -> Result<Self, AlgebraError> {
        let spec = ct.specialize(&assignment)?;
        Self::with_assignment(spec, assignment)
    }

    fn with_assignment(
        ct: CalculusType,
        assignment: BTreeMap<String, Rational>,
    ) -> Result<Self, AlgebraError> {
        let table = build_rule_table(&ct)?;
        let mut calc = Calculus {
            ct,
            table,
            derived: BTreeMap::new(),
            assignment,
        };
        for sym in DerivedSymbol::ALL {
            let e = calc.build_derived(sym)?;
            calc.derived.insert(sym, e);
        }
        Ok(calc)
    }

    fn build_derived(&self, sym: DerivedSymbol) -> Result<Element, AlgebraError> {
        use Generator::*;
        let t = &self.table;
        let w = |ls: &[Letter]| t.normalize_word(ls);
        let g = Letter::Gen;
        Ok(match sym {
            DerivedSymbol::H => w(&[g(X), g(Px)])?.add(&w(&[g(Th), g(Pth)])?),
            DerivedSymbol::Nabla => w(&[g(X), g(Pth)])?,
            DerivedSymbol::T => {
                let h = self.build_derived(DerivedSymbol::H)?;
                t.one().add(&h.scale(&(&self.ct.q_big - &self.ct.one())))
            }
            DerivedSymbol::OmegaX => w(&[g(Dx), Letter::XInv])?,
            DerivedSymbol::OmegaTheta => {
                w(&[g(Dth), Letter::XInv])?.sub(&w(&[g(Dx), Letter::XInv, g(Th), Letter::XInv])?)
            }
            DerivedSymbol::LX => w(&[g(Ix), g(D)])?.add(&w(&[g(D), g(Ix)])?),
            DerivedSymbol::LTheta => w(&[g(Ith), g(D)])?.sub(&w(&[g(D), g(Ith)])?),
        })
    }

    pub fn ct(&self) -> &CalculusType {
        &self.ct
    }

    pub fn table(&self) -> &RuleTable {
        &self.table
    }

    pub fn names(&self) -> &[String] {
        self.ct.names()
    }

    pub fn nvars(&self) -> usize {
        self.ct.nvars()
    }

    pub fn assignment(&self) -> &BTreeMap<String, Rational> {
        &self.assignment
    }

    pub fn derived(&self, sym: DerivedSymbol) -> &Element {
        &self.derived[&sym]
    }

    pub fn letter(&self, g: Generator) -> Element {
        self.table.letter(Letter::Gen(g))
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.table.multiply(a, b)
    }

    pub fn product(&self, factors: &[Element]) -> Result<Element, AlgebraError> {
        self.table.product(factors)
    }

    /// Parses and normalises an expression in this calculus.
    pub fn parse(&self, text: &str) -> Result<Element, ExprError> {
        exprio::eval_str(text, self)
    }

    /// A parameter value: the assigned rational, or the free variable.
    pub fn param(&self, name: &str) -> Option<Rf> {
        let i = self.ct.params().index_of(name)?;
        Some(match self.assignment.get(name) {
            Some(v) => Rf::constant(self.nvars(), v.clone()),
            None => Rf::var(self.nvars(), i),
        })
    }

    pub fn text(&self, e: &Element) -> String {
        e.text(self.names())
    }

    /// `op` applied to a function or form: normal-orders `op * f` and drops
    /// every term still carrying an operator generator.
    pub fn act(&self, op: &Element, f: &Element) -> Result<Element, CalculusError> {
        if let Some((m, _)) = f.terms().find(|(m, _)| !m.is_function_form()) {
            return Err(CalculusError::NotAFunctionArgument(m.text()));
        }
        Ok(vacuum(&self.multiply(op, f)?))
    }

    pub fn exterior_derivative(&self, w: &Element) -> Result<Element, CalculusError> {
        self.act(&self.letter(Generator::D), w)
    }

    /// Scalar part of `H` on `x^m th^eps`: `(1 - Q^(m+eps)) / (1 - Q)`.
    pub fn closed_form_h(&self, m: i64, eps: i64) -> Rf {
        qnumber(m + eps, &self.ct.q_big)
    }

    /// Basis `dth^b x^m th^eps` of the function/form sector used by
    /// action-level checks, for `|m| <= bound`, `b <= 2`.
    pub fn action_basis(bound: i32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for b in 0..=2 {
            for m in -bound..=bound {
                for eps in 0..=1 {
                    out.push(Monomial::basis(m, eps, b));
                }
            }
        }
        out
    }
}

/// Drops terms with operator generators (the vacuum projection).
pub fn vacuum(e: &Element) -> Element {
    e.filter(Monomial::is_function_form)
}

/// Eigenvalue of the number operator on `x^m th^eps`.
pub fn number_op(m: i64, eps: i64) -> i64 {
    m + eps
}
