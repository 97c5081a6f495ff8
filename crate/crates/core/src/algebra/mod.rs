//! The superalgebra of functions, forms and operators on the superplane,
//! with normal ordering by rewrite rules.

mod build;
mod calculus_type;
mod confluence;
mod element;
mod generator;
mod monomial;
mod rules;

pub use build::{build_rule_table, round_trip_failures};
pub use calculus_type::CalculusType;
pub use confluence::{check_confluence, ConfluenceReport, ConfluenceViolation};
pub use element::{Element, ElementParity};
pub use generator::{Generator, Letter, Parity, PowerDomain, GENERATORS};
pub use monomial::Monomial;
pub use rules::RuleTable;

use crate::coeffs::CoeffError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("inconsistent calculus type: {0}")]
    InconsistentType(String),
    #[error("rule cannot be inverted: {0}")]
    NonInvertibleRule(String),
    #[error("no rule for {0}")]
    MissingRule(String),
    #[error("unsupported generator: {0}")]
    UnsupportedGenerator(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
