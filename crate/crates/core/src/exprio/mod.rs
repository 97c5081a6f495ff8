//! Expression language: parsing, canonical printing and reports.

mod eval;
mod parse;
mod print;
mod report;

pub use eval::{as_monomial, coefficient, eval, eval_dual, eval_dual_str, eval_str, eval_tensor_str, scalar_symbol, ExprError};
pub use parse::{
    is_known_symbol, parse_expr, parse_tensor, Expr, ParseError, COEFFICIENT_SYMBOLS,
    DERIVED_SYMBOLS, DUAL_SYMBOLS, PARAMETER_SYMBOLS,
};
pub use print::{print_coeff, print_element, print_monomial};
pub use report::{emit_report, Report, ReportEntry, ReportFormat};
pub(crate) use print::{join_terms, signed_term};
