//! Exact symbolic engine for the Cartan calculus on the quantum superplane.
//!
//! Coefficients are rational functions over `BigRational` in the
//! deformation parameters; see [`coeffs`] for the generic layer.

pub mod algebra;
pub mod calculus;
pub mod coeffs;
pub mod covariance;
pub mod exprio;
pub mod hopf;

/// Exact rational scalar used by every concrete engine type.
pub type Rational = num_rational::BigRational;
/// Coefficient type of the engine.
pub type Rf = coeffs::RationalFunction<Rational>;
