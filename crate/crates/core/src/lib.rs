//! Exact tools for Calabi's projective-inducibility criterion.
//!
//! A real-analytic Kähler potential admits a local holomorphic isometry into
//! complex projective space only if the coefficient matrix of `e^D0 - 1`
//! over the graded monomial basis is positive semidefinite, where `D0` is
//! the diastasis at the chart origin. This crate expands catalog potentials
//! (flat, Fubini-Study, the two Ricci-flat Lee families, the Taub-NUT
//! family) into exact rational series, assembles that matrix, and hunts for
//! negative witnesses with no floating-point arithmetic on the exact path.
//!
//! Modules:
//! - [`series`]: rationals, multi-indices, boxed bivariate series, jets,
//!   and the implicit degree-by-degree solver;
//! - [`profile`]: implicit ODEs of the profile functions and their jets;
//! - [`catalog`]: analytic extensions of the catalog potentials;
//! - [`engine`]: diastasis, coefficient matrix, exact positivity test;
//! - [`oracle`]: advisory floating-point cross-checks.

pub mod catalog;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod profile;
pub mod series;

pub use catalog::{extension, n_series_ii, n_series_iii, slice_extension, taubnut_extension, MetricSpec};
pub use engine::{
    calabi_matrix, diagonal_derivative, diastasis_at_origin, first_obstruction, monomial_basis,
    psd_check, CalabiMatrix, Verdict,
};
pub use error::{Error, Result};
pub use oracle::{
    finite_difference_check, numeric_potential, numeric_psd, oracle_report, FdEntry,
    NumericReport, EIGEN_DEAD_BAND, FD_TOLERANCE,
};
pub use profile::{
    lee2_ode, lee3_ode, mii_closed_jet, ode_residual, solve_profile_jet, ImplicitProfileOde,
    OdeTerm,
};
pub use series::{
    factorial, factorial_rat, implicit_series_solve, int, jet_compose, parse_rational, rat,
    BiSeries, Jet, MultiIndex, Rational, UniSeries,
};
