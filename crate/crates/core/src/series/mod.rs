//! Exact scalar arithmetic and truncated formal power series.
//!
//! The building blocks: [`Rational`] coefficients, [`MultiIndex`] exponent
//! vectors, the boxed bivariate series [`BiSeries`], dense univariate series
//! [`UniSeries`], Taylor [`Jet`]s with composition, and the implicit
//! degree-by-degree solver.

pub mod biseries;
pub mod implicit;
pub mod jet;
pub mod multi_index;
pub mod rational;
pub mod uniseries;

pub use biseries::BiSeries;
pub use implicit::implicit_series_solve;
pub use jet::{jet_compose, Jet};
pub use multi_index::MultiIndex;
pub use rational::{factorial, factorial_rat, int, parse_rational, rat, Rational};
pub use uniseries::UniSeries;
