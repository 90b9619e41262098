//! Exact verification toolkit for the arithmetic of 5-Selmer averages.
//!
//! The crate is split by subject:
//!
//! * [`algebra`]: quintuples of 5×5 skew-symmetric matrices, Pfaffians,
//!   sub-Pfaffian quadrics, the twisted `GL5 × GL5` action and the
//!   reducibility screens.
//! * [`cusp`]: torus weights of the 50 coordinates, the cuspidal partition and
//!   the monomial certificates bounding each cuspidal piece.
//! * [`roots`]: reduction types, local twist signs, local densities, the 2-
//!   and 3-adic density tables and Euler-product lower bounds for the
//!   equidistributed root-number families.
//! * [`ranks`]: an exact rational simplex solver and the rank-distribution
//!   programs built on it.
//! * [`lattice`]: counts of invariant pairs by height and a small
//!   lattice-point versus volume harness.
//!
//! Everything that decides a verification outcome is computed in exact
//! rational arithmetic.

pub mod algebra;
pub mod cusp;
pub mod error;
pub mod lattice;
pub mod ranks;
pub mod rational;
pub mod report;
pub mod roots;
pub mod suites;

pub use error::{Error, Result};
pub use rational::Rational;
