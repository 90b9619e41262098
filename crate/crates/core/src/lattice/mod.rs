//! Counts of invariant pairs by height and a lattice-point versus volume
//! harness for dilated regions.

pub mod davenport;
pub mod heights;

pub use davenport::{davenport_demo, exact_volume, geometric_grid, DavenportSample, Polynomial, SemialgebraicRegion};
pub use heights::{asymptotic_constant, count_ij, count_ij_total, fitted_exponent, HeightRegion, IjCounts, Sign};
