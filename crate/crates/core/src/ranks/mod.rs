//! Exact rational linear programming and the rank-distribution bounds built
//! on it.

pub mod gadgets;
pub mod program;
pub mod simplex;

pub use gadgets::{inequality_report, verify_inequality, InequalityKind, InequalityResult};
pub use program::{
    combine, outside_default, rank01_chain, rank0_chain, solve_program, stable_optimum, witness_attains, CombineMode, Parity,
    RankObjective, RankProgram, RankSolution, DEFAULT_RMAX, STABILITY_RMAX,
};
pub use simplex::{certify, solve, Constraint, LinearProgram, LpOutcome, LpSolution, Relation};
