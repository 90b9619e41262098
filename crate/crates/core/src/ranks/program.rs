//! Rank-distribution programs: the mass `x_r` of curves of rank `r` is
//! constrained by `Σ x_r = 1`, the Selmer average `Σ 5^r x_r ≤ avg` (since
//! `5^r ≤ #Sel₅`) and, optionally, equal mass on even and odd ranks.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::simplex::{certify, solve, Constraint, LinearProgram, LpSolution, Relation};
use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};

pub const DEFAULT_RMAX: usize = 40;
pub const STABILITY_RMAX: [usize; 3] = [10, 20, 40];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    None,
    Equidistributed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankObjective {
    /// Maximize `Σ r x_r`.
    AverageRank,
    /// Minimize `x₀ + x₁`.
    Rank01,
    /// Minimize `x₀`.
    Rank0,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProgram {
    pub rmax: usize,
    pub avg: Rational,
    pub parity: Parity,
    pub objective: RankObjective,
    pub lp: LinearProgram,
}

impl RankProgram {
    pub fn new(objective: RankObjective, avg: &Rational, parity: Parity, rmax: usize) -> RankProgram {
        let n = rmax + 1;
        let ones = vec![Rational::one(); n];
        let powers: Vec<Rational> = (0..n).map(|r| Rational::from_integer(num_traits::pow(BigInt::from(5), r))).collect();
        let mut constraints = vec![
            Constraint { coeffs: ones, relation: Relation::Eq, rhs: Rational::one() },
            Constraint { coeffs: powers, relation: Relation::Le, rhs: avg.clone() },
        ];
        if parity == Parity::Equidistributed {
            let even = (0..n).map(|r| if r % 2 == 0 { Rational::one() } else { Rational::zero() }).collect();
            constraints.push(Constraint { coeffs: even, relation: Relation::Eq, rhs: frac(1, 2) });
        }
        let indicator = |k: usize| (0..n).map(|r| if r <= k { Rational::one() } else { Rational::zero() }).collect();
        let (coeffs, maximize) = match objective {
            RankObjective::AverageRank => ((0..n).map(|r| int(r as i64)).collect(), true),
            RankObjective::Rank01 => (indicator(1), false),
            RankObjective::Rank0 => (indicator(0), false),
        };
        RankProgram { rmax, avg: avg.clone(), parity, objective, lp: LinearProgram { objective: coeffs, maximize, constraints } }
    }
}

/// Optimum with a verified dual certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSolution {
    pub program: RankProgram,
    pub solution: LpSolution,
}

pub fn solve_program(program: &RankProgram) -> Result<RankSolution> {
    let solution = solve(&program.lp)?.optimal()?;
    certify(&program.lp, &solution)?;
    Ok(RankSolution { program: program.clone(), solution })
}

/// Solves at every truncation in `rmaxes` and requires the same optimum.
pub fn stable_optimum(objective: RankObjective, avg: &Rational, parity: Parity, rmaxes: &[usize]) -> Result<RankSolution> {
    let mut result: Option<RankSolution> = None;
    for &rmax in rmaxes {
        let s = solve_program(&RankProgram::new(objective, avg, parity, rmax))?;
        if let Some(prev) = &result {
            if prev.solution.value != s.solution.value {
                return Err(Error::LpStatus(format!(
                    "optimum changes with truncation: {} at rmax {} vs {} at rmax {rmax}",
                    prev.solution.value, prev.program.rmax, s.solution.value
                )));
            }
        }
        result = Some(s);
    }
    result.ok_or_else(|| Error::Precondition("no truncation given".into()))
}

/// Whether `x` is feasible for the program and attains `value`.
pub fn witness_attains(program: &RankProgram, x: &[Rational], value: &Rational) -> bool {
    let n = program.rmax + 1;
    if x.len() > n || x.iter().any(|v| v.is_negative()) {
        return false;
    }
    let mut full = x.to_vec();
    full.resize(n, Rational::zero());
    let dot = |c: &[Rational]| -> Rational { c.iter().zip(&full).map(|(a, b)| a * b).sum() };
    let feasible = program.lp.constraints.iter().all(|c| {
        let lhs = dot(&c.coeffs);
        match c.relation {
            Relation::Le => lhs <= c.rhs,
            Relation::Eq => lhs == c.rhs,
            Relation::Ge => lhs >= c.rhs,
        }
    });
    feasible && dot(&program.lp.objective) == *value
}

fn clamp(r: Rational) -> Rational {
    if r.is_negative() {
        Rational::zero()
    } else {
        r
    }
}

/// Hand bound on `x₀ + x₁`. Without parity: mass outside ranks 0 and 1 costs at
/// least 25, so `x + 25(1 − x) ≤ avg`. With parity: the even and odd halves
/// cost at least `x₀ + 25(1/2 − x₀)` and `5x₁ + 125(1/2 − x₁)`, so
/// `24x₀ + 120x₁ ≥ 75 − avg` with `x₀, x₁ ≤ 1/2`.
pub fn rank01_chain(avg: &Rational, parity: Parity) -> Rational {
    match parity {
        Parity::None => clamp((int(25) - avg) / int(24)),
        Parity::Equidistributed => {
            let need = int(75) - avg;
            if need <= int(60) {
                clamp(need / int(120))
            } else {
                frac(1, 2) + (need - int(60)) / int(24)
            }
        }
    }
}

/// Hand bound on `x₀` with parity: `x₀ + 25(1/2 − x₀) + 5/2 ≤ avg`.
pub fn rank0_chain(avg: &Rational) -> Rational {
    clamp((int(15) - avg) / int(24))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CombineMode {
    AvgRank,
    Rank01,
    Rank0,
}

/// `μ · inside + (1 − μ) · outside`: an upper bound for the average rank, a
/// lower bound for the rank densities.
pub fn combine(mu: &Rational, inside: &Rational, outside: &Rational) -> Result<Rational> {
    if mu.is_negative() || *mu > Rational::one() {
        return Err(Error::Precondition(format!("family density {mu} is not in [0, 1]")));
    }
    Ok(mu * inside + (Rational::one() - mu) * outside)
}

/// Default outside-family value of each mode: the no-parity optimum for the
/// average rank and rank ≤ 1, and nothing for rank 0.
pub fn outside_default(mode: CombineMode, avg: &Rational) -> Result<Rational> {
    Ok(match mode {
        CombineMode::AvgRank => stable_optimum(RankObjective::AverageRank, avg, Parity::None, &[DEFAULT_RMAX])?.solution.value,
        CombineMode::Rank01 => stable_optimum(RankObjective::Rank01, avg, Parity::None, &[DEFAULT_RMAX])?.solution.value,
        CombineMode::Rank0 => Rational::zero(),
    })
}
