//! Exact two-phase simplex over the rationals with Bland's rule.
//!
//! Every optimal solution carries a dual vector; [`certify`] re-checks primal
//! feasibility, dual feasibility and equality of the two objective values by
//! substitution, so an optimum is never trusted on the solver's word alone.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Optimize `objective · x` subject to the constraints and `x ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub maximize: bool,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub x: Vec<Rational>,
    /// One multiplier per constraint. For a maximum, `y ≥ 0` on `≤` rows,
    /// `y ≤ 0` on `≥` rows and `Aᵀy ≥ c`; for a minimum the signs and the
    /// inequality flip. In both cases `b · y` equals the optimum.
    pub dual: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal(self) -> Result<LpSolution> {
        match self {
            LpOutcome::Optimal(s) => Ok(s),
            LpOutcome::Infeasible => Err(Error::LpStatus("infeasible".into())),
            LpOutcome::Unbounded => Err(Error::LpStatus("unbounded".into())),
        }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        self.rhs[r] /= &p;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for j in 0..self.rows[i].len() {
                let d = &f * &self.rows[r][j];
                self.rows[i][j] -= d;
            }
            let d = &f * &self.rhs[r];
            self.rhs[i] -= d;
        }
        self.basis[r] = c;
    }

    fn reduced_cost(&self, cost: &[Rational], j: usize) -> Rational {
        let z: Rational = self.basis.iter().zip(&self.rows).map(|(&b, row)| &cost[b] * &row[j]).sum();
        &cost[j] - z
    }

    /// Maximizes `cost` over columns with `allowed[j]`; `false` if unbounded.
    fn run(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..cost.len()).find(|&j| allowed[j] && !self.basis.contains(&j) && self.reduced_cost(cost, j).is_positive());
            let Some(c) = entering else { return true };
            let mut best: Option<(Rational, usize)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][c].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][c];
                    let better = match &best {
                        None => true,
                        Some((r, k)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*k]),
                    };
                    if better {
                        best = Some((ratio, i));
                    }
                }
            }
            match best {
                Some((_, r)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// Solves `m x = v` for a nonsingular square `m`.
fn solve_square(mut m: Vec<Vec<Rational>>, mut v: Vec<Rational>) -> Vec<Rational> {
    let n = v.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("basis matrix is nonsingular");
        m.swap(col, piv);
        v.swap(col, piv);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                for k in col..n {
                    let d = &f * &m[col][k];
                    m[r][k] -= d;
                }
                let d = &f * &v[col];
                v[r] -= d;
            }
        }
    }
    (0..n).map(|i| &v[i] / &m[i][i]).collect()
}

pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    let n = lp.objective.len();
    let m = lp.constraints.len();
    if lp.constraints.iter().any(|c| c.coeffs.len() != n) {
        return Err(Error::Dimension("constraint width differs from the objective".into()));
    }
    // Normalize to nonnegative right-hand sides.
    let mut flip = vec![Rational::one(); m];
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = Vec::with_capacity(m);
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.rhs.is_negative() {
            flip[i] = -Rational::one();
            let rel = match c.relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
            rows.push((c.coeffs.iter().map(|x| -x).collect(), rel, -c.rhs.clone()));
        } else {
            rows.push((c.coeffs.clone(), c.relation, c.rhs.clone()));
        }
    }
    // Columns: originals, one slack or surplus per inequality, one artificial
    // per `≥` or `=` row.
    let mut slack_col = vec![None; m];
    let mut art_col = vec![None; m];
    let mut width = n;
    for (i, (_, rel, _)) in rows.iter().enumerate() {
        if *rel != Relation::Eq {
            slack_col[i] = Some(width);
            width += 1;
        }
    }
    for (i, (_, rel, _)) in rows.iter().enumerate() {
        if *rel != Relation::Le {
            art_col[i] = Some(width);
            width += 1;
        }
    }
    let mut columns = vec![vec![Rational::zero(); width]; m];
    let mut basis = vec![0; m];
    for (i, (coeffs, rel, _)) in rows.iter().enumerate() {
        columns[i][..n].clone_from_slice(coeffs);
        if let Some(s) = slack_col[i] {
            columns[i][s] = if *rel == Relation::Le { Rational::one() } else { -Rational::one() };
        }
        if let Some(a) = art_col[i] {
            columns[i][a] = Rational::one();
        }
        basis[i] = art_col[i].or(slack_col[i]).expect("every row has a basic column");
    }
    let is_art: Vec<bool> = (0..width).map(|j| art_col.contains(&Some(j))).collect();
    let mut t = Tableau { rows: columns.clone(), rhs: rows.iter().map(|r| r.2.clone()).collect(), basis };

    let phase1: Vec<Rational> = (0..width).map(|j| if is_art[j] { -Rational::one() } else { Rational::zero() }).collect();
    t.run(&phase1, &vec![true; width]);
    let infeasibility: Rational = t.basis.iter().zip(&t.rhs).filter(|(&b, _)| is_art[b]).map(|(_, v)| v.clone()).sum();
    if infeasibility.is_positive() {
        return Ok(LpOutcome::Infeasible);
    }
    for r in 0..m {
        if is_art[t.basis[r]] {
            if let Some(c) = (0..width).find(|&j| !is_art[j] && !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
            }
        }
    }

    let sign = if lp.maximize { Rational::one() } else { -Rational::one() };
    let mut cost = vec![Rational::zero(); width];
    for j in 0..n {
        cost[j] = &lp.objective[j] * &sign;
    }
    let allowed: Vec<bool> = is_art.iter().map(|a| !a).collect();
    if !t.run(&cost, &allowed) {
        return Ok(LpOutcome::Unbounded);
    }

    let mut x = vec![Rational::zero(); n];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.rhs[r].clone();
        }
    }
    // Duals of the normalized maximization: solve Bᵀ y = c_B.
    let bt: Vec<Vec<Rational>> = t.basis.iter().map(|&b| (0..m).map(|i| columns[i][b].clone()).collect()).collect();
    let cb: Vec<Rational> = t.basis.iter().map(|&b| cost[b].clone()).collect();
    let y = solve_square(bt, cb);
    let dual: Vec<Rational> = y.iter().zip(&flip).map(|(v, f)| v * f * &sign).collect();
    let value = dot(&lp.objective, &x);
    Ok(LpOutcome::Optimal(LpSolution { value, x, dual }))
}

/// Checks a claimed optimum: `x` feasible, `y` dual feasible, and
/// `c · x = b · y`. Weak duality then proves optimality.
pub fn certify(lp: &LinearProgram, sol: &LpSolution) -> Result<()> {
    let fail = |m: String| Err(Error::LpStatus(m));
    if sol.x.iter().any(|v| v.is_negative()) {
        return fail("primal variable is negative".into());
    }
    for (i, c) in lp.constraints.iter().enumerate() {
        let lhs = dot(&c.coeffs, &sol.x);
        let ok = match c.relation {
            Relation::Le => lhs <= c.rhs,
            Relation::Eq => lhs == c.rhs,
            Relation::Ge => lhs >= c.rhs,
        };
        if !ok {
            return fail(format!("constraint {i} violated"));
        }
        let y = &sol.dual[i];
        // Sign pattern for a maximum; mirrored for a minimum.
        let sign_ok = match (c.relation, lp.maximize) {
            (Relation::Eq, _) => true,
            (Relation::Le, true) | (Relation::Ge, false) => !y.is_negative(),
            (Relation::Ge, true) | (Relation::Le, false) => !y.is_positive(),
        };
        if !sign_ok {
            return fail(format!("dual multiplier {i} has the wrong sign"));
        }
    }
    for j in 0..lp.objective.len() {
        let col: Rational = lp.constraints.iter().zip(&sol.dual).map(|(c, y)| &c.coeffs[j] * y).sum();
        let ok = if lp.maximize { col >= lp.objective[j] } else { col <= lp.objective[j] };
        if !ok {
            return fail(format!("dual constraint for variable {j} violated"));
        }
    }
    let primal = dot(&lp.objective, &sol.x);
    let dual: Rational = lp.constraints.iter().zip(&sol.dual).map(|(c, y)| &c.rhs * y).sum();
    if primal != sol.value || dual != sol.value {
        return fail(format!("primal {primal} and dual {dual} differ from the value {}", sol.value));
    }
    Ok(())
}
