//! Linear-versus-exponential inequalities `L(n) ≤ 5^n` that turn Selmer
//! averages into rank averages.
//!
//! Each inequality is checked directly up to a bound and then extended to all
//! `n` by induction: with step `s` (1, or 2 within a parity class) and
//! `g(n) = 5^n − L(n)`,
//! `g(n + s) = 5^s g(n) + (5^s L(n) − L(n + s))`. The second term is linear in
//! `n` with positive slope, so once it and `g` are nonnegative at some `n₀` they
//! stay nonnegative for every later `n` in the class.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InequalityKind {
    /// `20r − 15 ≤ 5^r` for all `r ≥ 0`.
    AllR,
    /// `12n + 1 ≤ 5^n` for even `n ≥ 0`.
    EvenN,
    /// `60n − 55 ≤ 5^n` for odd `n ≥ 1`.
    OddN,
}

impl InequalityKind {
    pub const ALL: [InequalityKind; 3] = [InequalityKind::AllR, InequalityKind::EvenN, InequalityKind::OddN];

    /// `(slope, intercept)` of `L`.
    pub fn linear(self) -> (i64, i64) {
        match self {
            InequalityKind::AllR => (20, -15),
            InequalityKind::EvenN => (12, 1),
            InequalityKind::OddN => (60, -55),
        }
    }

    /// `(first n, step)`.
    pub fn domain(self) -> (u32, u32) {
        match self {
            InequalityKind::AllR => (0, 1),
            InequalityKind::EvenN => (0, 2),
            InequalityKind::OddN => (1, 2),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            InequalityKind::AllR => "20r - 15 <= 5^r (all r >= 0)",
            InequalityKind::EvenN => "12n + 1 <= 5^n (even n)",
            InequalityKind::OddN => "60n - 55 <= 5^n (odd n)",
        }
    }

    fn lhs(self, n: u32) -> BigInt {
        let (a, c) = self.linear();
        BigInt::from(a) * n + c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityResult {
    pub kind: InequalityKind,
    pub up_to: u32,
    pub counterexample: Option<u32>,
    pub equalities: Vec<u32>,
    /// Start of the induction: `g(n₀) ≥ 0` and `5^s L(n₀) − L(n₀ + s) ≥ 0`.
    pub induction_from: Option<u32>,
}

impl InequalityResult {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none() && self.induction_from.is_some()
    }
}

pub fn verify_inequality(kind: InequalityKind, up_to: u32) -> Result<InequalityResult> {
    if up_to < 5 {
        return Err(Error::Precondition(format!("range bound {up_to} is below 5")));
    }
    let (start, step) = kind.domain();
    let (a, _) = kind.linear();
    let five_s = BigInt::from(5).pow(step);
    let mut counterexample = None;
    let mut equalities = Vec::new();
    let mut induction_from = None;
    let mut n = start;
    while n <= up_to {
        let g = BigInt::from(5).pow(n) - kind.lhs(n);
        if g.is_negative() && counterexample.is_none() {
            counterexample = Some(n);
        }
        if g == BigInt::from(0) {
            equalities.push(n);
        }
        let h = &five_s * kind.lhs(n) - kind.lhs(n + step);
        if induction_from.is_none() && !g.is_negative() && !h.is_negative() && a > 0 {
            induction_from = Some(n);
        }
        n += step;
    }
    Ok(InequalityResult { kind, up_to, counterexample, equalities, induction_from })
}

/// All three inequalities as one report.
pub fn inequality_report(up_to: u32) -> Result<Report> {
    let mut r = Report::new(format!("rank inequalities up to n = {up_to}"));
    for kind in InequalityKind::ALL {
        let res = verify_inequality(kind, up_to)?;
        r.check(
            kind.describe(),
            res.holds(),
            "no counterexample; induction certificate",
            match (res.counterexample, res.induction_from) {
                (Some(n), _) => format!("counterexample at n = {n}"),
                (None, Some(n0)) => format!("holds; induction from n = {n0}; equality at {:?}", res.equalities),
                (None, None) => "no induction start found".into(),
            },
            "Selmer-to-rank inequalities",
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equalities() {
        let r = verify_inequality(InequalityKind::AllR, 100).unwrap();
        assert!(r.holds());
        assert_eq!(r.equalities, vec![1, 2]);
        let r = verify_inequality(InequalityKind::EvenN, 100).unwrap();
        assert!(r.holds());
        assert_eq!(r.equalities, vec![0, 2]);
        let r = verify_inequality(InequalityKind::OddN, 100).unwrap();
        assert!(r.holds());
        assert_eq!(r.equalities, vec![1, 3]);
        assert!(verify_inequality(InequalityKind::AllR, 4).is_err());
    }
}
