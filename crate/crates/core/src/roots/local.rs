//! Local densities at primes `p > 3`.

use super::curve::{is_prime, Reduction};
use super::enumerate::{enumerate, ClassInfo, Decision, Tally, Val};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Local events whose density among all pairs `(A, B)` is known in closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LocalEvent {
    Good,
    Multiplicative,
    Additive,
    /// Multiplicative reduction with `v_p(Δ) = k`, `k ∈ {1, 2, 3}`.
    Mult(u32),
    /// Additive reduction with `v_p(Δ) = k`, `k ∈ {2, 3, 4}`.
    Add(u32),
}

fn check_prime(p: u64) -> Result<()> {
    if p <= 3 {
        return Err(Error::UnsupportedPrime(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Closed-form density at `p > 3`.
///
/// Good `1 − 1/p`, multiplicative `1/p − 1/p²`, additive `1/p²`; within the
/// multiplicative locus `v_p(Δ) = 1, 2, 3` have relative densities
/// `(p−1)/p, (p−1)/p², (p−1)/p³`, and within the additive locus `v_p(Δ) = 2, 3, 4`
/// have the same relative densities.
pub fn local_density(p: u64, event: LocalEvent) -> Result<Rational> {
    check_prime(p)?;
    let p_ = Rational::from_integer(p.into());
    let one = Rational::from_integer(1.into());
    let inv = |k: u32| (0..k).fold(one.clone(), |acc, _| acc / &p_);
    let good = &one - inv(1);
    let mult = inv(1) - inv(2);
    let add = inv(2);
    let step = |k: u32| (&p_ - &one) * inv(k);
    match event {
        LocalEvent::Good => Ok(good),
        LocalEvent::Multiplicative => Ok(mult),
        LocalEvent::Additive => Ok(add),
        LocalEvent::Mult(k @ 1..=3) => Ok(mult * step(k)),
        LocalEvent::Add(k @ 2..=4) => Ok(add * step(k - 1)),
        other => Err(Error::Precondition(format!("no closed form for {other:?}"))),
    }
}

/// Reduction type and exact `v_p(Δ)` of a residue class, when determined.
fn reduction_of(c: &ClassInfo) -> Option<(Reduction, u32)> {
    let v = c.v_core.exact()?;
    if v == 0 {
        return Some((Reduction::Good, 0));
    }
    let divisible = |x: Val| !matches!(x, Val::Exact(0));
    let kind = if divisible(c.v_a) && divisible(c.v_b) { Reduction::Additive } else { Reduction::Multiplicative };
    Some((kind, v))
}

/// Classifies every pair `(A, B)` modulo `p^k` by reduction type and `v_p(Δ)`.
/// Classes whose `v_p(Δ)` is not determined modulo `p^k` are left undecided.
pub fn enumerate_local(p: u64, k: u32) -> Result<Tally<(Reduction, u32)>> {
    check_prime(p)?;
    Ok(enumerate(p, k, |c| match reduction_of(c) {
        Some(x) => Decision::Label(x),
        None => Decision::Undecided,
    }))
}

/// Density of `event` read off a modulo-`p^k` enumeration; errors if the
/// event needs more precision than `p^k` provides.
pub fn event_density_from(tally: &Tally<(Reduction, u32)>, k: u32, event: LocalEvent) -> Result<Rational> {
    let sum = |pred: &dyn Fn(Reduction, u32) -> bool| -> Rational {
        tally.decided.iter().filter(|((r, v), _)| pred(*r, *v)).map(|(_, m)| m).sum()
    };
    let need = |v: u32| {
        if v >= k {
            Err(Error::Precondition(format!("v = {v} is not determined modulo p^{k}")))
        } else {
            Ok(())
        }
    };
    match event {
        LocalEvent::Good => Ok(sum(&|r, _| r == Reduction::Good)),
        LocalEvent::Multiplicative | LocalEvent::Additive => Err(Error::Precondition(
            "reduction-type totals include undetermined valuations; use the closed form".into(),
        )),
        LocalEvent::Mult(v) => need(v).map(|_| sum(&|r, w| r == Reduction::Multiplicative && w == v)),
        LocalEvent::Add(v) => need(v).map(|_| sum(&|r, w| r == Reduction::Additive && w == v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn closed_forms() {
        assert_eq!(local_density(7, LocalEvent::Good).unwrap(), frac(6, 7));
        assert_eq!(local_density(7, LocalEvent::Mult(1)).unwrap(), (frac(1, 7) - frac(1, 49)) * frac(6, 7));
        assert_eq!(local_density(5, LocalEvent::Add(2)).unwrap(), frac(1, 25) * frac(4, 5));
        assert!(local_density(5, LocalEvent::Add(5)).is_err());
        assert!(local_density(3, LocalEvent::Good).is_err());
    }
}
