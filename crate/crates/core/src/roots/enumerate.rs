//! Exact densities of valuation conditions on `(A, B)` by residue classes.
//!
//! A class is a pair of residues `(a, b)` modulo `p^k`. Everything the
//! classifiers look at (`v_p(A)`, `v_p(B)`, `v_p(Δ)` and, when determined, the
//! unit part of `Δ` modulo 4) is reported only to the extent the class fixes it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::rational::Rational;

/// Valuation known from a residue modulo `p^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Val {
    Exact(u32),
    AtLeast(u32),
}

impl Val {
    fn of_residue(x: u128, p: u128, k: u32) -> Val {
        if x == 0 {
            return Val::AtLeast(k);
        }
        let (mut x, mut v) = (x, 0);
        while x % p == 0 {
            x /= p;
            v += 1;
        }
        Val::Exact(v)
    }

    fn shift(self, by: u32) -> Val {
        match self {
            Val::Exact(v) => Val::Exact(v + by),
            Val::AtLeast(v) => Val::AtLeast(v + by),
        }
    }

    pub fn exact(self) -> Option<u32> {
        match self {
            Val::Exact(v) => Some(v),
            Val::AtLeast(_) => None,
        }
    }
}

/// What a residue class modulo `p^k` determines about the curves in it.
#[derive(Clone, Copy, Debug)]
pub struct ClassInfo {
    pub p: u64,
    pub k: u32,
    pub a: u128,
    pub b: u128,
    pub v_a: Val,
    pub v_b: Val,
    /// Valuation of `4A³ + 27B²`.
    pub v_core: Val,
    /// Valuation of `Δ = −16(4A³ + 27B²)`.
    pub v_delta: Val,
    /// For `p = 2`: `(Δ / 2^{v_2(Δ)}) mod 4` when the class determines it.
    pub unit_mod4: Option<u8>,
}

fn class_info(p: u64, k: u32, a: u128, b: u128) -> ClassInfo {
    let pp = p as u128;
    let m = pp.pow(k);
    let core = (4 * (a * a % m) % m * a + 27 * (b * b % m)) % m;
    let v_core = Val::of_residue(core, pp, k);
    let offset = if p == 2 { 4 } else { 0 };
    // For p = 2, Δ / 2^{v(Δ)} = −core / 2^{v(core)}, fixed mod 4 once core is
    // known mod 2^{v(core)+2}.
    let unit_mod4 = match v_core {
        Val::Exact(v) if p == 2 && v + 2 <= k => {
            let u = (core >> v) % 4;
            Some(((4 - u) % 4) as u8)
        }
        _ => None,
    };
    ClassInfo {
        p,
        k,
        a,
        b,
        v_a: Val::of_residue(a, pp, k),
        v_b: Val::of_residue(b, pp, k),
        v_core,
        v_delta: v_core.shift(offset),
        unit_mod4,
    }
}

/// `p^v mod 4` for an exact valuation.
pub fn prime_power_mod4(p: u64, v: u32) -> u8 {
    let mut r = 1u64;
    for _ in 0..v {
        r = r * (p % 4) % 4;
    }
    r as u8
}

/// Decided masses per label plus the mass of classes left undecided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tally<T: Ord> {
    pub decided: BTreeMap<T, Rational>,
    pub excluded: Rational,
    pub undecided: Rational,
}

impl<T: Ord> Tally<T> {
    pub fn mass(&self, t: &T) -> Rational {
        self.decided.get(t).cloned().unwrap_or_default()
    }

    pub fn total_decided(&self) -> Rational {
        self.decided.values().sum()
    }
}

/// Outcome of classifying a residue class.
pub enum Decision<T> {
    /// Every curve in the class carries this label.
    Label(T),
    /// No curve in the class is counted.
    Excluded,
    /// The class must be refined.
    Undecided,
}

fn weighted_sum(counts: &BTreeMap<u32, u64>, p: u64) -> Rational {
    counts
        .iter()
        .map(|(&k, &c)| Rational::new(BigInt::from(c), num_traits::pow(BigInt::from(p), 2 * k as usize)))
        .sum()
}

/// Adaptive refinement: starting from all pairs, split each undecided class
/// modulo `p^k` into its `p²` children modulo `p^{k+1}`, up to `max_depth`.
pub fn refine<T, F>(p: u64, max_depth: u32, classify: F) -> Tally<T>
where
    T: Ord + Clone,
    F: Fn(&ClassInfo) -> Decision<T>,
{
    let mut decided: BTreeMap<T, BTreeMap<u32, u64>> = BTreeMap::new();
    let mut excluded: BTreeMap<u32, u64> = BTreeMap::new();
    let mut undecided: BTreeMap<u32, u64> = BTreeMap::new();
    let pp = p as u128;
    let mut stack = vec![(0u32, 0u128, 0u128)];
    while let Some((k, a, b)) = stack.pop() {
        match classify(&class_info(p, k, a, b)) {
            Decision::Label(t) => *decided.entry(t).or_default().entry(k).or_default() += 1,
            Decision::Excluded => *excluded.entry(k).or_default() += 1,
            Decision::Undecided if k >= max_depth => *undecided.entry(k).or_default() += 1,
            Decision::Undecided => {
                let step = pp.pow(k);
                for i in 0..pp {
                    for j in 0..pp {
                        stack.push((k + 1, a + i * step, b + j * step));
                    }
                }
            }
        }
    }
    Tally {
        decided: decided.into_iter().map(|(t, c)| (t, weighted_sum(&c, p))).collect(),
        excluded: weighted_sum(&excluded, p),
        undecided: weighted_sum(&undecided, p),
    }
}

/// Flat enumeration of all `p^{2k}` classes modulo `p^k` (parallel over `a`).
pub fn enumerate<T, F>(p: u64, k: u32, classify: F) -> Tally<T>
where
    T: Ord + Clone + Send,
    F: Fn(&ClassInfo) -> Decision<T> + Sync,
{
    let m = (p as u128).pow(k);
    let merged = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut local: (BTreeMap<T, u64>, u64, u64) = (BTreeMap::new(), 0, 0);
            for b in 0..m {
                match classify(&class_info(p, k, a, b)) {
                    Decision::Label(t) => *local.0.entry(t).or_default() += 1,
                    Decision::Excluded => local.1 += 1,
                    Decision::Undecided => local.2 += 1,
                }
            }
            local
        })
        .reduce(
            || (BTreeMap::new(), 0, 0),
            |mut x, y| {
                for (t, c) in y.0 {
                    *x.0.entry(t).or_default() += c;
                }
                (x.0, x.1 + y.1, x.2 + y.2)
            },
        );
    let denom = num_traits::pow(BigInt::from(p), 2 * k as usize);
    let r = |c: u64| Rational::new(BigInt::from(c), denom.clone());
    Tally {
        decided: merged.0.into_iter().map(|(t, c)| (t, r(c))).collect(),
        excluded: r(merged.1),
        undecided: r(merged.2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn valuation_of_b_by_refinement() {
        // v_2(B) = 1 has density 1/4.
        let t = refine(2, 10, |c| match c.v_b {
            Val::Exact(1) => Decision::Label(()),
            Val::Exact(_) => Decision::Excluded,
            Val::AtLeast(k) if k >= 2 => Decision::Excluded,
            Val::AtLeast(_) => Decision::Undecided,
        });
        assert_eq!(t.mass(&()), frac(1, 4));
        assert_eq!(t.undecided, frac(0, 1));
        let f = enumerate(3, 2, |c| if c.v_a == Val::Exact(0) { Decision::Label(()) } else { Decision::Excluded });
        assert_eq!(f.mass(&()), frac(2, 3));
    }

    #[test]
    fn unit_part_for_odd_a_b() {
        // A, B odd: Δ = −16·(odd) with odd part ≡ 1 mod 4.
        let info = class_info(2, 3, 1, 1);
        assert_eq!(info.v_delta, Val::Exact(4));
        assert_eq!(info.unit_mod4, Some(1));
        assert_eq!(prime_power_mod4(3, 3), 3);
        assert_eq!(prime_power_mod4(3, 4), 1);
    }
}
