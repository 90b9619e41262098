use std::collections::HashSet;

use super::sets::{cover_sets, reducible_sets};
use super::variable::{leq, minimal_complement, weight_int, VarSet, Variable};

/// Breadth-first generation of the cuspidal partition: starting from `{a12}`,
/// each state `Z` spawns `Z ∪ {u}` for the minimal elements `u` of its
/// complement unless the result contains one of the thirteen reducible sets.
/// Returns the distinct states in sorted order.
pub fn generate_partition() -> Vec<VarSet> {
    let reducible = reducible_sets();
    let start = VarSet::parse("a12").expect("token");
    let mut seen: HashSet<VarSet> = HashSet::from([start]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for z in frontier {
            for u in minimal_complement(z).iter() {
                let grown = z.insert(u);
                if reducible.iter().any(|s| s.is_subset(grown)) {
                    continue;
                }
                if seen.insert(grown) {
                    next.push(grown);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<VarSet> = seen.into_iter().collect();
    out.sort();
    out
}

/// For each `Z`, the first (1-based) cover set containing it.
pub fn check_cover(sets: &[VarSet]) -> Vec<(VarSet, Option<usize>)> {
    let cover = cover_sets();
    sets.iter().map(|&z| (z, cover.iter().position(|c| z.is_subset(*c)).map(|k| k + 1))).collect()
}

/// True iff `z` is closed downward under [`leq`].
pub fn is_order_ideal(z: VarSet) -> bool {
    z.iter().all(|u| Variable::all().filter(|&v| leq(v, u)).all(|v| z.contains(v)))
}

/// Pairs `(u1, u2)` where `leq` disagrees with componentwise comparison of weights.
pub fn order_weight_mismatches() -> Vec<(Variable, Variable)> {
    let mut bad = Vec::new();
    for u in Variable::all() {
        for v in Variable::all() {
            let (wu, wv) = (weight_int(u), weight_int(v));
            let by_weight = wu.iter().zip(&wv).all(|(a, b)| a <= b);
            if by_weight != leq(u, v) {
                bad.push((u, v));
            }
        }
    }
    bad
}

/// Elements below every other element under [`leq`].
pub fn global_minima() -> Vec<Variable> {
    Variable::all().filter(|&u| Variable::all().all(|v| leq(u, v))).collect()
}
