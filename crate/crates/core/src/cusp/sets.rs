use std::sync::OnceLock;

use super::variable::VarSet;

/// Vanishing patterns forcing a quintuple to fail strong irreducibility,
/// numbered 1..13.
pub const REDUCIBLE_SETS: [&str; 13] = [
    "a12 a13 b12 b13 c12 c13 d12 d13 e12 e13",
    "a12 a13 a14 b12 b13 b14 c12 c13 c14 d12 d13 d14",
    "a12 a13 a23 b12 b13 b23 c12 c13 c23 d12 d13 d23",
    "a12 a13 a14 a15 a23 a24 a25 b12 b13 b14 b15 b23 b24 b25",
    "a12 a13 a14 a23 a24 a34 b12 b13 b14 b23 b24 b34",
    "a12 a13 a14 a23 a24 b12 b13 b14 b23 b24 c12 c13 c14 c23 c24",
    "a12 a13 a14 a15 a23 a24 a25 a34 a35 a45",
    "a12 a13 a14 a15 b12 b13 b14 b15 c12 c13 c14 c15",
    "a12 a13 a14 a15 a23 a24 a25 b12 c12 d12 e12",
    "a12 a13 a14 a15 a23 a24 b12 b13 b14 b15 b23 b24 c12 d12 e12",
    "a12 a13 a14 a15 a23 a24 a25 a34 a35 b12 b13 b23 c12 c13 c23",
    "a12 a13 a14 a15 a23 a24 a25 a34 a35 b12 b13 c12 c13 d12 d13",
    "a12 a13 a14 a15 a23 a24 a25 a34 b12 b13 b14 b15 b23 b24 c12 c13 c14 c23 d12 d13",
];

/// Ten 19-element sets, numbered 1..10, such that every cuspidal piece of the
/// partition lies inside one of them.
pub const COVER_SETS: [&str; 10] = [
    "a12 a13 a14 a15 a23 a24 a25 a34 b12 b13 b14 b15 b23 b24 c12 c13 c14 c23 d12",
    "a12 a13 a14 a15 a23 a24 a25 a34 b12 b13 b14 b15 b23 b24 c12 c13 c14 d12 d13",
    "a12 a13 a14 a15 a23 a24 a25 a34 b12 b13 b14 b15 b23 b24 c12 c13 c23 d12 d13",
    "a12 a13 a14 a15 a23 a24 a25 a34 b12 b13 b14 b15 b23 c12 c13 c14 c23 d12 d13",
    "a12 a13 a14 a15 a23 a24 a25 a34 b12 b13 b14 b23 b24 c12 c13 c14 c23 d12 d13",
    "a12 a13 a14 a15 a23 a24 a25 b12 b13 b14 b15 b23 b24 c12 c13 c14 c23 d12 d13",
    "a12 a13 a14 a15 a23 a24 a34 b12 b13 b14 b15 b23 b24 c12 c13 c14 c23 d12 d13",
    "a12 a13 a14 a15 a23 a24 a34 b12 b13 b14 b15 b23 c12 c13 c14 c23 d12 d13 e12",
    "a12 a13 a14 a15 a23 a24 a34 b12 b13 b14 b23 b24 c12 c13 c14 c23 d12 d13 e12",
    "a12 a13 a14 a15 a23 a24 a25 a34 a35 b12 b13 b14 b15 b23 b24 c12 c13 c14 d12",
];

fn parse_all<const N: usize>(src: &[&str; N]) -> [VarSet; N] {
    std::array::from_fn(|k| VarSet::parse(src[k]).expect("built-in set"))
}

pub fn reducible_sets() -> &'static [VarSet; 13] {
    static SETS: OnceLock<[VarSet; 13]> = OnceLock::new();
    SETS.get_or_init(|| parse_all(&REDUCIBLE_SETS))
}

pub fn cover_sets() -> &'static [VarSet; 10] {
    static SETS: OnceLock<[VarSet; 10]> = OnceLock::new();
    SETS.get_or_init(|| parse_all(&COVER_SETS))
}
