use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Index pairs `(i, j)`, `1 ≤ i < j ≤ 5`, in upper-triangle order.
pub const PAIRS: [(u8, u8); 10] =
    [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)];

pub const LETTERS: [char; 5] = ['a', 'b', 'c', 'd', 'e'];

/// One of the 50 coordinates `x_ij` of a quintuple, `x ∈ {a,…,e}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable {
    letter: u8,
    i: u8,
    j: u8,
}

impl Variable {
    pub fn new(letter: char, i: u8, j: u8) -> Result<Self> {
        let l = LETTERS
            .iter()
            .position(|&c| c == letter)
            .ok_or_else(|| Error::Data(format!("unknown letter {letter:?}")))?;
        if !(1 <= i && i < j && j <= 5) {
            return Err(Error::Data(format!("bad index pair {i}{j}")));
        }
        Ok(Variable { letter: l as u8, i, j })
    }

    /// Variable with bit index `k` in `0..50` (letter-major, then upper-triangle order).
    pub fn from_index(k: usize) -> Self {
        assert!(k < 50);
        let (i, j) = PAIRS[k % 10];
        Variable { letter: (k / 10) as u8, i, j }
    }

    pub fn index(self) -> usize {
        self.letter as usize * 10 + pair_index(self.i, self.j)
    }

    /// Letter index, `a → 0`, …, `e → 4`.
    pub fn letter(self) -> usize {
        self.letter as usize
    }

    pub fn letter_char(self) -> char {
        LETTERS[self.letter as usize]
    }

    pub fn i(self) -> usize {
        self.i as usize
    }

    pub fn j(self) -> usize {
        self.j as usize
    }

    pub fn all() -> impl Iterator<Item = Variable> {
        (0..50).map(Variable::from_index)
    }
}

pub(crate) fn pair_index(i: u8, j: u8) -> usize {
    PAIRS.iter().position(|&p| p == (i, j)).expect("valid pair")
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.letter_char(), self.i, self.j)
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Variable {
    type Err = Error;

    /// Parses tokens such as `a12` or `e45`.
    fn from_str(s: &str) -> Result<Self> {
        let b = s.as_bytes();
        if b.len() != 3 || !b[1].is_ascii_digit() || !b[2].is_ascii_digit() {
            return Err(Error::Data(format!("bad variable token {s:?}")));
        }
        Variable::new(b[0] as char, b[1] - b'0', b[2] - b'0')
    }
}

/// Exponent vector of the torus parameters `s₁, …, s₈`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(pub [Rational; 8]);

impl WeightVector {
    pub fn zero() -> Self {
        WeightVector(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn from_ints(v: [i64; 8]) -> Self {
        WeightVector(v.map(|x| Rational::from_integer(x.into())))
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(std::array::from_fn(|k| &self.0[k] + &other.0[k]))
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        WeightVector(std::array::from_fn(|k| &self.0[k] - &other.0[k]))
    }

    pub fn scale(&self, c: &Rational) -> WeightVector {
        WeightVector(std::array::from_fn(|k| &self.0[k] * c))
    }

    /// First component (zero-based) that is not strictly negative.
    pub fn first_nonnegative(&self) -> Option<usize> {
        self.0.iter().position(|x| *x >= Rational::zero())
    }

    /// First component (zero-based) that is strictly positive.
    pub fn first_positive(&self) -> Option<usize> {
        self.0.iter().position(|x| *x > Rational::zero())
    }
}

/// Exponents of `s₁..s₄` for the first diagonal torus block.
pub const ROW_WEIGHTS: [[i64; 4]; 5] =
    [[-4, -3, -2, -1], [1, -3, -2, -1], [1, 2, -2, -1], [1, 2, 3, -1], [1, 2, 3, 4]];

/// Exponents of `s₁..s₈` of the Haar-measure factor on the torus.
pub const MEASURE: [i64; 8] = [-20, -30, -30, -20, -20, -30, -30, -20];

pub fn measure_vector() -> WeightVector {
    WeightVector::from_ints(MEASURE)
}

/// Integer weight of `x_ij`: `r_i + r_j` in `s₁..s₄` and `q_ℓ` in `s₅..s₈`,
/// where the second block has the same exponent pattern as the first.
pub fn weight_int(u: Variable) -> [i64; 8] {
    let (ri, rj, q) = (ROW_WEIGHTS[u.i() - 1], ROW_WEIGHTS[u.j() - 1], ROW_WEIGHTS[u.letter()]);
    [ri[0] + rj[0], ri[1] + rj[1], ri[2] + rj[2], ri[3] + rj[3], q[0], q[1], q[2], q[3]]
}

pub fn weight(u: Variable) -> WeightVector {
    WeightVector::from_ints(weight_int(u))
}

/// `u1 ≤ u2` iff the letter and both indices are weakly smaller.
pub fn leq(u1: Variable, u2: Variable) -> bool {
    u1.letter <= u2.letter && u1.i <= u2.i && u1.j <= u2.j
}

/// Subset of the 50 variables as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VarSet(pub u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);
    pub const ALL: VarSet = VarSet((1u64 << 50) - 1);

    pub fn from_vars<I: IntoIterator<Item = Variable>>(vars: I) -> Self {
        VarSet(vars.into_iter().fold(0, |acc, v| acc | 1u64 << v.index()))
    }

    /// Whitespace-separated tokens, e.g. `"a12 a13 b12"`.
    pub fn parse(s: &str) -> Result<Self> {
        let vars = s.split_whitespace().map(str::parse).collect::<Result<Vec<Variable>>>()?;
        Ok(VarSet::from_vars(vars))
    }

    pub fn contains(self, v: Variable) -> bool {
        self.0 >> v.index() & 1 == 1
    }

    pub fn insert(self, v: Variable) -> VarSet {
        VarSet(self.0 | 1u64 << v.index())
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self) -> VarSet {
        VarSet(Self::ALL.0 & !self.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Variable> {
        (0..50).filter(move |&k| self.0 >> k & 1 == 1).map(Variable::from_index)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Minimal elements of `Var ∖ z` under [`leq`].
pub fn minimal_complement(z: VarSet) -> VarSet {
    let rest: Vec<Variable> = z.complement().iter().collect();
    VarSet::from_vars(
        rest.iter().copied().filter(|&u| !rest.iter().any(|&v| v != u && leq(v, u))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Variable {
        s.parse().unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(weight_int(v("a12")), [-3, -6, -4, -2, -4, -3, -2, -1]);
        assert_eq!(weight_int(v("e45")), [2, 4, 6, 3, 1, 2, 3, 4]);
        let total = Variable::all().fold([0i64; 8], |mut acc, u| {
            for (a, b) in acc.iter_mut().zip(weight_int(u)) {
                *a += b;
            }
            acc
        });
        assert_eq!(total, [0; 8]);
    }

    #[test]
    fn order() {
        assert!(leq(v("a12"), v("b13")));
        assert!(!leq(v("a13"), v("b12")));
        assert!(leq(v("c24"), v("c24")));
    }

    #[test]
    fn indexing_round_trip() {
        for k in 0..50 {
            let u = Variable::from_index(k);
            assert_eq!(u.index(), k);
            assert_eq!(u.to_string().parse::<Variable>().unwrap(), u);
        }
        assert!("f12".parse::<Variable>().is_err());
        assert!("a21".parse::<Variable>().is_err());
        assert!("a1".parse::<Variable>().is_err());
    }

    #[test]
    fn minimal_complements() {
        let a12 = VarSet::parse("a12").unwrap();
        assert_eq!(minimal_complement(a12), VarSet::parse("a13 b12").unwrap());
        assert_eq!(minimal_complement(VarSet::EMPTY), a12);
        assert_eq!(minimal_complement(VarSet::ALL), VarSet::EMPTY);
    }
}
