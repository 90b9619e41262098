use super::quadric::{LinearForm, QuadricForm};
use super::quintuple::Quintuple;
use super::sub_pfaffians;
use crate::cusp::sets::reducible_sets;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Smallest case number `1..=13` whose vanishing set is identically zero on `v`.
pub fn reducibility_screen(v: &Quintuple) -> Option<usize> {
    let zeros = v.zero_set();
    reducible_sets().iter().position(|s| s.is_subset(zeros)).map(|k| k + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Q1Pattern {
    /// All coordinates with index pair 12 or 13 vanish.
    Case1,
    /// Index pairs 12, 13, 14 vanish in `A..D`.
    Case2,
    /// Index pairs 12, 13, 23 vanish in `A..D`.
    Case3,
}

/// A verified factorization `Q₁ = −left · right`.
///
/// For the first pattern the factors are `m₁₄(t)` and `m₂₃(t)`; for the other two
/// `Q₁` has Gram matrix supported on row and column 5, `left = t₅` and `right`
/// is read off that row.
#[derive(Clone, Debug)]
pub struct Q1Witness {
    pub pattern: Q1Pattern,
    pub q1: QuadricForm,
    pub left: LinearForm,
    pub right: LinearForm,
}

pub fn q1_factorization(v: &Quintuple) -> Result<Q1Witness> {
    let zeros = v.zero_set();
    let sets = reducible_sets();
    let q1 = sub_pfaffians(v)[0].clone();
    let (pattern, left, right) = if sets[0].is_subset(zeros) {
        let form = |a, b| LinearForm(std::array::from_fn(|l| v.matrix(l).get(a, b)));
        (Q1Pattern::Case1, form(0, 3), form(1, 2))
    } else {
        let pattern = if sets[1].is_subset(zeros) {
            Q1Pattern::Case2
        } else if sets[2].is_subset(zeros) {
            Q1Pattern::Case3
        } else {
            return Err(Error::Precondition(
                "quintuple matches none of the first three vanishing patterns".into(),
            ));
        };
        if !q1.supported_on_row(4) {
            return Err(Error::Precondition(format!("Gram matrix of Q1 = {q1} is not supported on row 5")));
        }
        let g = q1.gram();
        let two = Rational::from_integer(2.into());
        let mut right = LinearForm(std::array::from_fn(|k| -(&g[(k, 4)] * &two)));
        right.0[4] = -g[(4, 4)].clone();
        let mut left = LinearForm::zero();
        left.0[4] = Rational::from_integer(1.into());
        (pattern, left, right)
    };
    if left.product(&right) != q1.neg() {
        return Err(Error::Precondition(format!("factorization check failed for Q1 = {q1}")));
    }
    Ok(Q1Witness { pattern, q1, left, right })
}
