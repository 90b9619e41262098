//! Quintuples of 5×5 skew-symmetric matrices and the algebra around them.

pub mod group;
pub mod invariants;
pub mod matrix;
pub mod quadric;
pub mod quintuple;
pub mod screen;
pub mod skew;

use num_bigint::BigInt;

pub use group::{act, GroupElement};
pub use invariants::{curve_to_ij, IJPair};
pub use matrix::Matrix;
pub use quadric::{LinearForm, QuadricForm};
pub use quintuple::Quintuple;
pub use screen::{q1_factorization, reducibility_screen, Q1Pattern, Q1Witness};
pub use skew::{pfaffian, SkewMatrix};

use crate::cusp::variable::Variable;
use crate::rational::Rational;

/// The entry `m_ab(t) = Σ_ℓ X^ℓ_ab t_ℓ` of `M(t)` as a linear form (zero-based).
fn entry_form(v: &Quintuple, a: usize, b: usize) -> LinearForm {
    LinearForm(std::array::from_fn(|l| v.matrix(l).get(a, b)))
}

/// The five quadrics `Q₁..Q₅` of `v`.
///
/// `Q_i = (−1)^i Pf(M(t) with row and column 6−i removed)`. With this
/// normalization the kernel vector `w_j = (−1)^{j+1} Pf(M^{(j)})` of `M(t)` is
/// `−(Q₅, Q₄, Q₃, Q₂, Q₁)`, and for `v` vanishing on `{x₁₂, x₁₃}` one gets
/// `Q₁ = −m₁₄(t) m₂₃(t)`.
pub fn sub_pfaffians(v: &Quintuple) -> [QuadricForm; 5] {
    std::array::from_fn(|k| {
        let i = k + 1;
        let deleted = 5 - i;
        let kept: Vec<usize> = (0..5).filter(|&x| x != deleted).collect();
        let (p, q, r, s) = (kept[0], kept[1], kept[2], kept[3]);
        let m = |a, b| entry_form(v, a, b);
        let pf = m(p, q)
            .product(&m(r, s))
            .sub(&m(p, r).product(&m(q, s)))
            .add(&m(p, s).product(&m(q, r)));
        if i % 2 == 0 {
            pf
        } else {
            pf.neg()
        }
    })
}

/// Kernel vector `w_j = (−1)^{j+1} Pf(M with row/column j removed)`, `j = 1..5`,
/// of a 5×5 skew matrix; `M w = 0`.
pub fn kernel_vector(m: &SkewMatrix) -> [Rational; 5] {
    assert_eq!(m.dim(), 5);
    std::array::from_fn(|j| {
        let pf = pfaffian(&m.delete(j)).expect("4x4 minor");
        if j % 2 == 0 {
            pf
        } else {
            -pf
        }
    })
}

/// The model element `v_{I,J}`: besides the constant `±1` entries it has
/// `a₁₂ = −J/27` and `b₁₂ = −I/3`.
pub fn model_element(i: &BigInt, j: &BigInt) -> Quintuple {
    let one = || Rational::from_integer(1.into());
    let var = |s: &str| s.parse::<Variable>().expect("built-in token");
    let mut v = Quintuple::zero();
    v.set(var("a12"), -Rational::new(j.clone(), 27.into()));
    v.set(var("b12"), -Rational::new(i.clone(), 3.into()));
    for name in ["a45", "b25", "c15", "c24", "d14", "d23", "e13"] {
        v.set(var(name), one());
    }
    v.set(var("b34"), -one());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn model_element_entries() {
        let v = model_element(&3.into(), &27.into());
        assert_eq!(v.get("a12".parse().unwrap()), int(-1));
        assert_eq!(v.get("b12".parse().unwrap()), int(-1));
        let v0 = model_element(&0.into(), &0.into());
        assert_eq!(v0.zero_set().len(), 42);
        assert!(v0.coords().iter().all(|x| *x == int(0) || *x == int(1) || *x == int(-1)));
    }

    #[test]
    fn zero_quintuple_has_zero_quadrics() {
        assert!(sub_pfaffians(&Quintuple::zero()).iter().all(QuadricForm::is_zero));
    }
}
