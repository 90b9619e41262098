use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::quintuple::Quintuple;
use super::skew::SkewMatrix;
use crate::error::{Error, Result};
use crate::rational::{to_fraction, Rational};

/// `(g₁, g₂) ∈ GL₅ × GL₅` with `det(g₁)² det(g₂) = 1`.
#[derive(Clone, Debug)]
pub struct GroupElement {
    g1: Matrix,
    g2: Matrix,
}

impl GroupElement {
    pub fn new(g1: Matrix, g2: Matrix) -> Result<Self> {
        if g1.dim() != 5 || g2.dim() != 5 {
            return Err(Error::Dimension("group components must be 5x5".into()));
        }
        let d1 = g1.det();
        let value = &d1 * &d1 * g2.det();
        if !value.is_one() {
            return Err(Error::Determinant(to_fraction(&value)));
        }
        Ok(GroupElement { g1, g2 })
    }

    pub fn identity() -> Self {
        GroupElement { g1: Matrix::identity(5), g2: Matrix::identity(5) }
    }

    /// The central element `(λ I₅, λ⁻² I₅)`.
    pub fn central(lambda: &Rational) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::Precondition("λ must be nonzero".into()));
        }
        let inv2 = (lambda * lambda).recip();
        GroupElement::new(Matrix::scalar(5, lambda.clone()), Matrix::scalar(5, inv2))
    }

    pub fn g1(&self) -> &Matrix {
        &self.g1
    }

    pub fn g2(&self) -> &Matrix {
        &self.g2
    }

    /// Componentwise product; `act(g.mul(h), v) = act(g, act(h, v))`.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement { g1: &self.g1 * &other.g1, g2: &self.g2 * &other.g2 }
    }

    /// Equality modulo the center: `g ~ h` iff `g = (λ, λ⁻²)·h` for some `λ`.
    pub fn equivalent(&self, other: &GroupElement) -> bool {
        let Some(lambda) = ratio(&self.g1, &other.g1) else { return false };
        let inv2 = (&lambda * &lambda).recip();
        other.g2.scale(&inv2) == self.g2
    }
}

/// The scalar `λ` with `a = λ b`, if one exists.
fn ratio(a: &Matrix, b: &Matrix) -> Option<Rational> {
    let n = a.dim();
    let (i, j) = (0..n * n).map(|k| (k / n, k % n)).find(|&(i, j)| !b[(i, j)].is_zero())?;
    let lambda = &a[(i, j)] / &b[(i, j)];
    (b.scale(&lambda) == *a && !lambda.is_zero()).then_some(lambda)
}

/// `(A, …, E) ↦ (g₁Ag₁ᵗ, …, g₁Eg₁ᵗ)·g₂ᵗ`: the `k`-th output matrix is
/// `Σ_ℓ (g₂)_{kℓ} g₁ X_ℓ g₁ᵗ`.
pub fn act(g: &GroupElement, v: &Quintuple) -> Quintuple {
    let conj: Vec<SkewMatrix> = v.matrices().iter().map(|m| m.congruent(&g.g1)).collect();
    let mats = std::array::from_fn(|k| {
        let mut acc = SkewMatrix::zero(5);
        for (l, c) in conj.iter().enumerate() {
            let coeff = &g.g2[(k, l)];
            if !coeff.is_zero() {
                acc = acc.add(&c.scale(coeff));
            }
        }
        acc
    });
    Quintuple::new(mats).expect("5x5 components")
}
