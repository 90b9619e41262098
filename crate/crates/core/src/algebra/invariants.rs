use num_bigint::BigInt;
use num_traits::Signed;

use crate::rational::Rational;

/// A pair of invariants `(I, J)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IJPair {
    pub i: BigInt,
    pub j: BigInt,
}

impl IJPair {
    pub fn new(i: impl Into<BigInt>, j: impl Into<BigInt>) -> Self {
        IJPair { i: i.into(), j: j.into() }
    }

    /// `4I³ − J²`, i.e. `27 Δ`.
    pub fn disc27(&self) -> BigInt {
        BigInt::from(4) * self.i.pow(3) - self.j.pow(2)
    }

    /// `Δ(I, J) = (4I³ − J²)/27`.
    pub fn discriminant(&self) -> Rational {
        Rational::new(self.disc27(), 27.into())
    }

    /// `H(I, J) = max(|I|³, J²/4)`.
    pub fn height(&self) -> Rational {
        let a = Rational::from_integer(self.i.abs().pow(3));
        let b = Rational::new(self.j.pow(2), 4.into());
        a.max(b)
    }
}

/// Invariants of `y² = x³ + Ax + B`: `I = −3A`, `J = −27B`.
pub fn curve_to_ij(a: &BigInt, b: &BigInt) -> IJPair {
    IJPair { i: -BigInt::from(3) * a, j: -BigInt::from(27) * b }
}
