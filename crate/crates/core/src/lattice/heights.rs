//! Counting integer pairs `(I, J)` with `H(I, J) = max(|I|³, J²/4) < X` by the
//! sign of `4I³ − J²`.
//!
//! For each admissible `I` the admissible `J` form the interval `|J| ≤ j_box`
//! with `J² < 4X`, and the sign changes at `J² = 4I³`, so each `I` costs a
//! couple of integer square roots.

use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
    #[serde(rename = "0")]
    Zero,
}

/// Height bound `X = num/den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeightRegion {
    num: u128,
    den: u128,
}

impl HeightRegion {
    /// Accepts `X ≥ 1` with numerator and denominator below `2^100`.
    pub fn new(x: &Rational) -> Result<HeightRegion> {
        let bad = || Error::Precondition(format!("height bound {x} must be a rational ≥ 1 of moderate size"));
        if *x < Rational::from_integer(1.into()) {
            return Err(bad());
        }
        let num = x.numer().to_u128().ok_or_else(bad)?;
        let den = x.denom().to_u128().ok_or_else(bad)?;
        if num >= 1 << 100 {
            return Err(bad());
        }
        Ok(HeightRegion { num, den })
    }

    pub fn integer(x: u64) -> Result<HeightRegion> {
        HeightRegion::new(&Rational::from_integer(x.into()))
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn as_rational(&self) -> Rational {
        Ratio::new(self.num.into(), self.den.into())
    }

    /// Largest `j ≥ 0` with `j² < 4X`.
    fn j_box(&self) -> u128 {
        ((4 * self.num - 1) / self.den).sqrt()
    }

    /// Largest `i ≥ 0` with `i³ < X`.
    fn i_box(&self) -> u128 {
        let mut i = ((self.num - 1) / self.den).cbrt();
        while self.den * (i + 1).pow(3) < self.num {
            i += 1;
        }
        while i > 0 && self.den * i.pow(3) >= self.num {
            i -= 1;
        }
        i
    }
}

/// `N⁺`, `N⁻`, `N⁰` and the size of the whole height box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IjCounts {
    pub positive: u128,
    pub negative: u128,
    pub zero: u128,
    pub total: u128,
}

impl IjCounts {
    pub fn get(&self, sign: Sign) -> u128 {
        match sign {
            Sign::Positive => self.positive,
            Sign::Negative => self.negative,
            Sign::Zero => self.zero,
        }
    }

    pub fn partition_holds(&self) -> bool {
        self.positive + self.negative + self.zero == self.total
    }
}

pub fn count_ij_total(x: &HeightRegion) -> IjCounts {
    let jb = x.j_box();
    let ib = x.i_box();
    let column = 2 * jb + 1;
    let (mut positive, mut zero) = (0u128, 0u128);
    for i in 1..=ib {
        let t = 4 * i * i * i;
        // J ≥ 0 with J² < 4I³, capped by the box.
        let below = (t - 1).sqrt().min(jb);
        positive += 2 * below + 1;
        let s = t.sqrt();
        if s * s == t && s <= jb {
            zero += 2;
        }
    }
    zero += 1; // (0, 0)
    let total = (2 * ib + 1) * column;
    IjCounts { positive, negative: total - positive - zero, zero, total }
}

pub fn count_ij(x: &HeightRegion, sign: Sign) -> u128 {
    count_ij_total(x).get(sign)
}

/// Leading constants `N⁺ ~ (8/5) X^{5/6}`, `N⁻ ~ (32/5) X^{5/6}`.
pub fn asymptotic_constant(sign: Sign) -> Rational {
    match sign {
        Sign::Positive => Ratio::new(8.into(), 5.into()),
        Sign::Negative => Ratio::new(32.into(), 5.into()),
        Sign::Zero => Rational::zero(),
    }
}

/// Least-squares slope of `log N` against `log X`.
pub fn fitted_exponent(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x.ln(), b + y.ln()));
    let (mx, my) = (sx / n, sy / n);
    let (num, den) = points.iter().fold((0.0, 0.0), |(a, b), (x, y)| {
        let dx = x.ln() - mx;
        (a + dx * (y.ln() - my), b + dx * dx)
    });
    num / den
}
