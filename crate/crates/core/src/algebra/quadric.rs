use std::fmt;

use num_traits::Zero;

use super::matrix::Matrix;
use crate::rational::Rational;

/// Linear form `Σ c_ℓ t_ℓ` in `t₁..t₅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm(pub [Rational; 5]);

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn eval(&self, t: &[Rational; 5]) -> Rational {
        self.0.iter().zip(t).map(|(c, x)| c * x).sum()
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm(std::array::from_fn(|k| -self.0[k].clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// The product `self · other` as a quadratic form.
    pub fn product(&self, other: &LinearForm) -> QuadricForm {
        let half = Rational::new(1.into(), 2.into());
        let mut g = Matrix::zero(5);
        for i in 0..5 {
            for j in 0..5 {
                g[(i, j)] = (&self.0[i] * &other.0[j] + &self.0[j] * &other.0[i]) * &half;
            }
        }
        QuadricForm { gram: g }
    }
}

/// Quadratic form `Q(t) = tᵀ G t` with symmetric Gram matrix `G`; the
/// coefficient of `t_i t_j`, `i ≠ j`, is `2 G_ij`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadricForm {
    gram: Matrix,
}

impl QuadricForm {
    pub fn zero() -> Self {
        QuadricForm { gram: Matrix::zero(5) }
    }

    /// Panics unless `gram` is a symmetric 5×5 matrix.
    pub fn from_gram(gram: Matrix) -> Self {
        assert_eq!(gram.dim(), 5);
        assert!(gram == gram.transpose(), "Gram matrix must be symmetric");
        QuadricForm { gram }
    }

    /// Builds from monomial coefficients `coeff(t_i t_j)`, `i ≤ j`, zero-based.
    pub fn from_monomials(terms: &[((usize, usize), Rational)]) -> Self {
        let half = Rational::new(1.into(), 2.into());
        let mut g = Matrix::zero(5);
        for ((i, j), c) in terms {
            let (i, j) = (*i.min(j), *i.max(j));
            if i == j {
                g[(i, i)] += c.clone();
            } else {
                let h = c * &half;
                g[(i, j)] += h.clone();
                g[(j, i)] += h;
            }
        }
        QuadricForm { gram: g }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Coefficient of `t_i t_j` (zero-based, `i ≤ j` or not).
    pub fn coefficient(&self, i: usize, j: usize) -> Rational {
        if i == j {
            self.gram[(i, i)].clone()
        } else {
            &self.gram[(i, j)] * Rational::from_integer(2.into())
        }
    }

    pub fn eval(&self, t: &[Rational; 5]) -> Rational {
        let gt = self.gram.mul_vec(t);
        t.iter().zip(&gt).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &QuadricForm) -> QuadricForm {
        let mut g = self.gram.clone();
        for i in 0..5 {
            for j in 0..5 {
                g[(i, j)] += other.gram[(i, j)].clone();
            }
        }
        QuadricForm { gram: g }
    }

    pub fn neg(&self) -> QuadricForm {
        QuadricForm { gram: self.gram.scale(&Rational::from_integer((-1).into())) }
    }

    pub fn sub(&self, other: &QuadricForm) -> QuadricForm {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.gram.is_zero()
    }

    /// True iff every nonzero Gram entry lies in row or column `k` (zero-based).
    pub fn supported_on_row(&self, k: usize) -> bool {
        (0..5).all(|i| (0..5).all(|j| i == k || j == k || self.gram[(i, j)].is_zero()))
    }
}

impl fmt::Debug for QuadricForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Writes `Σ c·mono` as e.g. `t3*t5 - 2*t4^2`, or `0` when every `c` vanishes.
fn write_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (Rational, String)>) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms.filter(|(c, _)| !c.is_zero()) {
        let neg = c < Rational::zero();
        let mag = if neg { -c } else { c };
        let sign = match (first, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        if mag == Rational::from_integer(1.into()) {
            write!(f, "{sign}{mono}")?;
        } else {
            write!(f, "{sign}{mag}*{mono}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.0.iter().enumerate().map(|(i, c)| (c.clone(), format!("t{}", i + 1))))
    }
}

impl fmt::Display for QuadricForm {
    /// Polynomial notation, e.g. `t3*t5 - t4^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = (0..5).flat_map(|i| (i..5).map(move |j| (i, j))).map(|(i, j)| {
            let mono = if i == j { format!("t{}^2", i + 1) } else { format!("t{}*t{}", i + 1, j + 1) };
            (self.coefficient(i, j), mono)
        });
        write_terms(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn product_and_display() {
        let l = LinearForm([1, 0, 0, 0, 0].map(int));
        let m = LinearForm([0, 1, 0, 0, 0].map(int));
        let q = l.product(&m);
        assert_eq!(q.coefficient(0, 1), int(1));
        assert_eq!(q.gram()[(0, 1)], Rational::new(1.into(), 2.into()));
        assert_eq!(q.to_string(), "t1*t2");
        let sq = QuadricForm::from_monomials(&[((3, 3), int(-1)), ((2, 4), int(1))]);
        assert_eq!(sq.to_string(), "t3*t5 - t4^2");
        let t = [1, 2, 3, 4, 5].map(int);
        assert_eq!(sq.eval(&t), int(15 - 16));
        assert_eq!(q.eval(&t), int(2));
        assert_eq!(LinearForm([0, 2, 0, -1, 0].map(int)).to_string(), "2*t2 - t4");
        assert_eq!(LinearForm::zero().to_string(), "0");
    }
}
