use num_traits::Zero;

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Skew-symmetric matrix stored by its strictly upper triangle, row by row:
/// `(0,1), (0,2), …, (0,n-1), (1,2), …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewMatrix {
    dim: usize,
    upper: Vec<Rational>,
}

/// Position of `(i, j)`, `i < j`, in the strict upper triangle of an `n × n` matrix.
pub(crate) fn upper_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl SkewMatrix {
    pub fn zero(dim: usize) -> Self {
        SkewMatrix { dim, upper: vec![Rational::zero(); dim * dim.saturating_sub(1) / 2] }
    }

    pub fn from_upper(dim: usize, upper: Vec<Rational>) -> Result<Self> {
        let expected = dim * dim.saturating_sub(1) / 2;
        if upper.len() != expected {
            return Err(Error::Dimension(format!(
                "{dim}x{dim} skew matrix needs {expected} upper entries, got {}",
                upper.len()
            )));
        }
        Ok(SkewMatrix { dim, upper })
    }

    /// Checks `M = -Mᵀ` (which forces a zero diagonal).
    pub fn from_dense(m: &Matrix) -> Result<Self> {
        let n = m.dim();
        for i in 0..n {
            for j in 0..n {
                if m[(i, j)] != -m[(j, i)].clone() {
                    return Err(Error::NotSkew(format!("entry ({i},{j})")));
                }
            }
        }
        let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                upper.push(m[(i, j)].clone());
            }
        }
        Ok(SkewMatrix { dim: n, upper })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    /// Entry `(i, j)` with zero-based indices.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[upper_index(self.dim, i, j)].clone(),
            Greater => -self.upper[upper_index(self.dim, j, i)].clone(),
            Equal => Rational::zero(),
        }
    }

    /// Sets entry `(i, j)`, `i < j`, and implicitly `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!(i < j, "set() takes an upper-triangle position");
        let k = upper_index(self.dim, i, j);
        self.upper[k] = value;
    }

    pub fn to_dense(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                let x = self.get(i, j);
                m[(j, i)] = -x.clone();
                m[(i, j)] = x;
            }
        }
        m
    }

    /// The principal submatrix on `indices` (kept in the given order).
    pub fn principal(&self, indices: &[usize]) -> SkewMatrix {
        let k = indices.len();
        let mut out = SkewMatrix::zero(k);
        for a in 0..k {
            for b in a + 1..k {
                out.set(a, b, self.get(indices[a], indices[b]));
            }
        }
        out
    }

    /// Deletes row and column `i`.
    pub fn delete(&self, i: usize) -> SkewMatrix {
        let keep: Vec<usize> = (0..self.dim).filter(|&k| k != i).collect();
        self.principal(&keep)
    }

    /// `g M gᵀ`, again skew.
    pub fn congruent(&self, g: &Matrix) -> SkewMatrix {
        let dense = &(g * &self.to_dense()) * &g.transpose();
        SkewMatrix::from_dense(&dense).expect("congruence preserves skew-symmetry")
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, lambda: &Rational) -> SkewMatrix {
        SkewMatrix { dim: self.dim, upper: self.upper.iter().map(|x| x * lambda).collect() }
    }

    pub fn add(&self, other: &SkewMatrix) -> SkewMatrix {
        assert_eq!(self.dim, other.dim);
        SkewMatrix {
            dim: self.dim,
            upper: self.upper.iter().zip(&other.upper).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Pfaffian by expansion along the first row:
/// `Pf(M) = Σ_{j>0} (-1)^{j+1} m_{0j} Pf(M with rows/cols 0, j removed)`.
pub fn pfaffian(m: &SkewMatrix) -> Result<Rational> {
    if m.dim() % 2 == 1 {
        return Err(Error::Dimension(format!("Pfaffian of odd dimension {}", m.dim())));
    }
    let idx: Vec<usize> = (0..m.dim()).collect();
    Ok(pf_rec(m, &idx))
}

fn pf_rec(m: &SkewMatrix, idx: &[usize]) -> Rational {
    match idx.len() {
        0 => return Rational::from_integer(1.into()),
        2 => return m.get(idx[0], idx[1]),
        _ => {}
    }
    let mut total = Rational::zero();
    for k in 1..idx.len() {
        let entry = m.get(idx[0], idx[k]);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
        let term = entry * pf_rec(m, &rest);
        if k % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn base_cases() {
        let z = SkewMatrix::zero(4);
        assert_eq!(pfaffian(&z).unwrap(), int(0));
        let two = SkewMatrix::from_upper(2, vec![int(7)]).unwrap();
        assert_eq!(pfaffian(&two).unwrap(), int(7));
        assert!(matches!(pfaffian(&SkewMatrix::zero(5)), Err(Error::Dimension(_))));
        assert_eq!(pfaffian(&SkewMatrix::zero(0)).unwrap(), int(1));
    }

    #[test]
    fn four_by_four_formula() {
        // (m12, m13, m14, m23, m24, m34) = (a, b, c, d, e, f) gives af - be + cd.
        let (a, b, c, d, e, f) = (2, 3, 5, 7, 11, 13);
        let m = SkewMatrix::from_upper(4, [a, b, c, d, e, f].map(int).to_vec()).unwrap();
        assert_eq!(pfaffian(&m).unwrap(), int(a * f - b * e + c * d));
    }

    #[test]
    fn dense_round_trip_and_skew_check() {
        let m = SkewMatrix::from_upper(3, vec![int(1), int(2), int(3)]).unwrap();
        let d = m.to_dense();
        assert_eq!(d[(2, 1)], int(-3));
        assert_eq!(SkewMatrix::from_dense(&d).unwrap(), m);
        let mut bad = d.clone();
        bad[(0, 0)] = int(1);
        assert!(SkewMatrix::from_dense(&bad).is_err());
        assert_eq!(upper_index(5, 3, 4), 9);
        assert_eq!(upper_index(5, 1, 2), 4);
    }
}
