use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::skew::SkewMatrix;
use crate::cusp::variable::{Variable, VarSet, PAIRS};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

/// Five 5×5 skew-symmetric matrices `(A, B, C, D, E)`.
///
/// The coordinate `x_ij` of letter `x` is entry `(i, j)` (one-based) of the
/// corresponding matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quintuple {
    mats: [SkewMatrix; 5],
}

impl Quintuple {
    pub fn zero() -> Self {
        Quintuple { mats: std::array::from_fn(|_| SkewMatrix::zero(5)) }
    }

    pub fn new(mats: [SkewMatrix; 5]) -> Result<Self> {
        if let Some(k) = mats.iter().position(|m| m.dim() != 5) {
            return Err(Error::Dimension(format!("component {k} is not 5x5")));
        }
        Ok(Quintuple { mats })
    }

    /// Builds from the 50 coordinates in variable-index order
    /// (letter-major, upper-triangle order within each letter).
    pub fn from_coords(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != 50 {
            return Err(Error::Dimension(format!("need 50 coordinates, got {}", coords.len())));
        }
        let mut it = coords.into_iter();
        let mats = std::array::from_fn(|_| {
            SkewMatrix::from_upper(5, it.by_ref().take(10).collect()).expect("10 entries")
        });
        Ok(Quintuple { mats })
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.mats.iter().flat_map(|m| m.upper().iter().cloned()).collect()
    }

    pub fn matrix(&self, letter: usize) -> &SkewMatrix {
        &self.mats[letter]
    }

    pub fn matrices(&self) -> &[SkewMatrix; 5] {
        &self.mats
    }

    /// The coordinate `u(v)`.
    pub fn get(&self, u: Variable) -> Rational {
        self.mats[u.letter()].get(u.i() - 1, u.j() - 1)
    }

    pub fn set(&mut self, u: Variable, value: Rational) {
        self.mats[u.letter()].set(u.i() - 1, u.j() - 1, value);
    }

    pub fn with(mut self, u: Variable, value: Rational) -> Self {
        self.set(u, value);
        self
    }

    /// Sets every coordinate in `z` to zero.
    pub fn zeroed(mut self, z: VarSet) -> Self {
        for u in z.iter() {
            self.set(u, Rational::zero());
        }
        self
    }

    /// Variables whose coordinate is zero.
    pub fn zero_set(&self) -> VarSet {
        VarSet::from_vars(Variable::all().filter(|&u| self.get(u).is_zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(SkewMatrix::is_zero)
    }

    /// `M(t) = A t₁ + B t₂ + C t₃ + D t₄ + E t₅` at a rational point.
    pub fn evaluate(&self, t: &[Rational; 5]) -> SkewMatrix {
        let mut out = SkewMatrix::zero(5);
        for (m, tl) in self.mats.iter().zip(t) {
            out = out.add(&m.scale(tl));
        }
        out
    }
}

impl fmt::Display for Quintuple {
    /// Five lines, one per letter, ten entries each in upper-triangle order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.mats {
            let row: Vec<String> = m.upper().iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Quintuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quintuple[")?;
        for (k, m) in self.mats.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = m.upper().iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl FromStr for Quintuple {
    type Err = Error;

    /// Parses the five-line text format; blank lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut coords = Vec::with_capacity(50);
        let mut rows = 0;
        for (lineno, line) in s.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != PAIRS.len() {
                return Err(Error::parse(
                    lineno + 1,
                    format!("expected 10 entries, found {}", entries.len()),
                ));
            }
            for e in entries {
                coords.push(parse_rational(e).map_err(|_| Error::parse(lineno + 1, format!("bad entry {e:?}")))?);
            }
            rows += 1;
        }
        if rows != 5 {
            return Err(Error::parse(0, format!("expected 5 rows, found {rows}")));
        }
        Quintuple::from_coords(coords)
    }
}
