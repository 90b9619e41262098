use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::variable::{weight, VarSet, Variable, WeightVector};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, to_fraction, Rational};

/// Formal product `Π u^{e_u}` with nonnegative rational exponents.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial(BTreeMap<Variable, Rational>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(u: Variable) -> Self {
        Monomial(BTreeMap::from([(u, Rational::one())]))
    }

    /// Parses `a35^4.12 b25^1.42 d13`; repeated variables accumulate.
    pub fn parse(s: &str) -> Result<Self> {
        let mut m = BTreeMap::new();
        for tok in s.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n, parse_rational(e)?),
                None => (tok, Rational::one()),
            };
            if exp < Rational::zero() {
                return Err(Error::Data(format!("negative exponent in {tok:?}")));
            }
            let u: Variable = name.parse()?;
            *m.entry(u).or_insert_with(Rational::zero) += exp;
        }
        m.retain(|_, e| !e.is_zero());
        Ok(Monomial(m))
    }

    pub fn exponent(&self, u: Variable) -> Rational {
        self.0.get(&u).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Variable, &Rational)> {
        self.0.iter().map(|(u, e)| (*u, e))
    }

    pub fn degree(&self) -> Rational {
        self.0.values().sum()
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_vars(self.0.keys().copied())
    }

    /// `w(Π u^{e_u}) = Σ e_u w(u)`.
    pub fn weight(&self) -> WeightVector {
        self.0.iter().fold(WeightVector::zero(), |acc, (u, e)| acc.add(&weight(*u).scale(e)))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (u, e) in &other.0 {
            *m.entry(*u).or_insert_with(Rational::zero) += e;
        }
        Monomial(m)
    }

    /// Exponents of `self / other`, which may be negative.
    pub fn quotient_exponents(&self, other: &Monomial) -> BTreeMap<Variable, Rational> {
        let mut m = self.0.clone();
        for (u, e) in &other.0 {
            *m.entry(*u).or_insert_with(Rational::zero) -= e;
        }
        m.retain(|_, e| !e.is_zero());
        m
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(u, e)| if e.is_one() { u.to_string() } else { format!("{u}^{}", to_fraction(e)) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
