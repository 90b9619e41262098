use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `y² = x³ + Ax + B` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EllipticCurve {
    pub a: BigInt,
    pub b: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Reduction {
    Good,
    Multiplicative,
    Additive,
}

/// Reduction type and discriminant valuation at a prime `p > 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ReductionData {
    pub p: u64,
    pub kind: Reduction,
    pub v_delta: u32,
}

/// `v_p(n)`, or `None` for `n = 0`.
pub fn valuation(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl EllipticCurve {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EllipticCurve { a: a.into(), b: b.into() }
    }

    /// `4A³ + 27B²`.
    pub fn disc_core(&self) -> BigInt {
        BigInt::from(4) * self.a.pow(3) + BigInt::from(27) * self.b.pow(2)
    }

    /// `Δ(E) = −16(4A³ + 27B²)`.
    pub fn discriminant(&self) -> BigInt {
        BigInt::from(-16) * self.disc_core()
    }

    /// `p^{v_p(Δ)}`.
    pub fn delta_p(&self, p: u64) -> BigInt {
        num_traits::pow(BigInt::from(p), valuation(&self.discriminant(), p).unwrap_or(0) as usize)
    }

    /// `Δ` with all factors `p` in `primes` removed (sign kept).
    pub fn delta_prime_to(&self, primes: &[u64]) -> BigInt {
        let mut d = self.discriminant();
        if d.is_zero() {
            return d;
        }
        for &p in primes {
            let bp = BigInt::from(p);
            while (&d % &bp).is_zero() {
                d /= &bp;
            }
        }
        d
    }

    /// `Δ_{6'}`: the discriminant with its 2- and 3-parts removed.
    pub fn delta_6prime(&self) -> BigInt {
        self.delta_prime_to(&[2, 3])
    }

    /// The quadratic twist by −1: `(A, B) ↦ (A, −B)`.
    pub fn twist_minus_one(&self) -> EllipticCurve {
        EllipticCurve { a: self.a.clone(), b: -self.b.clone() }
    }

    pub fn is_minimal_at(&self, p: u64) -> bool {
        let p4 = BigInt::from(p).pow(4);
        let p6 = BigInt::from(p).pow(6);
        !((&self.a % &p4).is_zero() && (&self.b % &p6).is_zero())
    }
}

fn check_large_prime(p: u64) -> Result<()> {
    if p <= 3 {
        return Err(Error::UnsupportedPrime(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Removes every `p` with `p⁴ | A` and `p⁶ | B` by `(A, B) ↦ (A/p⁴, B/p⁶)`.
///
/// Such `p` divides `g = gcd(A, B)` with `p⁴ ≤ g` (or `p⁶ ≤ |B|` when `A = 0`,
/// `p⁴ ≤ |A|` when `B = 0`), so trial division up to the matching root suffices.
pub fn minimalize(a: &BigInt, b: &BigInt) -> Result<EllipticCurve> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Precondition("(A, B) = (0, 0) is not a curve".into()));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let bound = if a.is_zero() {
            b.abs().nth_root(6)
        } else if b.is_zero() {
            a.abs().nth_root(4)
        } else {
            a.gcd(&b).nth_root(4)
        };
        let mut found = None;
        let mut p = BigInt::from(2);
        while p <= bound {
            if (&a % p.pow(4)).is_zero() && (&b % p.pow(6)).is_zero() {
                found = Some(p.clone());
                break;
            }
            p += if p == BigInt::from(2) { BigInt::one() } else { BigInt::from(2) };
        }
        match found {
            Some(p) => {
                a /= p.pow(4);
                b /= p.pow(6);
            }
            None => return Ok(EllipticCurve { a, b }),
        }
    }
}

/// Reduction type at `p > 3`: good if `p ∤ Δ`, additive if `p | A` and `p | B`,
/// multiplicative otherwise.
pub fn reduction_type(e: &EllipticCurve, p: u64) -> Result<ReductionData> {
    check_large_prime(p)?;
    if !e.is_minimal_at(p) {
        return Err(Error::NotMinimal(p));
    }
    let core = e.disc_core();
    let v_delta = valuation(&core, p)
        .ok_or_else(|| Error::Precondition("singular curve: 4A³ + 27B² = 0".into()))?;
    let bp = BigInt::from(p);
    let kind = if v_delta == 0 {
        Reduction::Good
    } else if (&e.a % &bp).is_zero() && (&e.b % &bp).is_zero() {
        Reduction::Additive
    } else {
        Reduction::Multiplicative
    };
    Ok(ReductionData { p, kind, v_delta })
}

/// `d_p(E) = −1` exactly for multiplicative reduction at `p ≡ 3 (mod 4)`.
pub fn d_p(e: &EllipticCurve, p: u64) -> Result<i8> {
    let r = reduction_type(e, p)?;
    Ok(if r.kind == Reduction::Multiplicative && p % 4 == 3 { -1 } else { 1 })
}

/// `α_p(E) = d_p(E)·(−1)^{v_p(Δ)}` for `p ≡ 3 (mod 4)`, and `1` otherwise.
pub fn alpha_p(e: &EllipticCurve, p: u64) -> Result<i8> {
    let r = reduction_type(e, p)?;
    if p % 4 != 3 {
        return Ok(1);
    }
    let d = if r.kind == Reduction::Multiplicative { -1 } else { 1 };
    Ok(if r.v_delta % 2 == 0 { d } else { -d })
}
