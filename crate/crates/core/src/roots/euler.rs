//! Rigorous bounds for the prime-to-6 families `F₃` and `F₄`.
//!
//! For `p ≡ 3 (mod 4)`, `p > 3`, let `d₁(p)` be the density of curves with
//! `α_p = 1` by the first condition (good; multiplicative with `v_p(Δ) ∈ {1,3}`;
//! additive with `v_p(Δ) ∈ {2,4}`) and `d₂(p)` that of the second condition
//! (multiplicative with `v_p(Δ) = 2`; additive with `v_p(Δ) = 3`). With
//! `P = Π_p d₁(p)` and `e_p = d₂(p)/d₁(p)`:
//!
//! * `F₃ = P · (1 + Σ_{p<q<10000} e_p e_q)` (condition 1 everywhere, or at all
//!   but two primes below 10000 where condition 2 holds);
//! * `F₄ = P · Σ_{p<10000} e_p`.
//!
//! `P` is an infinite product. The lower bound multiplies the factors up to the
//! truncation bound `N` and bounds the rest by `Π_{p>N} d₁(p) ≥ 1 − Σ_{n>N, n≡3 (4)} 1/n²
//! ≥ 1 − 1/(4(N−3))`, using `1 − d₁(p) = 1/p² − 1/p³ + 1/p⁴ < 1/p²` and
//! `1/n² < (1/(n−4) − 1/n)/4`. The upper bound drops the tail (each factor is
//! below 1). All arithmetic is fixed point with `2^-256` resolution, rounded
//! down for lower bounds and up for upper bounds.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::local::{local_density, LocalEvent};
use crate::error::{Error, Result};
use crate::rational::Rational;

const SCALE: usize = 256;

/// Primes at which the second condition may hold.
pub const EXCEPTIONAL_BOUND: u64 = 10_000;

/// Default truncation bound for the Euler product.
pub const DEFAULT_PRIME_BOUND: u64 = 10_000_000;

/// Rigorous enclosure `lower ≤ F ≤ upper` for both families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerBounds {
    pub prime_bound: u64,
    pub f3_lower: Rational,
    pub f3_upper: Rational,
    pub f4_lower: Rational,
    pub f4_upper: Rational,
}

/// `d₁(p)` and `d₂(p)` as exact rationals.
pub fn condition_masses(p: u64) -> Result<(Rational, Rational)> {
    use LocalEvent::*;
    let d = |e| local_density(p, e);
    let d1 = d(Good)? + d(Mult(1))? + d(Mult(3))? + d(Add(2))? + d(Add(4))?;
    let d2 = d(Mult(2))? + d(Add(3))?;
    Ok((d1, d2))
}

/// Primes up to `n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

#[derive(Clone, Copy)]
enum Round {
    Down,
    Up,
}

fn to_fixed(r: &Rational, mode: Round) -> BigUint {
    let n = r.numer().to_biguint().expect("nonnegative");
    let d = r.denom().to_biguint().expect("positive");
    let (q, rem) = (n << SCALE).div_rem(&d);
    match mode {
        Round::Up if !rem.is_zero() => q + 1u32,
        _ => q,
    }
}

fn mul(a: &BigUint, b: &BigUint, mode: Round) -> BigUint {
    let prod = a * b;
    let q = &prod >> SCALE;
    match mode {
        Round::Up if (q.clone() << SCALE) != prod => q + 1u32,
        _ => q,
    }
}

fn from_fixed(x: &BigUint) -> Rational {
    Rational::new(BigInt::from(x.clone()), BigInt::one() << SCALE)
}

/// `d₁(p) = (p⁴ − p² + p − 1)/p⁴` in fixed point, avoiding rational arithmetic
/// over the long tail of primes.
fn d1_fixed(p: u64, mode: Round) -> BigUint {
    let p = p as u128;
    let p2 = p * p;
    let p4 = p2 * p2;
    let (q, rem) = (BigUint::from(p4 - p2 + p - 1) << SCALE).div_rem(&BigUint::from(p4));
    match mode {
        Round::Up if !rem.is_zero() => q + 1u32,
        _ => q,
    }
}

struct Sums {
    product: BigUint,
    single: BigUint,
    pairs: BigUint,
}

fn accumulate(primes: &[u64], mode: Round) -> Result<Sums> {
    let one = BigUint::one() << SCALE;
    let mut product = one.clone();
    let mut single = BigUint::zero();
    let mut pairs = BigUint::zero();
    for &p in primes.iter().filter(|&&p| p > 3 && p % 4 == 3) {
        if p < EXCEPTIONAL_BOUND {
            let (d1, d2) = condition_masses(p)?;
            product = mul(&product, &to_fixed(&d1, mode), mode);
            let e = to_fixed(&(d2 / d1), mode);
            pairs += mul(&single, &e, mode);
            single += e;
        } else {
            product = mul(&product, &d1_fixed(p, mode), mode);
        }
    }
    Ok(Sums { product, single, pairs })
}

/// Lower and upper bounds for `F₃`, `F₄` with the Euler product truncated at
/// `prime_bound` (at least 10000).
pub fn density_f3_f4(prime_bound: u64) -> Result<EulerBounds> {
    if prime_bound < EXCEPTIONAL_BOUND {
        return Err(Error::Precondition(format!("prime bound {prime_bound} is below {EXCEPTIONAL_BOUND}")));
    }
    let primes = primes_up_to(prime_bound);
    let lo = accumulate(&primes, Round::Down)?;
    let hi = accumulate(&primes, Round::Up)?;
    let one = BigUint::one() << SCALE;
    let tail = Rational::one() - Rational::new(1.into(), (4 * (prime_bound - 3)).into());
    let p_lo = mul(&lo.product, &to_fixed(&tail, Round::Down), Round::Down);
    let f3_lower = mul(&p_lo, &(&one + &lo.pairs), Round::Down);
    let f4_lower = mul(&p_lo, &lo.single, Round::Down);
    let f3_upper = mul(&hi.product, &(&one + &hi.pairs), Round::Up);
    let f4_upper = mul(&hi.product, &hi.single, Round::Up);
    Ok(EulerBounds {
        prime_bound,
        f3_lower: from_fixed(&f3_lower),
        f3_upper: from_fixed(&f3_upper),
        f4_lower: from_fixed(&f4_lower),
        f4_upper: from_fixed(&f4_upper),
    })
}
