//! Lattice points versus volume for dilates of small semi-algebraic regions.
//!
//! A region is cut out of a bounding box by polynomial inequalities `p(x) ≥ 0`.
//! For the dilate `tR` the count of integer points is compared with
//! `Vol(tR) = t^n Vol(R)`, and the error is normalized by the largest volume of
//! a projection onto a coordinate subspace (at least 1).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};

/// Polynomial with rational coefficients: `Σ c · Π x_i^{e_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    pub terms: Vec<(Rational, Vec<u32>)>,
}

impl Polynomial {
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(_, e)| e.iter().sum()).max().unwrap_or(0)
    }

    /// Integer form with the same sign: all coefficients scaled by the lcm of
    /// their denominators.
    fn integral(&self) -> Vec<(i128, Vec<u32>)> {
        let l = self.terms.iter().fold(BigInt::one(), |acc, (c, _)| acc.lcm(c.denom()));
        self.terms
            .iter()
            .map(|(c, e)| ((c * Rational::from_integer(l.clone())).to_integer().to_i128().expect("coefficient fits"), e.clone()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SemialgebraicRegion {
    pub name: String,
    pub dim: usize,
    /// Each polynomial must be nonnegative on the region.
    pub inequalities: Vec<Polynomial>,
    /// Bounding box of the undilated region, one `[lo, hi]` per coordinate.
    pub bounding_box: Option<Vec<(Rational, Rational)>>,
    /// `Vol(R)`.
    pub volume: f64,
    /// Largest projection volume of `R` in each dimension `k < n` (index `k`).
    pub projections: Vec<f64>,
    /// Bound the normalized error must stay below for every `t`.
    pub ratio_bound: f64,
}

fn term(c: Rational, e: &[u32]) -> (Rational, Vec<u32>) {
    (c, e.to_vec())
}

impl SemialgebraicRegion {
    /// `[0, 1]^3`.
    pub fn cube() -> SemialgebraicRegion {
        let mut ineq = Vec::new();
        for i in 0..3 {
            let mut e = vec![0; 3];
            e[i] = 1;
            ineq.push(Polynomial { terms: vec![term(int(1), &e)] });
            ineq.push(Polynomial { terms: vec![term(int(1), &[0, 0, 0]), term(int(-1), &e)] });
        }
        SemialgebraicRegion {
            name: "cube".into(),
            dim: 3,
            inequalities: ineq,
            bounding_box: Some(vec![(int(0), int(1)); 3]),
            volume: 1.0,
            projections: vec![1.0, 1.0, 1.0],
            ratio_bound: 7.0,
        }
    }

    /// The unit disk `x² + y² ≤ 1`.
    pub fn disk() -> SemialgebraicRegion {
        SemialgebraicRegion {
            name: "disk".into(),
            dim: 2,
            inequalities: vec![Polynomial { terms: vec![term(int(1), &[0, 0]), term(int(-1), &[2, 0]), term(int(-1), &[0, 2])] }],
            bounding_box: Some(vec![(int(-1), int(1)); 2]),
            volume: std::f64::consts::PI,
            projections: vec![1.0, 2.0],
            ratio_bound: 4.0,
        }
    }

    /// The triangle `x, y ≥ 0`, `x + y ≤ 1`.
    pub fn simplex() -> SemialgebraicRegion {
        SemialgebraicRegion {
            name: "simplex".into(),
            dim: 2,
            inequalities: vec![
                Polynomial { terms: vec![term(int(1), &[1, 0])] },
                Polynomial { terms: vec![term(int(1), &[0, 1])] },
                Polynomial { terms: vec![term(int(1), &[0, 0]), term(int(-1), &[1, 0]), term(int(-1), &[0, 1])] },
            ],
            bounding_box: Some(vec![(int(0), int(1)); 2]),
            volume: 0.5,
            projections: vec![1.0, 1.0],
            ratio_bound: 3.0,
        }
    }

    pub fn by_name(name: &str) -> Result<SemialgebraicRegion> {
        match name {
            "cube" => Ok(Self::cube()),
            "disk" => Ok(Self::disk()),
            "simplex" => Ok(Self::simplex()),
            other => Err(Error::Precondition(format!("unknown region {other:?} (cube, disk, simplex)"))),
        }
    }

    /// Exact count of integer points in `tR`.
    pub fn lattice_count(&self, t: u64) -> Result<u128> {
        if self.dim == 0 || self.dim > 4 {
            return Err(Error::Dimension(format!("region dimension {} is outside 1..=4", self.dim)));
        }
        let bbox = self.bounding_box.as_ref().ok_or_else(|| Error::Precondition(format!("region {} is unbounded", self.name)))?;
        let tr = Rational::from_integer(t.into());
        let ranges: Vec<(i128, i128)> = bbox
            .iter()
            .map(|(lo, hi)| ((lo * &tr).ceil().to_integer().to_i128().unwrap(), (hi * &tr).floor().to_integer().to_i128().unwrap()))
            .collect();
        // t^d p(x/t) = Σ c x^e t^{d − |e|} has the sign of p(x/t).
        let polys: Vec<_> = self.inequalities.iter().map(|p| (p.degree(), p.integral())).collect();
        let t = t as i128;
        let inside = |x: &[i128]| {
            polys.iter().all(|(d, terms)| {
                let v: i128 = terms
                    .iter()
                    .map(|(c, e)| {
                        let deg: u32 = e.iter().sum();
                        c * e.iter().zip(x).map(|(&k, &xi)| xi.pow(k)).product::<i128>() * t.pow(d - deg)
                    })
                    .sum();
                v >= 0
            })
        };
        let mut count = 0u128;
        let mut point: Vec<i128> = ranges.iter().map(|r| r.0).collect();
        if ranges.iter().any(|(lo, hi)| lo > hi) {
            return Ok(0);
        }
        loop {
            if inside(&point) {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == point.len() {
                    return Ok(count);
                }
                if point[k] < ranges[k].1 {
                    point[k] += 1;
                    break;
                }
                point[k] = ranges[k].0;
                k += 1;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DavenportSample {
    pub region: String,
    pub t: u64,
    pub count: u128,
    pub volume: f64,
    pub projection_bound: f64,
    pub ratio: f64,
}

pub fn davenport_demo(region: &SemialgebraicRegion, t: u64) -> Result<DavenportSample> {
    if t == 0 {
        return Err(Error::Precondition("scale t must be positive".into()));
    }
    let count = region.lattice_count(t)?;
    let tf = t as f64;
    let volume = region.volume * tf.powi(region.dim as i32);
    let projection_bound = region.projections.iter().enumerate().map(|(k, v)| v * tf.powi(k as i32)).fold(1.0, f64::max);
    let ratio = (count as f64 - volume).abs() / projection_bound;
    Ok(DavenportSample { region: region.name.clone(), t, count, volume, projection_bound, ratio })
}

/// Exact volume of the dilate when `Vol(R)` is rational (cube and simplex).
pub fn exact_volume(region: &SemialgebraicRegion, t: u64) -> Option<Rational> {
    let base = match region.name.as_str() {
        "cube" => int(1),
        "simplex" => frac(1, 2),
        _ => return None,
    };
    let t = Rational::from_integer(t.into());
    Some((0..region.dim).fold(base, |acc, _| acc * &t))
}

/// Geometric grid `1, 2, 4, …` up to `t_max`.
pub fn geometric_grid(t_max: u64) -> Vec<u64> {
    std::iter::successors(Some(1u64), |t| Some(t * 2)).take_while(|&t| t <= t_max).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let s = davenport_demo(&SemialgebraicRegion::cube(), 10).unwrap();
        assert_eq!(s.count, 1331);
        assert_eq!(s.volume, 1000.0);
        let s = davenport_demo(&SemialgebraicRegion::simplex(), 100).unwrap();
        assert_eq!(s.count, 5151);
        let mut r = SemialgebraicRegion::disk();
        r.bounding_box = None;
        assert!(davenport_demo(&r, 3).is_err());
    }
}
