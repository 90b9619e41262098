use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use selmer_core::rational::{frac, int, Rational};
use selmer_core::ranks::{
    certify, combine, rank01_chain, rank0_chain, solve_program, stable_optimum, verify_inequality, witness_attains,
    InequalityKind, Parity, RankObjective, RankProgram, STABILITY_RMAX,
};

/// Vertex enumeration oracle: an optimum of a program with `k` equality or
/// inequality rows is attained at a point with at most `k` nonzero ranks, where
/// the chosen rows are tight. Tries every support and every tight subset.
fn vertex_oracle(objective: RankObjective, avg: &Rational, parity: Parity, rmax: usize) -> Option<Rational> {
    let n = rmax + 1;
    let five = |r: usize| Rational::from_integer(num_traits::pow(BigInt::from(5), r));
    let obj = |r: usize| match objective {
        RankObjective::AverageRank => int(r as i64),
        RankObjective::Rank01 => if r <= 1 { Rational::one() } else { Rational::zero() },
        RankObjective::Rank0 => if r == 0 { Rational::one() } else { Rational::zero() },
    };
    let maximize = objective == RankObjective::AverageRank;
    let mut best: Option<Rational> = None;
    let mut consider = |x: &[(usize, Rational)]| {
        if x.iter().any(|(_, v)| v.is_negative()) {
            return;
        }
        let total: Rational = x.iter().map(|(_, v)| v.clone()).sum();
        let cost: Rational = x.iter().map(|(r, v)| five(*r) * v).sum();
        let even: Rational = x.iter().filter(|(r, _)| r % 2 == 0).map(|(_, v)| v.clone()).sum();
        if !total.is_one() || cost > *avg || (parity == Parity::Equidistributed && even != frac(1, 2)) {
            return;
        }
        let val: Rational = x.iter().map(|(r, v)| obj(*r) * v).sum();
        let better = match &best {
            None => true,
            Some(b) => if maximize { val > *b } else { val < *b },
        };
        if better {
            best = Some(val);
        }
    };
    // Supports of size 1, 2 or 3 with the budget tight or slack.
    for a in 0..n {
        consider(&[(a, Rational::one())]);
        for b in a + 1..n {
            // Two unknowns: total = 1 and one of {budget tight, parity}.
            let (fa, fb) = (five(a), five(b));
            let t = (avg - &fb) / (&fa - &fb);
            consider(&[(a, t.clone()), (b, Rational::one() - t)]);
            if (a % 2) != (b % 2) {
                consider(&[(a, frac(1, 2)), (b, frac(1, 2))]);
            }
            for c in b + 1..n {
                // Three unknowns: total, budget and parity all tight.
                let e = |r: usize| if r.is_multiple_of(2) { Rational::one() } else { Rational::zero() };
                let m = [
                    [Rational::one(), Rational::one(), Rational::one()],
                    [five(a), five(b), five(c)],
                    [e(a), e(b), e(c)],
                ];
                let det = |m: &[[Rational; 3]; 3]| {
                    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
                        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
                };
                let d = det(&m);
                if d.is_zero() || parity == Parity::None {
                    continue;
                }
                let rhs = [Rational::one(), avg.clone(), frac(1, 2)];
                let sol: Vec<Rational> = (0..3)
                    .map(|k| {
                        let mut mk = m.clone();
                        for i in 0..3 {
                            mk[i][k] = rhs[i].clone();
                        }
                        det(&mk) / &d
                    })
                    .collect();
                consider(&[(a, sol[0].clone()), (b, sol[1].clone()), (c, sol[2].clone())]);
            }
        }
    }
    best
}

fn six() -> Rational {
    int(6)
}

#[test]
fn stated_optima_with_certificates_and_stability() {
    let cases = [
        (RankObjective::AverageRank, Parity::None, frac(21, 20)),
        (RankObjective::AverageRank, Parity::Equidistributed, frac(3, 4)),
        (RankObjective::Rank01, Parity::None, frac(19, 24)),
        (RankObjective::Rank01, Parity::Equidistributed, frac(7, 8)),
        (RankObjective::Rank0, Parity::Equidistributed, frac(3, 8)),
    ];
    for (o, p, want) in cases {
        let s = stable_optimum(o, &six(), p, &STABILITY_RMAX).unwrap();
        assert_eq!(s.solution.value, want, "{o:?} {p:?}");
        certify(&s.program.lp, &s.solution).unwrap();
        assert_eq!(vertex_oracle(o, &six(), p, 8), Some(want));
    }
}

#[test]
fn stated_witnesses_attain_the_optima() {
    let p = RankProgram::new(RankObjective::AverageRank, &six(), Parity::None, 40);
    assert!(witness_attains(&p, &[int(0), frac(19, 20), frac(1, 20)], &frac(21, 20)));
    let p = RankProgram::new(RankObjective::AverageRank, &six(), Parity::Equidistributed, 40);
    assert!(witness_attains(&p, &[frac(3, 8), frac(1, 2), frac(1, 8)], &frac(3, 4)));
    let p = RankProgram::new(RankObjective::Rank0, &six(), Parity::Equidistributed, 40);
    assert!(witness_attains(&p, &[frac(3, 8), frac(1, 2), frac(1, 8)], &frac(3, 8)));
    let p = RankProgram::new(RankObjective::Rank01, &six(), Parity::Equidistributed, 40);
    assert!(witness_attains(&p, &[frac(3, 8), frac(1, 2), frac(1, 8)], &frac(7, 8)));
    // A distribution beyond the budget is rejected.
    let p = RankProgram::new(RankObjective::AverageRank, &six(), Parity::None, 40);
    assert!(!witness_attains(&p, &[int(0), frac(9, 10), frac(1, 10)], &frac(11, 10)));
}

#[test]
fn degenerate_averages() {
    let one = int(1);
    let s = solve_program(&RankProgram::new(RankObjective::AverageRank, &one, Parity::None, 10)).unwrap();
    assert_eq!(s.solution.value, Rational::zero());
    assert_eq!(s.solution.x[0], Rational::one());
    let s = solve_program(&RankProgram::new(RankObjective::Rank01, &int(25), Parity::None, 10)).unwrap();
    assert_eq!(s.solution.value, Rational::zero());
    let s = solve_program(&RankProgram::new(RankObjective::Rank0, &frac(13, 2), Parity::Equidistributed, 20)).unwrap();
    assert_eq!(s.solution.value, frac(17, 48));
    assert_eq!(rank0_chain(&frac(13, 2)), frac(17, 48));
    // The chain at 27/2 is still positive; it reaches 0 only at 15.
    let s = solve_program(&RankProgram::new(RankObjective::Rank0, &frac(27, 2), Parity::Equidistributed, 20)).unwrap();
    assert_eq!(s.solution.value, frac(1, 16));
    let s = solve_program(&RankProgram::new(RankObjective::Rank0, &int(15), Parity::Equidistributed, 20)).unwrap();
    assert_eq!(s.solution.value, Rational::zero());
}

#[test]
fn inequalities_hold_with_induction_certificates() {
    for kind in InequalityKind::ALL {
        let r = verify_inequality(kind, 100).unwrap();
        assert!(r.holds(), "{kind:?}");
    }
    assert!(verify_inequality(InequalityKind::AllR, 100).unwrap().equalities.starts_with(&[1, 2]));
    assert!(verify_inequality(InequalityKind::EvenN, 100).unwrap().equalities.contains(&2));
    // Oracle in floating point over a wider range.
    for n in 0..300u32 {
        let p = 5f64.powi(n as i32);
        assert!(20.0 * n as f64 - 15.0 <= p);
        if n % 2 == 0 {
            assert!(12.0 * n as f64 + 1.0 <= p);
        } else {
            assert!(60.0 * n as f64 - 55.0 <= p);
        }
    }
}

#[test]
fn final_combinations() {
    let mu = frac(5501, 10_000);
    let avg = combine(&mu, &frac(3, 4), &frac(21, 20)).unwrap();
    assert_eq!(avg, frac(88497, 100_000));
    assert!(avg < frac(885, 1000));
    let r01 = combine(&mu, &frac(7, 8), &frac(19, 24)).unwrap();
    assert!(r01 >= frac(8375, 10_000));
    let r0 = combine(&mu, &frac(3, 8), &Rational::zero()).unwrap();
    assert!(r0 >= frac(2062, 10_000));
    // Oracle in floating point.
    assert!((0.5501 * 0.75 + 0.4499 * 1.05 - 0.88497f64).abs() < 1e-12);
    assert!((selmer_core::rational::to_f64(&r01) - (0.5501 * 7.0 / 8.0 + 0.4499 * 19.0 / 24.0)).abs() < 1e-12);
    assert!((selmer_core::rational::to_f64(&r0) - 0.5501 * 3.0 / 8.0).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn lp_matches_vertex_enumeration(num in 4i64..400, parity in prop::bool::ANY, which in 0usize..3) {
        let avg = frac(num, 4);
        let parity = if parity { Parity::Equidistributed } else { Parity::None };
        let objective = [RankObjective::AverageRank, RankObjective::Rank01, RankObjective::Rank0][which];
        let program = RankProgram::new(objective, &avg, parity, 6);
        let oracle = vertex_oracle(objective, &avg, parity, 6);
        match selmer_core::ranks::solve(&program.lp).unwrap() {
            selmer_core::ranks::LpOutcome::Optimal(s) => {
                certify(&program.lp, &s).unwrap();
                prop_assert_eq!(Some(s.value), oracle);
            }
            other => prop_assert!(oracle.is_none(), "{:?} but oracle {:?}", other, oracle),
        }
    }

    #[test]
    fn chains_match_the_programs(num in 12i64..400) {
        let avg = frac(num, 4);
        let s = stable_optimum(RankObjective::Rank01, &avg, Parity::None, &[12]).unwrap();
        prop_assert_eq!(s.solution.value, rank01_chain(&avg, Parity::None));
        let s = stable_optimum(RankObjective::Rank01, &avg, Parity::Equidistributed, &[12]).unwrap();
        prop_assert_eq!(s.solution.value, rank01_chain(&avg, Parity::Equidistributed));
        let s = stable_optimum(RankObjective::Rank0, &avg, Parity::Equidistributed, &[12]).unwrap();
        prop_assert_eq!(s.solution.value, rank0_chain(&avg));
    }
}
