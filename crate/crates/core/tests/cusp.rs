use std::collections::HashSet;

use num_traits::One;
use selmer_core::algebra::{act, GroupElement, Matrix, Quintuple};
use selmer_core::cusp::partition::{global_minima, is_order_ideal, order_weight_mismatches};
use selmer_core::cusp::sets::{cover_sets, reducible_sets};
use selmer_core::cusp::variable::{weight_int, MEASURE};
use selmer_core::cusp::verify::{gap, pi_exponents};
use selmer_core::cusp::{
    check_cover, generate_partition, leq, minimal_complement, parse_certificates,
    shipped_certificates, verify_pi, verify_pi_u, Monomial, VarSet, Variable,
};
use selmer_core::rational::{frac, int, Rational};
use selmer_core::report::Status;

fn v(s: &str) -> Variable {
    s.parse().unwrap()
}

/// Torus element with `s_k = primes[k]`: g1 = diag(Π_k s_k^{r_i,k}) and g2 likewise.
/// Acting on the all-ones quintuple scales coordinate `x_ij` by `s^{w(x_ij)}`.
#[test]
fn weights_agree_with_the_torus_action() {
    let s = [2i64, 3, 5, 7];
    let rows: [[i64; 4]; 5] = [[-4, -3, -2, -1], [1, -3, -2, -1], [1, 2, -2, -1], [1, 2, 3, -1], [1, 2, 3, 4]];
    let power = |r: &[i64; 4]| -> Rational {
        r.iter().zip(s).fold(Rational::one(), |acc, (&e, p)| {
            let base = int(p);
            acc * if e >= 0 { num_traits::pow(base, e as usize) } else { num_traits::pow(base.recip(), (-e) as usize) }
        })
    };
    let diag: Vec<Rational> = rows.iter().map(power).collect();
    let g = GroupElement::new(Matrix::diagonal(&diag), Matrix::diagonal(&diag)).unwrap();
    let out = act(&g, &Quintuple::from_coords(vec![int(1); 50]).unwrap());
    for u in Variable::all() {
        let w = weight_int(u);
        let expect = power(&[w[0], w[1], w[2], w[3]]) * power(&[w[4], w[5], w[6], w[7]]);
        assert_eq!(out.get(u), expect, "{u}");
    }
}

#[test]
fn weight_examples() {
    assert_eq!(weight_int(v("a12")), [-3, -6, -4, -2, -4, -3, -2, -1]);
    assert_eq!(weight_int(v("e45")), [2, 4, 6, 3, 1, 2, 3, 4]);
    assert_eq!(MEASURE, [-20, -30, -30, -20, -20, -30, -30, -20]);
}

#[test]
fn order_weight_equivalence_and_unique_minimum() {
    assert!(order_weight_mismatches().is_empty());
    assert_eq!(global_minima(), vec![v("a12")]);
    assert!(leq(v("a12"), v("b13")));
    assert!(!leq(v("a13"), v("b12")));
}

#[test]
fn partition_properties() {
    let parts = generate_partition();
    println!("partition size: {}", parts.len());
    assert!(parts.len() >= 1000 && parts.len() < 10_000);
    let distinct: HashSet<_> = parts.iter().collect();
    assert_eq!(distinct.len(), parts.len());
    let a12 = VarSet::parse("a12").unwrap();
    for &z in &parts {
        assert!(a12.is_subset(z));
        assert!(is_order_ideal(z), "{z}");
        assert!(reducible_sets().iter().all(|s| !s.is_subset(z)));
    }
    assert!(parts.contains(&VarSet::parse("a12 a13").unwrap()));
    assert!(parts.contains(&VarSet::parse("a12 b12").unwrap()));
    assert_eq!(minimal_complement(a12), VarSet::parse("a13 b12").unwrap());
    let cover = check_cover(&parts);
    let uncovered: Vec<_> = cover.iter().filter(|(_, c)| c.is_none()).collect();
    assert!(uncovered.is_empty(), "{uncovered:?}");
}

#[test]
fn cover_examples() {
    let z = VarSet::parse("a12 a13").unwrap();
    assert_eq!(check_cover(&[z])[0].1, Some(1));
    assert_eq!(check_cover(&[cover_sets()[0]])[0].1, Some(1));
    assert_eq!(check_cover(&[VarSet::ALL])[0].1, None);
}

/// Hundredths of exponents: the table uses at most two decimal places.
fn hundredths(m: &Monomial) -> Vec<(Variable, i64)> {
    m.iter()
        .map(|(u, e)| {
            let x = e * int(100);
            assert!(x.is_integer());
            (u, x.to_integer().try_into().unwrap())
        })
        .collect()
}

/// Independent integer evaluation of the π_Z exponent vector, scaled by 100.
#[test]
fn pi_exponents_by_integer_oracle() {
    for cert in shipped_certificates() {
        let mut acc: Vec<i64> = MEASURE.iter().map(|x| x * 100).collect();
        for (u, e) in hundredths(&cert.pi) {
            for (a, w) in acc.iter_mut().zip(weight_int(u)) {
                *a += e * w;
            }
        }
        for u in Variable::all().filter(|&u| !cert.z.contains(u)) {
            for (a, w) in acc.iter_mut().zip(weight_int(u)) {
                *a += 100 * w;
            }
        }
        let ours: Vec<Rational> = pi_exponents(&cert).0.to_vec();
        let oracle: Vec<Rational> = acc.iter().map(|&x| frac(x, 100)).collect();
        assert_eq!(ours, oracle, "case {}", cert.case_id);
        assert!(acc.iter().all(|&x| x < 0), "case {}: {acc:?}", cert.case_id);
    }
}

#[test]
fn table_gaps() {
    let certs = shipped_certificates();
    let printed = [".1", ".1", ".25", ".1", ".2", ".2", ".1", ".2", ".2", ".1"];
    for (c, p) in certs.iter().zip(printed) {
        assert_eq!(c.claimed_gap, selmer_core::rational::parse_rational(p).unwrap());
    }
    assert_eq!(gap(&certs[0]), frac(1, 10));
    assert_eq!(gap(&certs[2]), frac(1, 4));
    // Case 4: 19 − (4.12 + 4.28 + 2.64 + 2.64 + 1.32 + 3.8) = 19 − 18.8.
    assert_eq!(gap(&certs[3]), frac(1, 5));
    let recomputed: Vec<Rational> = certs.iter().map(gap).collect();
    let expected: Vec<Rational> = ["1/10", "1/10", "1/4", "1/5", "1/5", "1/5", "1/10", "1/5", "1/5", "1/10"]
        .iter()
        .map(|s| selmer_core::rational::parse_rational(s).unwrap())
        .collect();
    assert_eq!(recomputed, expected);
}

fn failing_ids(r: &selmer_core::report::Report) -> Vec<String> {
    r.failures().map(|c| c.id.clone()).collect()
}

#[test]
fn shipped_certificate_outcomes() {
    for cert in shipped_certificates() {
        let n = cert.case_id;
        let pi = verify_pi(&cert);
        let piu = verify_pi_u(&cert);
        match n {
            4 => assert_eq!(failing_ids(&pi), vec!["case 4 gap matches".to_string()]),
            _ => assert!(pi.passed(), "{}", pi.to_text()),
        }
        match n {
            6 => assert_eq!(
                failing_ids(&piu),
                vec![
                    "case 6 w(u/pi_u) has no positive exponent".to_string(),
                    "case 6 pi_Z / prod pi_u nonnegative".to_string()
                ]
            ),
            _ => assert!(piu.passed(), "{}", piu.to_text()),
        }
    }
}

#[test]
fn case_one_a15_example() {
    let cert = &shipped_certificates()[0];
    let m = &cert.pi_u[&v("a15")];
    assert_eq!(*m, Monomial::var(v("a35")));
    let d: Vec<i64> = weight_int(v("a15")).iter().zip(weight_int(v("a35"))).map(|(a, b)| a - b).collect();
    assert_eq!(d, vec![-5, -5, 0, 0, 0, 0, 0, 0]);
}

#[test]
fn injected_faults_are_caught() {
    let text = selmer_core::cusp::certificate::SHIPPED.replacen("gap = .1", "gap = 0.0", 1);
    let certs = parse_certificates(&text).unwrap();
    let r = verify_pi(&certs[0]);
    let ids = failing_ids(&r);
    assert!(ids.contains(&"case 1 gap ≥ 1/10".to_string()));
    assert!(ids.contains(&"case 1 gap matches".to_string()));

    let mut cert = shipped_certificates()[1].clone();
    cert.pi = cert.pi.mul(&Monomial::var(v("a13")));
    let r = verify_pi(&cert);
    assert!(failing_ids(&r).contains(&"case 2 pi support outside Z".to_string()));

    let mut cert = shipped_certificates()[1].clone();
    cert.pi_u.remove(&v("b12"));
    let r = verify_pi_u(&cert);
    assert!(r.failures().any(|c| c.id == "case 2 pi_u keys = Z minus a12"));
    assert!(r.checks.iter().any(|c| c.status == Status::Info));
}
