//! Complete verification suites, shared by the command-line tool and the
//! acceptance harness. Each returns a [`Report`]; a suite passes iff none of
//! its checks fails.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{kernel_vector, pfaffian, q1_factorization, sub_pfaffians, LinearForm, Matrix, Quintuple, SkewMatrix};
use crate::cusp::partition::{global_minima, is_order_ideal, order_weight_mismatches};
use crate::cusp::sets::reducible_sets;
use crate::cusp::{check_cover, generate_partition, verify_all, CuspCertificate, Variable};
use crate::error::Result;
use crate::lattice::{
    asymptotic_constant, count_ij, count_ij_total, davenport_demo, fitted_exponent, geometric_grid, HeightRegion,
    SemialgebraicRegion, Sign,
};
use crate::ranks::{
    combine, inequality_report, verify_inequality, witness_attains, InequalityKind, Parity, RankObjective, RankProgram,
    STABILITY_RMAX,
};
use crate::rational::{frac, int, to_decimal, to_f64, Rational};
use crate::report::{render, Report};
use crate::roots::enumerate::Tally;
use crate::roots::euler::density_f3_f4;
use crate::roots::families::{density_f1_f2_printed, stated_components};
use crate::roots::local::{enumerate_local, event_density_from};
use crate::roots::tables::{row_density_flat, DeltaCond};
use crate::roots::{combine_families, Reduction, local_density, verify_table_densities, DensityTable, LocalEvent};

pub const DEFAULT_SEED: u64 = 0x5e1_3e4;

fn small_rational(r: &mut impl Rng) -> Rational {
    frac(r.gen_range(-9..=9), r.gen_range(1..=5))
}

fn random_skew(r: &mut impl Rng, n: usize) -> SkewMatrix {
    SkewMatrix::from_upper(n, (0..n * (n - 1) / 2).map(|_| small_rational(r)).collect()).expect("size")
}

fn random_matrix(r: &mut impl Rng, n: usize) -> Matrix {
    Matrix::from_rows((0..n).map(|_| (0..n).map(|_| small_rational(r)).collect()).collect()).expect("size")
}

/// Pfaffian identities on random rational instances and the first
/// factorization pattern as a polynomial identity.
pub fn algebra_suite(seed: u64, trials: usize, kernel_trials: usize) -> Result<Report> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new("pfaffian algebra");
    let anchor = "Pfaffian identities";
    let mut bad = 0;
    for k in 0..trials {
        let m = random_skew(&mut r, [2, 4, 6][k % 3]);
        let pf = pfaffian(&m)?;
        if &pf * &pf != m.to_dense().det() {
            bad += 1;
        }
    }
    rep.check("Pf(M)^2 = det(M)", bad == 0, format!("{trials} instances"), format!("{} of {trials} hold", trials - bad), anchor);

    let mut bad = 0;
    for k in 0..trials {
        let n = [2, 4, 6][k % 3];
        let m = random_skew(&mut r, n);
        let g = random_matrix(&mut r, n);
        if pfaffian(&m.congruent(&g))? != g.det() * pfaffian(&m)? {
            bad += 1;
        }
    }
    rep.check("Pf(g M g^t) = det(g) Pf(M)", bad == 0, format!("{trials} instances"), format!("{} of {trials} hold", trials - bad), anchor);

    let mut bad = 0;
    for _ in 0..kernel_trials {
        let v = Quintuple::from_coords((0..50).map(|_| small_rational(&mut r)).collect())?;
        let t: [Rational; 5] = std::array::from_fn(|_| small_rational(&mut r));
        let m = v.evaluate(&t);
        let w = kernel_vector(&m);
        let qs = sub_pfaffians(&v);
        let in_kernel = m.to_dense().mul_vec(&w).iter().all(Zero::is_zero);
        let matches = (0..5).all(|j| w[j] == -qs[4 - j].eval(&t));
        if !(in_kernel && matches) {
            bad += 1;
        }
    }
    rep.check(
        "kernel identity M(t) w(t) = 0 with w = -(Q5, ..., Q1)",
        bad == 0,
        format!("{kernel_trials} evaluations"),
        format!("{} of {kernel_trials} hold", kernel_trials - bad),
        "sub-Pfaffian quadrics",
    );

    // Each t-coefficient of Q1 + m14 m23 is a quadratic form in the 40 free
    // coordinates, so vanishing at every e_i and e_i + e_j proves it is zero.
    let free: Vec<Variable> = reducible_sets()[0].complement().iter().collect();
    let point = |on: &[Variable]| on.iter().fold(Quintuple::zero(), |v, &u| v.with(u, int(1)));
    let mut bad = 0;
    let mut points = 0;
    for a in 0..free.len() {
        for b in a..free.len() {
            let v = if a == b { point(&[free[a]]) } else { point(&[free[a], free[b]]) };
            let l14 = LinearForm(std::array::from_fn(|l| v.matrix(l).get(0, 3)));
            let l23 = LinearForm(std::array::from_fn(|l| v.matrix(l).get(1, 2)));
            let ok = q1_factorization(&v).is_ok() && sub_pfaffians(&v)[0] == l14.product(&l23).neg();
            if !ok {
                bad += 1;
            }
            points += 1;
        }
    }
    rep.check(
        "case 1: Q1 = -m14(t) m23(t) as a polynomial identity",
        bad == 0 && free.len() == 40,
        "identity on all 820 interpolation points",
        format!("{} of {points} points", points - bad),
        "first reducibility pattern",
    );
    Ok(rep)
}

pub fn cusp_suite(certs: &[CuspCertificate]) -> Report {
    let mut r = verify_all(certs);
    r.suite = "cusp certificates".into();
    r.check("ten certificates", certs.len() == 10, "10", certs.len().to_string(), "certificate table");
    r
}

pub fn partition_suite() -> Report {
    let mut r = Report::new("cuspidal partition");
    let anchor = "cuspidal region cover";
    let part = generate_partition();
    let cover = check_cover(&part);
    let uncovered: Vec<String> = cover.iter().filter(|(_, c)| c.is_none()).map(|(z, _)| z.to_string()).collect();
    r.check("partition generated", !part.is_empty(), "terminates", format!("{} sets", part.len()), anchor);
    r.check(
        "every generated set lies in a cover set",
        uncovered.is_empty(),
        "all covered",
        if uncovered.is_empty() { "all covered".into() } else { format!("uncovered: {}", uncovered.join(", ")) },
        anchor,
    );
    let ideals = part.iter().filter(|z| is_order_ideal(**z)).count();
    r.check("generated sets are order ideals", ideals == part.len(), part.len().to_string(), ideals.to_string(), anchor);
    r.info("partition size", part.len().to_string(), anchor);
    r
}

pub fn order_weight_suite() -> Report {
    let mut r = Report::new("weight order");
    let anchor = "partial order on coordinates";
    let bad = order_weight_mismatches();
    r.check(
        "order agrees with componentwise weights on all 2500 pairs",
        bad.is_empty(),
        "0 mismatches",
        format!("{} mismatches", bad.len()),
        anchor,
    );
    let minima: Vec<String> = global_minima().iter().map(|v| v.to_string()).collect();
    r.check("a12 is the unique minimum", minima == ["a12"], "[a12]", format!("{minima:?}"), anchor);
    r
}

/// The bounded rows that a flat enumeration modulo `p^k` decides, compared
/// with their printed densities.
fn flat_rows(r: &mut Report, t: &DensityTable, k: u32) -> usize {
    let mut decided = 0;
    for row in &t.rows {
        if row.extra.is_unbounded() {
            continue;
        }
        let tally = row_density_flat(row, k);
        if tally.undecided.is_zero() {
            decided += 1;
            r.check(
                format!("p={} {} by enumeration mod {}^{k}", t.p, row.label(), t.p),
                tally.mass(&()) == row.density,
                render(&row.density),
                render(&tally.mass(&())),
                "density tables",
            );
        }
    }
    decided
}

fn local_check(r: &mut Report, p: u64, k: u32, tally: &Tally<(Reduction, u32)>, events: &[LocalEvent]) -> Result<()> {
    for &e in events {
        let got = event_density_from(tally, k, e)?;
        let want = local_density(p, e)?;
        r.check(format!("p={p} {e:?} mod {p}^{k}"), got == want, render(&want), render(&got), "local densities");
    }
    Ok(())
}

pub fn densities_suite(t2: &DensityTable, t3: &DensityTable) -> Result<Report> {
    let mut r = Report::new("root-number densities");
    let s = t2.sum_density();
    r.check("2-adic density column sum", s == frac(2037, 2048), render(&frac(2037, 2048)), render(&s), "2-adic density table");
    let n2 = flat_rows(&mut r, t2, 9);
    let n3 = flat_rows(&mut r, t3, 6);
    let small_vd = t2.rows.iter().filter(|row| matches!(row.extra, DeltaCond::Eq(v) if v <= 11)).count();
    r.info("rows decided by flat enumeration", format!("p=2: {n2} (including {small_vd} with v(D) <= 11), p=3: {n3}"), "density tables");
    use LocalEvent::*;
    for p in [5, 7, 11] {
        local_check(&mut r, p, 3, &enumerate_local(p, 3)?, &[Good, Mult(1), Mult(2), Add(2)])?;
    }
    local_check(&mut r, 5, 5, &enumerate_local(5, 5)?, &[Mult(3), Add(3), Add(4)])?;
    r.extend(verify_table_densities(t2));
    r.extend(verify_table_densities(t3));
    Ok(r)
}

/// The prime-to-6 families on their own: the F3 and F4 lower bounds.
pub fn euler_suite(prime_bound: u64) -> Result<Report> {
    let mut r = Report::new("Euler products");
    let b = density_f3_f4(prime_bound)?;
    let anchor = "prime-to-6 families";
    r.check(
        "F3 lower bound >= .96689",
        b.f3_lower >= frac(96689, 100_000),
        ">= 0.96689",
        format!("[{}, {}] at primes <= {prime_bound}", to_decimal(&b.f3_lower, 9), to_decimal(&b.f3_upper, 9)),
        anchor,
    );
    r.check(
        "F4 lower bound >= .0326",
        b.f4_lower >= frac(326, 10_000),
        ">= 0.0326",
        format!("[{}, {}] at primes <= {prime_bound}", to_decimal(&b.f4_lower, 9), to_decimal(&b.f4_upper, 9)),
        anchor,
    );
    Ok(r)
}

/// F1, F2 from the printed tables and the family combinations fed with the
/// stated component bounds.
pub fn families_suite(t2: &DensityTable, t3: &DensityTable) -> Report {
    let mut r = Report::new("root-number families");
    let anchor = "2- and 3-adic families";
    let (f1, f2) = density_f1_f2_printed(t2, t3);
    r.check("F1 >= .5910 from printed totals", f1 >= frac(5910, 10_000), ">= 0.5910", render(&f1), anchor);
    r.check("F2 >= .4026 from printed totals", f2 >= frac(4026, 10_000), ">= 0.4026", render(&f2), anchor);
    let [s1, s2, s3, s4] = stated_components();
    let d1 = &s1 - &f1;
    let d2 = &s2 - &f2;
    r.check(
        "stated F1, F2 exceed the table values by < .002",
        d1 < frac(2, 1000) && d2 < frac(2, 1000),
        "< 0.002",
        format!("{}, {}", render(&d1), render(&d2)),
        anchor,
    );
    let f = combine_families(&s1, &s2, &s3, &s4);
    let anchor = "family assembly";
    r.check("Fplus >= .40914 (stated components)", f.fplus >= frac(40914, 100_000), ">= 0.40914", render(&f.fplus), anchor);
    r.check("Fminus >= .58534 (stated components)", f.fminus >= frac(58534, 100_000), ">= 0.58534", render(&f.fminus), anchor);
    r.check("Ftotal >= .5501 (stated components)", f.ftotal >= frac(5501, 10_000), ">= 0.5501", render(&f.ftotal), anchor);
    let g = combine_families(&f1, &f2, &s3, &s4);
    r.info("Ftotal from printed table totals", render(&g.ftotal), anchor);
    r
}

pub fn ranks_suite() -> Result<Report> {
    let mut r = Report::new("rank bounds");
    let six = int(6);
    let cases = [
        (RankObjective::AverageRank, Parity::None, frac(21, 20), "average rank"),
        (RankObjective::AverageRank, Parity::Equidistributed, frac(3, 4), "average rank, parity"),
        (RankObjective::Rank01, Parity::None, frac(19, 24), "rank <= 1 density"),
        (RankObjective::Rank01, Parity::Equidistributed, frac(7, 8), "rank <= 1 density, parity"),
        (RankObjective::Rank0, Parity::Equidistributed, frac(3, 8), "rank 0 density, parity"),
    ];
    for (o, p, want, label) in cases {
        let s = crate::ranks::stable_optimum(o, &six, p, &STABILITY_RMAX);
        let (ok, actual) = match &s {
            Ok(s) => (s.solution.value == want, format!("{} certified, stable for rmax {STABILITY_RMAX:?}", render(&s.solution.value))),
            Err(e) => (false, e.to_string()),
        };
        r.check(format!("{label} optimum"), ok, render(&want), actual, "rank programs");
    }
    let w = |o, p, x: &[Rational], v: Rational| witness_attains(&RankProgram::new(o, &six, p, 40), x, &v);
    r.check(
        "witness (0, 19/20, 1/20) attains 21/20",
        w(RankObjective::AverageRank, Parity::None, &[int(0), frac(19, 20), frac(1, 20)], frac(21, 20)),
        "feasible and optimal",
        "checked",
        "rank programs",
    );
    r.check(
        "witness (3/8, 1/2, 1/8) attains 3/4",
        w(RankObjective::AverageRank, Parity::Equidistributed, &[frac(3, 8), frac(1, 2), frac(1, 8)], frac(3, 4)),
        "feasible and optimal",
        "checked",
        "rank programs",
    );
    let mu = frac(5501, 10_000);
    let avg = combine(&mu, &frac(3, 4), &frac(21, 20))?;
    r.check("average rank combination < .885", avg == frac(88497, 100_000) && avg < frac(885, 1000), "0.88497 < 0.885", render(&avg), "final combination");
    let r01 = combine(&mu, &frac(7, 8), &frac(19, 24))?;
    r.check("rank <= 1 combination >= .8375", r01 >= frac(8375, 10_000), ">= 0.8375", render(&r01), "final combination");
    let r0 = combine(&mu, &frac(3, 8), &Rational::zero())?;
    r.check("rank 0 combination >= .2062", r0 >= frac(2062, 10_000), ">= 0.2062", render(&r0), "final combination");
    Ok(r)
}

pub fn gadgets_suite(up_to: u32) -> Result<Report> {
    let mut r = inequality_report(up_to)?;
    let all = verify_inequality(InequalityKind::AllR, up_to)?;
    let even = verify_inequality(InequalityKind::EvenN, up_to)?;
    r.check(
        "equality at r = 1 and r = 2",
        all.equalities.contains(&1) && all.equalities.contains(&2),
        "[1, 2]",
        format!("{:?}", all.equalities),
        "Selmer-to-rank inequalities",
    );
    r.check("equality at even n = 2", even.equalities.contains(&2), "contains 2", format!("{:?}", even.equalities), "Selmer-to-rank inequalities");
    Ok(r)
}

pub const COUNT_EXPONENTS: std::ops::RangeInclusive<u32> = 4..=12;

pub fn counts_suite() -> Result<Report> {
    let mut r = Report::new("invariant pair counts");
    let anchor = "counts of invariant pairs by height";
    let c = count_ij(&HeightRegion::integer(100)?, Sign::Positive);
    r.check("count_ij(100, +)", c == 66, "66", c.to_string(), anchor);
    let mut pts = (Vec::new(), Vec::new());
    for k in COUNT_EXPONENTS {
        let x = 10u64.pow(k);
        let counts = count_ij_total(&HeightRegion::integer(x)?);
        r.check(format!("partition identity at X = 10^{k}"), counts.partition_holds(), "N+ + N- + N0 = box", format!("{counts:?}"), anchor);
        let xf = x as f64;
        for (sign, n) in [(Sign::Positive, counts.positive), (Sign::Negative, counts.negative)] {
            let main = to_f64(&asymptotic_constant(sign)) * xf.powf(5.0 / 6.0);
            let err = (n as f64 - main).abs();
            let env = 5.0 * xf.sqrt();
            r.check(format!("envelope {sign:?} at X = 10^{k}"), err <= env, format!("|N - cX^(5/6)| <= {env:.1}"), format!("N = {n}, error {err:.1}"), anchor);
        }
        pts.0.push((xf, counts.positive as f64));
        pts.1.push((xf, counts.negative as f64));
    }
    for (name, p) in [("+", &pts.0), ("-", &pts.1)] {
        let e = fitted_exponent(p);
        r.check(format!("fitted exponent ({name})"), (e - 5.0 / 6.0).abs() <= 0.01, "5/6 +- 0.01", format!("{e:.5}"), anchor);
    }
    Ok(r)
}

pub fn davenport_suite() -> Result<Report> {
    let mut r = Report::new("lattice points versus volume");
    for (region, t_max) in [(SemialgebraicRegion::cube(), 64), (SemialgebraicRegion::disk(), 512), (SemialgebraicRegion::simplex(), 512)] {
        let mut worst = 0.0f64;
        for t in geometric_grid(t_max) {
            worst = worst.max(davenport_demo(&region, t)?.ratio);
        }
        r.check(
            format!("{} error / projection bound up to t = {t_max}", region.name),
            worst <= region.ratio_bound,
            format!("<= {}", region.ratio_bound),
            format!("max {worst:.4}"),
            "lattice point counting",
        );
    }
    Ok(r)
}
