//! The 2- and 3-adic density tables: parsing, row classification and exact
//! re-derivation of their densities.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::curve::{valuation, EllipticCurve};
use super::enumerate::{enumerate, prime_power_mod4, refine, ClassInfo, Decision, Tally, Val};
use crate::error::{Error, Result};
use crate::rational::{frac, parse_rational, Rational};
use crate::report::{render, Report};

/// Condition on a valuation: exactly `k` or at least `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValCond {
    Eq(u32),
    Ge(u32),
}

/// Extra condition on `v_p(Δ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaCond {
    Any,
    Eq(u32),
    EvenGe(u32),
    OddGe(u32),
}

impl ValCond {
    fn parse(s: &str) -> Option<ValCond> {
        match s.strip_prefix(">=") {
            Some(k) => k.parse().ok().map(ValCond::Ge),
            None => s.parse().ok().map(ValCond::Eq),
        }
    }

    /// `None` when the known part of the valuation does not decide the condition.
    pub fn eval(self, v: Val) -> Option<bool> {
        match (self, v) {
            (ValCond::Eq(n), Val::Exact(m)) => Some(m == n),
            (ValCond::Eq(n), Val::AtLeast(k)) => (k > n).then_some(false),
            (ValCond::Ge(n), Val::Exact(m)) => Some(m >= n),
            (ValCond::Ge(n), Val::AtLeast(k)) => (k >= n).then_some(true),
        }
    }

    fn range(self) -> (u32, u32) {
        match self {
            ValCond::Eq(n) => (n, n),
            ValCond::Ge(n) => (n, u32::MAX),
        }
    }
}

impl DeltaCond {
    fn parse(s: &str) -> Option<DeltaCond> {
        if s == "-" {
            return Some(DeltaCond::Any);
        }
        let rest = s.strip_prefix("vD=")?;
        if let Some(k) = rest.strip_prefix("even>=") {
            return k.parse().ok().map(DeltaCond::EvenGe);
        }
        if let Some(k) = rest.strip_prefix("odd>=") {
            return k.parse().ok().map(DeltaCond::OddGe);
        }
        rest.parse().ok().map(DeltaCond::Eq)
    }

    pub fn eval(self, v: Val) -> Option<bool> {
        match (self, v) {
            (DeltaCond::Any, _) => Some(true),
            (DeltaCond::Eq(n), Val::Exact(m)) => Some(m == n),
            (DeltaCond::Eq(n), Val::AtLeast(k)) => (k > n).then_some(false),
            (DeltaCond::EvenGe(n), Val::Exact(m)) => Some(m >= n && m % 2 == 0),
            (DeltaCond::OddGe(n), Val::Exact(m)) => Some(m >= n && m % 2 == 1),
            (DeltaCond::EvenGe(_) | DeltaCond::OddGe(_), Val::AtLeast(_)) => None,
        }
    }

    /// Whether the condition leaves `v_p(Δ)` unbounded.
    pub fn is_unbounded(self) -> bool {
        matches!(self, DeltaCond::EvenGe(_) | DeltaCond::OddGe(_))
    }

    fn admits(self, v: u32) -> bool {
        self.eval(Val::Exact(v)).unwrap_or(false)
    }
}

impl fmt::Display for ValCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValCond::Eq(n) => write!(f, "{n}"),
            ValCond::Ge(n) => write!(f, ">={n}"),
        }
    }
}

impl fmt::Display for DeltaCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaCond::Any => write!(f, "-"),
            DeltaCond::Eq(n) => write!(f, "vD={n}"),
            DeltaCond::EvenGe(n) => write!(f, "vD=even>={n}"),
            DeltaCond::OddGe(n) => write!(f, "vD=odd>={n}"),
        }
    }
}

/// Class order of the relative-density columns: `(Δ-class mod 4, d_p)`.
pub const CLASSES: [(u8, i8); 4] = [(1, 1), (1, -1), (3, 1), (3, -1)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityTableRow {
    /// 1-based position in the table.
    pub id: usize,
    pub p: u64,
    pub v_a: ValCond,
    pub v_b: ValCond,
    pub extra: DeltaCond,
    pub density: Rational,
    pub rel: [Rational; 4],
}

impl DensityTableRow {
    pub fn label(&self) -> String {
        format!("row {} ({}, {}, {})", self.id, self.v_a, self.v_b, self.extra)
    }

    /// Membership decided from known valuations, if possible.
    pub fn decide(&self, v_a: Val, v_b: Val, v_delta: Val) -> Option<bool> {
        let parts = [self.v_a.eval(v_a), self.v_b.eval(v_b), self.extra.eval(v_delta)];
        if parts.contains(&Some(false)) {
            Some(false)
        } else if parts.iter().all(|x| *x == Some(true)) {
            Some(true)
        } else {
            None
        }
    }

    /// True iff no pair `(A, B)` can satisfy both rows.
    pub fn disjoint_from(&self, other: &DensityTableRow) -> bool {
        let apart = |x: (u32, u32), y: (u32, u32)| x.1 < y.0 || y.1 < x.0;
        if apart(self.v_a.range(), other.v_a.range()) || apart(self.v_b.range(), other.v_b.range()) {
            return true;
        }
        // Compare Δ conditions on a window wide enough to reach every threshold.
        !(0..64).any(|v| self.extra.admits(v) && other.extra.admits(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityTable {
    pub p: u64,
    pub rows: Vec<DensityTableRow>,
    pub printed_total: Rational,
    pub printed_columns: [Rational; 4],
}

pub const SHIPPED_P2: &str = include_str!("../../data/table_p2.txt");
pub const SHIPPED_P3: &str = include_str!("../../data/table_p3.txt");

pub fn shipped_table(p: u64) -> Result<DensityTable> {
    match p {
        2 => parse_table(SHIPPED_P2),
        3 => parse_table(SHIPPED_P3),
        _ => Err(Error::Data(format!("no density table for p = {p}"))),
    }
}

/// Parses the line-oriented table format (see the shipped files).
pub fn parse_table(text: &str) -> Result<DensityTable> {
    let mut rows = Vec::new();
    let mut total = None;
    let mut p = None;
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        let rat = |s: &str| parse_rational(s).map_err(|e| Error::parse(lineno, e.to_string()));
        if f[0] == "total" {
            if f.len() != 6 {
                return Err(Error::parse(lineno, "total line needs 5 values"));
            }
            total = Some((rat(f[1])?, [rat(f[2])?, rat(f[3])?, rat(f[4])?, rat(f[5])?]));
            continue;
        }
        if f.len() != 9 {
            return Err(Error::parse(lineno, format!("expected 9 fields, found {}", f.len())));
        }
        let row_p: u64 = f[0].parse().map_err(|_| Error::parse(lineno, "bad prime"))?;
        if *p.get_or_insert(row_p) != row_p {
            return Err(Error::parse(lineno, "mixed primes in one table"));
        }
        let cond = |s: &str| ValCond::parse(s).ok_or_else(|| Error::parse(lineno, format!("bad condition {s:?}")));
        let extra = DeltaCond::parse(f[3]).ok_or_else(|| Error::parse(lineno, format!("bad condition {:?}", f[3])))?;
        rows.push(DensityTableRow {
            id: rows.len() + 1,
            p: row_p,
            v_a: cond(f[1])?,
            v_b: cond(f[2])?,
            extra,
            density: rat(f[4])?,
            rel: [rat(f[5])?, rat(f[6])?, rat(f[7])?, rat(f[8])?],
        });
    }
    let (printed_total, printed_columns) = total.ok_or_else(|| Error::Data("table lacks a total line".into()))?;
    Ok(DensityTable { p: p.ok_or_else(|| Error::Data("empty table".into()))?, rows, printed_total, printed_columns })
}

fn curve_val(n: &BigInt, p: u64) -> Val {
    valuation(n, p).map(Val::Exact).unwrap_or(Val::AtLeast(u32::MAX))
}

/// The table row containing `E`, if any (tables do not cover every curve).
pub fn classify_row(e: &EllipticCurve, table: &DensityTable) -> Option<usize> {
    let p = table.p;
    let (va, vb, vd) = (curve_val(&e.a, p), curve_val(&e.b, p), curve_val(&e.discriminant(), p));
    table.rows.iter().find(|r| r.decide(va, vb, vd) == Some(true)).map(|r| r.id)
}

impl DensityTable {
    pub fn sum_density(&self) -> Rational {
        self.rows.iter().map(|r| &r.density).sum()
    }

    /// `Σ_rows density · rel[k]` for each class column.
    pub fn column_totals(&self) -> [Rational; 4] {
        std::array::from_fn(|k| self.rows.iter().map(|r| &r.density * &r.rel[k]).sum())
    }
}

fn row_decision(row: &DensityTableRow, c: &ClassInfo) -> Decision<()> {
    match row.decide(c.v_a, c.v_b, c.v_delta) {
        Some(true) => Decision::Label(()),
        Some(false) => Decision::Excluded,
        None => Decision::Undecided,
    }
}

/// Density of a row by adaptive refinement up to `p^max_depth`.
pub fn row_density_tree(row: &DensityTableRow, max_depth: u32) -> Tally<()> {
    refine(row.p, max_depth, |c| row_decision(row, c))
}

/// Density of a row by flat enumeration modulo `p^k`.
pub fn row_density_flat(row: &DensityTableRow, k: u32) -> Tally<()> {
    enumerate(row.p, k, |c| row_decision(row, c))
}

/// Masses of the row split by the discriminant class mod 4 (`1` or `3`):
/// `Δ / 2^{v(Δ)} mod 4` for `p = 2` and `3^{v(Δ)} mod 4` for `p = 3`.
pub fn row_class_split(row: &DensityTableRow, max_depth: u32) -> Tally<u8> {
    refine(row.p, max_depth, |c| match row.decide(c.v_a, c.v_b, c.v_delta) {
        Some(false) => Decision::Excluded,
        None => Decision::Undecided,
        Some(true) => {
            let class = if row.p == 2 { c.unit_mod4 } else { c.v_delta.exact().map(|v| prime_power_mod4(row.p, v)) };
            match class {
                Some(x) => Decision::Label(x),
                None => Decision::Undecided,
            }
        }
    })
}

/// Closed form for a row whose `v(Δ)` condition is a parity tail `v ≥ n₀`:
/// the masses at `v = n₀, n₀+2, …, n₀+2(terms−1)` are computed exactly, must
/// form a geometric progression, and the tail is summed in closed form.
/// Returns the sum and whether every term was fully decided at `max_depth`
/// and the progression confirmed.
pub fn geometric_tail(row: &DensityTableRow, terms: u32, max_depth: u32) -> Option<(Rational, bool, Vec<Rational>)> {
    let n0 = match row.extra {
        DeltaCond::EvenGe(n) => if n % 2 == 0 { n } else { n + 1 },
        DeltaCond::OddGe(n) => if n % 2 == 1 { n } else { n + 1 },
        _ => return None,
    };
    let masses: Vec<(Rational, bool)> = (0..terms)
        .map(|i| {
            let mut exact = row.clone();
            exact.extra = DeltaCond::Eq(n0 + 2 * i);
            let t = row_density_tree(&exact, max_depth);
            (t.mass(&()), t.undecided.is_zero())
        })
        .collect();
    let decided = masses.iter().all(|(_, d)| *d);
    let masses: Vec<Rational> = masses.into_iter().map(|(m, _)| m).collect();
    if masses.len() < 2 || masses[0].is_zero() {
        return None;
    }
    let ratio = &masses[1] / &masses[0];
    let confirmed = decided && masses.windows(2).all(|w| w[1] == &w[0] * &ratio) && ratio < Rational::one();
    let sum = &masses[0] / (Rational::one() - &ratio);
    Some((sum, confirmed, masses))
}

fn depth_for(p: u64) -> u32 {
    if p == 2 {
        16
    } else {
        12
    }
}

/// Re-derives every table entry that the valuation data determine.
///
/// * each row's relative densities sum to 1 and rows are pairwise disjoint;
/// * bounded rows: density by residue refinement equals the printed density;
/// * unbounded rows: the geometric-series closed form equals the printed density;
/// * the discriminant-class marginals `rel(1,·)` and `rel(3,·)` are compared
///   with the computed class split (reported, not checked: the `d_p` columns
///   are outside what the valuations determine);
/// * the density sum and the column totals are at least the printed totals and
///   within the printed precision of them.
pub fn verify_table_densities(table: &DensityTable) -> Report {
    let p = table.p;
    let mut r = Report::new(format!("density table p = {p}"));
    let depth = depth_for(p);
    let anchor = format!("{p}-adic density table");
    let tol = frac(1, 10_000);

    for row in &table.rows {
        let s: Rational = row.rel.iter().sum();
        r.check(format!("p={p} {} relative densities sum to 1", row.label()), s.is_one(), "1", render(&s), &anchor);
    }
    let mut overlaps = Vec::new();
    for (i, x) in table.rows.iter().enumerate() {
        for y in &table.rows[i + 1..] {
            if !x.disjoint_from(y) {
                overlaps.push(format!("{} / {}", x.id, y.id));
            }
        }
    }
    r.check(format!("p={p} rows pairwise disjoint"), overlaps.is_empty(), "no overlaps", if overlaps.is_empty() { "none".into() } else { overlaps.join(", ") }, &anchor);

    for row in &table.rows {
        let t = row_density_tree(row, depth);
        if row.extra.is_unbounded() {
            let lo = t.mass(&());
            let hi = &lo + &t.undecided;
            r.check(
                format!("p={p} {} density bracket", row.label()),
                lo <= row.density && row.density <= hi,
                format!("{} in bracket", render(&row.density)),
                format!("[{}, {}]", render(&lo), render(&hi)),
                &anchor,
            );
            if let Some((sum, confirmed, masses)) = geometric_tail(row, 3, depth) {
                r.check(
                    format!("p={p} {} geometric closed form", row.label()),
                    confirmed && sum == row.density,
                    render(&row.density),
                    format!("{} from terms {}", render(&sum), masses.iter().map(crate::rational::to_fraction).collect::<Vec<_>>().join(", ")),
                    &anchor,
                );
            }
        } else {
            r.check(
                format!("p={p} {} density by refinement", row.label()),
                t.undecided.is_zero() && t.mass(&()) == row.density,
                render(&row.density),
                format!("{} (undecided {})", render(&t.mass(&())), render(&t.undecided)),
                &anchor,
            );
        }
        let split = row_class_split(row, depth);
        let want1 = &row.density * (&row.rel[0] + &row.rel[1]);
        let want3 = &row.density * (&row.rel[2] + &row.rel[3]);
        let (got1, got3) = (split.mass(&1), split.mass(&3));
        let u = &split.undecided;
        let agrees = got1 <= want1 && want1 <= &got1 + u && got3 <= want3 && want3 <= &got3 + u;
        r.info(
            format!("p={p} {} discriminant class split", row.label()),
            format!(
                "{}: computed class 1: {}, class 3: {}, undecided {}; printed columns give {}, {}",
                if agrees { "agrees" } else { "differs" },
                render(&got1),
                render(&got3),
                render(u),
                render(&want1),
                render(&want3)
            ),
            &anchor,
        );
    }

    let sum = table.sum_density();
    r.check(
        format!("p={p} density column total"),
        sum >= table.printed_total && &sum - &table.printed_total < tol,
        format!("≥ {} within 1e-4", render(&table.printed_total)),
        render(&sum),
        &anchor,
    );
    let cols = table.column_totals();
    for (k, (got, printed)) in cols.iter().zip(&table.printed_columns).enumerate() {
        let (i, j) = CLASSES[k];
        r.check(
            format!("p={p} column ({i},{j}) total"),
            got >= printed && got - printed < tol,
            format!("≥ {} within 1e-4", render(printed)),
            render(got),
            &anchor,
        );
    }
    let col_sum: Rational = cols.iter().sum();
    r.check(format!("p={p} columns sum to the density total"), col_sum == sum, render(&sum), render(&col_sum), &anchor);
    r
}

/// Lower bounds for `F₁` and `F₂` from the class totals of the two tables:
/// `F₁` pairs classes whose product `i·j·k·ℓ ≡ 1 (mod 4)`, `F₂` those `≡ 3`.
pub fn pair_families(t2: &[Rational; 4], t3: &[Rational; 4]) -> (Rational, Rational) {
    let sign = |k: usize| {
        let (i, j) = CLASSES[k];
        (if i == 1 { 1 } else { -1 }) * j as i32
    };
    let mut f1 = Rational::zero();
    let mut f2 = Rational::zero();
    for a in 0..4 {
        for b in 0..4 {
            let m = &t2[a] * &t3[b];
            if sign(a) * sign(b) == 1 {
                f1 += m;
            } else {
                f2 += m;
            }
        }
    }
    (f1, f2)
}
