//! Assembly of the root-number families from the 2-, 3- and prime-to-6 parts.

use super::euler::{density_f3_f4, EulerBounds};
use super::tables::{pair_families, DensityTable};
use crate::rational::{frac, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyDensities {
    pub f1: Rational,
    pub f2: Rational,
    pub f3: Rational,
    pub f4: Rational,
    pub fplus: Rational,
    pub fminus: Rational,
    pub ftotal: Rational,
}

/// `F⁺ = F₁F₄ + F₂F₃`, `F⁻ = F₁F₃ + F₂F₄`, `F = F⁺/5 + 4F⁻/5`: the 2-3-adic and
/// prime-to-6 conditions are independent, and positive and negative
/// discriminants occur in proportion 1 : 4.
pub fn combine_families(f1: &Rational, f2: &Rational, f3: &Rational, f4: &Rational) -> FamilyDensities {
    let fplus = f1 * f4 + f2 * f3;
    let fminus = f1 * f3 + f2 * f4;
    let ftotal = &fplus * frac(1, 5) + &fminus * frac(4, 5);
    FamilyDensities { f1: f1.clone(), f2: f2.clone(), f3: f3.clone(), f4: f4.clone(), fplus, fminus, ftotal }
}

/// `F₁, F₂` from the printed class totals of both tables.
pub fn density_f1_f2_printed(t2: &DensityTable, t3: &DensityTable) -> (Rational, Rational) {
    pair_families(&t2.printed_columns, &t3.printed_columns)
}

/// `F₁, F₂` from class totals recomputed from the row data.
pub fn density_f1_f2_rows(t2: &DensityTable, t3: &DensityTable) -> (Rational, Rational) {
    pair_families(&t2.column_totals(), &t3.column_totals())
}

/// Component bounds stated alongside the family theorem.
pub fn stated_components() -> [Rational; 4] {
    [frac(59179, 100_000), frac(4032, 10_000), frac(96689, 100_000), frac(326, 10_000)]
}

/// Family densities from each source of component bounds.
#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub stated: FamilyDensities,
    pub printed_tables: FamilyDensities,
    pub row_tables: FamilyDensities,
    pub euler: EulerBounds,
}

pub fn density_families(t2: &DensityTable, t3: &DensityTable, prime_bound: u64) -> crate::Result<FamilyReport> {
    let [s1, s2, s3, s4] = stated_components();
    let euler = density_f3_f4(prime_bound)?;
    let (p1, p2) = density_f1_f2_printed(t2, t3);
    let (r1, r2) = density_f1_f2_rows(t2, t3);
    Ok(FamilyReport {
        stated: combine_families(&s1, &s2, &s3, &s4),
        printed_tables: combine_families(&p1, &p2, &euler.f3_lower, &euler.f4_lower),
        row_tables: combine_families(&r1, &r2, &euler.f3_lower, &euler.f4_lower),
        euler,
    })
}
