//! Reduction types, local twist signs, local densities, the 2- and 3-adic
//! tables and the Euler-product bounds behind the root-number families.

pub mod curve;
pub mod enumerate;
pub mod euler;
pub mod families;
pub mod local;
pub mod tables;

pub use curve::{alpha_p, d_p, minimalize, reduction_type, EllipticCurve, Reduction, ReductionData};
pub use euler::{density_f3_f4, EulerBounds};
pub use families::{combine_families, density_families, FamilyDensities};
pub use local::{local_density, LocalEvent};
pub use tables::{classify_row, shipped_table, verify_table_densities, DensityTable, DensityTableRow};
