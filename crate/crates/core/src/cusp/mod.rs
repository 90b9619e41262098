//! Torus weights of the coordinates, the cuspidal partition and the
//! certificates bounding each cuspidal piece.

pub mod certificate;
pub mod monomial;
pub mod partition;
pub mod sets;
pub mod variable;
pub mod verify;

pub use certificate::{parse_certificates, shipped_certificates, CuspCertificate};
pub use monomial::Monomial;
pub use partition::{check_cover, generate_partition};
pub use variable::{leq, minimal_complement, weight, VarSet, Variable, WeightVector};
pub use verify::{verify_all, verify_pi, verify_pi_u};
