//! Admissible triples, continuous parameters and the r-matrices built from them.

mod build;
mod r0;
mod triple;

pub use build::{build_rbd, gamma1_span_roots, root_part, symmetry_residual, theta_table, verify_symmetry, wedge_part};
pub use r0::{check_r0, r0_constraint_residuals, r0_from_skew, solve_r0, ContinuousParam};
pub use triple::{enumerate_triples, AdmissibleTriple, MAX_ENUMERATION_RANK};
