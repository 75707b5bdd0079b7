//! Decision procedures: sign-preserving and switching homomorphisms, signed
//! chromatic numbers, classical invariants and closed-form bounds.

mod chromatic;
mod classic;
mod formulas;
mod hom;

pub use chromatic::{chi_s, chi_s_with, chi_sp, chi_sp_with, sandwich_check, ChiOptions, ChromaticResult};
pub use classic::{
    acyclic_chromatic_number, chromatic_number, has_clique_minor, ACYCLIC_MAX_ORDER, CHROMATIC_MAX_ORDER,
    MINOR_MAX_CLIQUE, MINOR_MAX_ORDER,
};
pub use formulas::{kn_lower_bound_formulas, max_degree_bound_formulas, DegreeBounds, DEGREE_BOUND_MIN_DELTA};
pub use hom::{hom, hom_oracle, sp_hom, sp_hom_extending, SearchOptions, ORACLE_MAX_ORDER};
