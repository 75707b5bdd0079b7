//! Signed graph data model: construction, switching, closed-walk signs,
//! switching equivalence, double switching graphs and isomorphism.

pub mod canon;
mod graph;
mod iso;
mod structure;
mod switching;

pub use graph::{Mapping, Sign, SignedGraph, VertexSet, Walk};
pub use iso::{
    canonical_key, canonical_key_colored, canonical_labeling, is_sp_isomorphism, signed_isomorphic,
    sp_isomorphic, sp_isomorphism_with, switching_isomorphism_with, IsoMode,
};
pub use structure::{girth, neighbors};
pub use switching::{
    anti_twin, double_switching, forced_distinct_pairs, is_switch_equivalent, switch, switch_at, switching_witness,
    tree_normal_form, walk_sign,
};
pub(crate) use switching::tree_normalizer;
