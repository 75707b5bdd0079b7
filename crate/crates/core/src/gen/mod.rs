//! Generators: finite fields, Paley graphs, named gadgets, the gadget tower,
//! the star and attachment constructions, configurations and enumerators.

mod config;
mod construct;
mod cubic;
mod enumerate;
mod field;
mod named;
mod paley;

pub use config::{find_configuration, ConfigPattern};
pub use construct::{attach_edge_gadgets, attach_vertex_gadgets, star_construction};
pub use cubic::{enumerate_cubic_graphs, MAX_CUBIC_ORDER};
pub use enumerate::{
    default_cap, enumerate_signatures_mod_switching, enumerate_targets, enumerate_targets_with, TargetCatalog,
    TargetScope,
};
pub use field::{make_field, FiniteField, MAX_FIELD_ORDER};
pub use named::{build_tower, complete_with_negative, h_gadget, named_graph, pin, GadgetTemplate, NamedGraph, NAMES};
pub use paley::{paley, paley_plus};
