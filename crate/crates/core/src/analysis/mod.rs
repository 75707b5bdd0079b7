//! Structural analysers: signed neighbourhoods of tuples, the extension
//! properties, symmetry, agreement and splitters.

mod neighborhood;
mod splitters;
mod transitivity;

pub use neighborhood::{
    agrees_on, alpha_neighborhood, has_property_p, has_property_phat, hat_neighborhood, induced_signed_subgraph,
    SignVector,
};
pub use splitters::{splitters, SplitterRecord};
pub use transitivity::{transitivity, TransitivityKind};
