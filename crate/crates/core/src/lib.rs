//! Homomorphisms of signed graphs: switching, signed chromatic numbers,
//! signed Paley graphs and the gadget constructions used to bound them.
//!
//! ```
//! use sghom::gen::paley_plus;
//! use sghom::gen::complete_with_negative;
//! use sghom::solver::{hom, SearchOptions};
//!
//! let target = paley_plus(5).unwrap();
//! let k4 = complete_with_negative(4, &[(0, 1)]);
//! let m = hom(&k4, &target, &SearchOptions::default()).unwrap().unwrap();
//! assert!(m.is_hom(&k4, &target));
//! ```

pub mod analysis;
pub mod bitset;
pub mod error;
pub mod gen;
pub mod sgcore;
pub mod solver;

pub use error::{Error, Result};
pub use sgcore::{Mapping, Sign, SignedGraph, VertexSet, Walk};
