//! Explicit matroids, the expansion and contraction functors, constructors
//! for uniform, partition, graphic and transversal matroids, and a bounded
//! checker for symmetric-exchange connectivity of basis sequences.

pub mod cli;
pub mod element;
pub mod error;
pub mod exchange;
pub mod families;
pub mod format;
pub mod functors;
pub mod iso;
pub mod matroid;

pub use element::{ElementLabel, ElementSet, GroundSet};
pub use error::{Error, Result};
pub use functors::{contract, expand, expand_family, is_contracted, ContractionResult, Expansion, ExpansionVector};
pub use iso::{families_isomorphic, matroids_isomorphic, Relabeling};
pub use matroid::{add_coloop, direct_sum, is_antichain, is_matroid, Family, Matroid};
