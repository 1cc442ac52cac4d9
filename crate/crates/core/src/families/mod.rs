//! Constructors for the standard matroid classes and the binary test.

mod binary;
mod graphic;
mod system;
mod transversal;
mod uniform;

pub use binary::is_binary;
pub use graphic::{graphic_matroid, Edge, MultiGraph};
pub use system::SetSystem;
pub use transversal::{expand_presentation, has_transversal, maximum_matching, transversal_matroid};
pub use uniform::{partition_matroid, uniform, uniform_on};
