//! Colouring toolkit for (P6, C4)-free graphs: exact and certifying
//! colouring, obstruction catalogs recovered by exhaustive enumeration,
//! structural property checks around induced five-cycles, and reduction
//! gadgets for hardness constructions.

pub mod bitset;
pub mod canon;
pub mod coloring;
pub mod detect;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod reductions;
pub mod structure;

pub use bitset::VertexSet;
pub use canon::{canonical_code, canonical_form, is_isomorphic, CanonicalCode};
pub use detect::{Embedding, Freeness, Pattern};
pub use graph::{named, Graph, GraphError};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
