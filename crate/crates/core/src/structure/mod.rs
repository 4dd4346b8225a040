//! Structure around induced five-cycles: the neighbourhood partition and
//! its properties, clique cutsets, dominating cycles, blow-ups of the
//! Petersen graph, and size bounds.

mod bounds;
mod cutset;
mod lemmas;
mod partition;
mod properties;

use thiserror::Error;

pub use bounds::{
    check_size_bounds, check_size_bounds_with, BoundCheck, BoundPreconditions, BoundReport,
    BoundVerdict,
};
pub use cutset::{
    decompose, find_clique_cutset, find_clique_cutset_within, has_clique_cutset,
    minimal_separators, reassemble, CliqueCutset, CutsetTree,
};
pub use lemmas::{
    check_c6_lemma, check_dominating_c5, is_specific, specific_embedding, specific_witness,
    true_twin_classes, LemmaVerdict,
};
pub use partition::{classify, induced_c5s, C5Embedding, SPartition, SetName};
pub use properties::{
    check_all_c5, check_properties, check_with, replay, Fact, Hypotheses, PropertyReport,
    PropertyVerdict, Verdict, PROPERTY_NAMES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("{0:?} is not an induced five-cycle")]
    NotInducedC5(Vec<usize>),
    #[error("partition does not match the graph and cycle")]
    MismatchedPartition,
}
