//! Exact colouring, obstruction minimisation, the certifying colourer and
//! obstruction catalogs.

mod catalog;
mod certify;
mod exact;

use thiserror::Error;

pub use catalog::{
    manifest_path, Catalog, CatalogError, CatalogReport, EntryReport, ObstructionEntry,
    Provenance, SearchRecord, Verification,
};
pub use certify::{certify_color, Certificate, CertificateJson, ObstructionJson};
pub use exact::{
    chromatic_number, is_k_colorable, is_minimal_obstruction, k_color, minimize_obstruction,
    verify_coloring, Coloring, ColoringCheck,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("palette size must be at least 1")]
    ZeroPalette,
    #[error("colouring covers {coloured} vertices, graph has {n}")]
    NotTotal { coloured: usize, n: usize },
    #[error("vertex {vertex} has colour {colour}, outside 1..={k}")]
    ColourOutOfRange { vertex: usize, colour: usize, k: usize },
    #[error("graph is {0}-colourable")]
    Colorable(usize),
    #[error("certification supports k = 3 or 4, got {0}")]
    UnsupportedK(usize),
    #[error("catalog is for k={catalog}, requested k={k}")]
    CatalogMismatch { catalog: usize, k: usize },
    #[error("input contains an induced {pattern} at {witness:?}")]
    NotP6C4Free { pattern: String, witness: Vec<usize> },
}
