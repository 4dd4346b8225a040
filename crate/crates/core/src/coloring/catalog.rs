//! Obstruction catalogs: graph6 lines plus a JSON manifest.
//!
//! The manifest lives next to the graph6 file with a `.json` extension and
//! lists one entry per line in the same order.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::detect;
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6, Graph6Error};
use crate::structure::has_clique_cutset;

use super::exact::{is_k_colorable, is_minimal_obstruction};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("graph6 line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error("corrupt manifest: {0}")]
    Manifest(String),
    #[error("manifest lists {manifest} entries but the graph file has {graphs}")]
    CountMismatch { manifest: usize, graphs: usize },
    #[error("manifest entry {id} does not match graph line {line}")]
    EntryMismatch { id: String, line: usize },
    #[error("entries {first} and {second} are isomorphic")]
    DuplicateCode { first: String, second: String },
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("entry {id} is for k={entry_k}, catalog is for k={k}")]
    WrongK { id: String, entry_k: usize, k: usize },
    #[error("no built-in catalog for k={0}")]
    NoBuiltin(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Constructed from a description independent of any search.
    PaperFixed,
    EnumerationDerived,
}

/// Which invariants were confirmed by direct computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Verification {
    pub non_colorable: bool,
    pub vertex_critical: bool,
    pub min_degree: bool,
    pub no_clique_cutset: bool,
    pub p6_c4_free: bool,
}

impl Verification {
    pub fn all(&self) -> bool {
        self.non_colorable
            && self.vertex_critical
            && self.min_degree
            && self.no_clique_cutset
            && self.p6_c4_free
    }

    pub fn compute(g: &Graph, k: usize) -> Self {
        Verification {
            non_colorable: !is_k_colorable(g, k),
            vertex_critical: is_minimal_obstruction(g, k),
            min_degree: g.min_degree() >= k,
            no_clique_cutset: !has_clique_cutset(g),
            p6_c4_free: detect::is_free(g, &detect::p6_c4()).is_free(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionEntry {
    pub id: String,
    pub k: usize,
    pub graph: Graph,
    pub code: CanonicalCode,
    pub provenance: Provenance,
    pub verified: Verification,
}

impl ObstructionEntry {
    pub fn new(id: impl Into<String>, k: usize, graph: Graph, provenance: Provenance) -> Self {
        let code = canonical_code(&graph);
        let verified = Verification::compute(&graph, k);
        ObstructionEntry {
            id: id.into(),
            k,
            graph,
            code,
            provenance,
            verified,
        }
    }
}

/// Parameters of the search that produced a catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchRecord {
    /// graph6 of each forbidden induced pattern
    pub forbidden: Vec<String>,
    pub connected_only: bool,
    pub prune_forbidden: bool,
    pub prune_containment: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    k: usize,
    n_max_searched: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    search: Option<SearchRecord>,
    entries: Vec<ManifestEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifestEntry {
    id: String,
    n: usize,
    graph6: String,
    provenance: Provenance,
    verified: Verification,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub k: usize,
    /// Largest order covered by the search that produced the catalog.
    pub n_max_searched: usize,
    pub search: Option<SearchRecord>,
    entries: Vec<ObstructionEntry>,
    index: HashMap<CanonicalCode, usize>,
}

const K3_G6: &str = include_str!("../../data/catalog_k3.g6");
const K3_JSON: &str = include_str!("../../data/catalog_k3.json");
const K4_G6: &str = include_str!("../../data/catalog_k4.g6");
const K4_JSON: &str = include_str!("../../data/catalog_k4.json");

impl Catalog {
    pub fn new(
        k: usize,
        n_max_searched: usize,
        entries: Vec<ObstructionEntry>,
    ) -> Result<Self, CatalogError> {
        let mut index = HashMap::new();
        let mut ids = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            if e.k != k {
                return Err(CatalogError::WrongK {
                    id: e.id.clone(),
                    entry_k: e.k,
                    k,
                });
            }
            if let Some(&j) = index.get(&e.code) {
                let first: &ObstructionEntry = &entries[j];
                return Err(CatalogError::DuplicateCode {
                    first: first.id.clone(),
                    second: e.id.clone(),
                });
            }
            if ids.insert(e.id.clone(), i).is_some() {
                return Err(CatalogError::DuplicateId(e.id.clone()));
            }
            index.insert(e.code.clone(), i);
        }
        Ok(Catalog {
            k,
            n_max_searched,
            search: None,
            entries,
            index,
        })
    }

    pub fn with_search(mut self, search: SearchRecord) -> Self {
        self.search = Some(search);
        self
    }

    pub fn entries(&self) -> &[ObstructionEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&ObstructionEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// The entry isomorphic to `g`, if any.
    pub fn lookup(&self, g: &Graph) -> Option<&ObstructionEntry> {
        self.lookup_code(&canonical_code(g))
    }

    pub fn lookup_code(&self, code: &CanonicalCode) -> Option<&ObstructionEntry> {
        self.index.get(code).map(|&i| &self.entries[i])
    }

    /// The shipped catalog for `k` (3 or 4).
    pub fn builtin(k: usize) -> Result<Self, CatalogError> {
        match k {
            3 => Self::from_texts(K3_G6, K3_JSON),
            4 => Self::from_texts(K4_G6, K4_JSON),
            _ => Err(CatalogError::NoBuiltin(k)),
        }
    }

    /// Parses a catalog from its graph6 text and manifest text. Verification
    /// flags are taken from the manifest; [`Catalog::verify`] recomputes them.
    pub fn from_texts(graph6: &str, manifest: &str) -> Result<Self, CatalogError> {
        let manifest: Manifest =
            serde_json::from_str(manifest).map_err(|e| CatalogError::Manifest(e.to_string()))?;
        let lines: Vec<(usize, &str)> = graph6
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        if lines.len() != manifest.entries.len() {
            return Err(CatalogError::CountMismatch {
                manifest: manifest.entries.len(),
                graphs: lines.len(),
            });
        }
        let mut entries = Vec::with_capacity(lines.len());
        for ((line, text), me) in lines.into_iter().zip(manifest.entries) {
            let graph =
                from_graph6(text).map_err(|source| CatalogError::Graph6 { line, source })?;
            if me.graph6 != text || me.n != graph.order() {
                return Err(CatalogError::EntryMismatch { id: me.id, line });
            }
            entries.push(ObstructionEntry {
                id: me.id,
                k: manifest.k,
                code: canonical_code(&graph),
                graph,
                provenance: me.provenance,
                verified: me.verified,
            });
        }
        let mut catalog = Self::new(manifest.k, manifest.n_max_searched, entries)?;
        catalog.search = manifest.search;
        Ok(catalog)
    }

    pub fn load(path: &Path) -> Result<Self, CatalogError> {
        let read = |p: &Path| {
            std::fs::read_to_string(p).map_err(|source| CatalogError::Io {
                path: p.to_path_buf(),
                source,
            })
        };
        let g6 = read(path)?;
        let manifest = read(&manifest_path(path))?;
        Self::from_texts(&g6, &manifest)
    }

    /// The graph6 text and manifest text.
    pub fn to_texts(&self) -> (String, String) {
        let mut g6 = String::new();
        let mut entries = Vec::new();
        for e in &self.entries {
            let line = to_graph6(&e.graph);
            g6.push_str(&line);
            g6.push('\n');
            entries.push(ManifestEntry {
                id: e.id.clone(),
                n: e.graph.order(),
                graph6: line,
                provenance: e.provenance,
                verified: e.verified,
            });
        }
        let manifest = Manifest {
            k: self.k,
            n_max_searched: self.n_max_searched,
            search: self.search.clone(),
            entries,
        };
        let mut json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        json.push('\n');
        (g6, json)
    }

    pub fn save(&self, path: &Path) -> Result<(), CatalogError> {
        let (g6, json) = self.to_texts();
        let write = |p: &Path, text: &str| {
            std::fs::write(p, text).map_err(|source| CatalogError::Io {
                path: p.to_path_buf(),
                source,
            })
        };
        write(path, &g6)?;
        write(&manifest_path(path), &json)
    }

    /// Recomputes every entry invariant.
    pub fn verify(&self) -> CatalogReport {
        let entries: Vec<EntryReport> = self
            .entries
            .iter()
            .map(|e| {
                let computed = Verification::compute(&e.graph, self.k);
                EntryReport {
                    id: e.id.clone(),
                    n: e.graph.order(),
                    code_matches: canonical_code(&e.graph) == e.code,
                    manifest_agrees: computed == e.verified,
                    computed,
                }
            })
            .collect();
        CatalogReport {
            k: self.k,
            n_max_searched: self.n_max_searched,
            all_pass: entries
                .iter()
                .all(|e| e.computed.all() && e.code_matches && e.manifest_agrees),
            entries,
        }
    }
}

/// The manifest that accompanies a catalog graph6 file.
pub fn manifest_path(path: &Path) -> PathBuf {
    path.with_extension("json")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub id: String,
    pub n: usize,
    pub computed: Verification,
    pub code_matches: bool,
    pub manifest_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogReport {
    pub k: usize,
    pub n_max_searched: usize,
    pub all_pass: bool,
    pub entries: Vec<EntryReport>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn tiny() -> Catalog {
        Catalog::new(
            3,
            5,
            vec![ObstructionEntry::new("K4", 3, complete(4), Provenance::PaperFixed)],
        )
        .unwrap()
    }

    #[test]
    fn round_trip_through_texts() {
        let c = tiny();
        let (g6, json) = c.to_texts();
        assert_eq!(g6, "C~\n");
        let back = Catalog::from_texts(&g6, &json).unwrap();
        assert_eq!(back.entries(), c.entries());
        assert_eq!(back.n_max_searched, 5);
    }

    #[test]
    fn lookup_by_isomorphism() {
        let c = tiny();
        assert_eq!(c.lookup(&complete(4)).unwrap().id, "K4");
        assert!(c.lookup(&cycle(5)).is_none());
    }

    #[test]
    fn rejects_corruption() {
        let (g6, json) = tiny().to_texts();
        assert!(matches!(
            Catalog::from_texts("C~\nC~\n", &json),
            Err(CatalogError::CountMismatch { .. })
        ));
        assert!(matches!(
            Catalog::from_texts("C}\n", &json),
            Err(CatalogError::EntryMismatch { .. })
        ));
        assert!(matches!(Catalog::from_texts(&g6, "{"), Err(CatalogError::Manifest(_))));
        let dup = Catalog::new(
            3,
            5,
            vec![
                ObstructionEntry::new("a", 3, complete(4), Provenance::PaperFixed),
                ObstructionEntry::new("b", 3, complete(4), Provenance::PaperFixed),
            ],
        );
        assert!(matches!(dup, Err(CatalogError::DuplicateCode { .. })));
    }

    #[test]
    fn verify_recomputes_flags() {
        let mut c = tiny();
        assert!(c.verify().all_pass);
        c.entries[0].verified.min_degree = false;
        assert!(!c.verify().all_pass);
        let bad = Catalog::new(
            3,
            5,
            vec![ObstructionEntry::new("C5", 3, cycle(5), Provenance::PaperFixed)],
        )
        .unwrap();
        let r = bad.verify();
        assert!(!r.all_pass);
        assert!(!r.entries[0].computed.non_colorable);
    }

    #[test]
    fn save_and_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cat.g6");
        tiny().save(&path).unwrap();
        assert!(path.with_extension("json").exists());
        assert_eq!(Catalog::load(&path).unwrap().len(), 1);
        assert!(matches!(
            Catalog::load(&dir.path().join("missing.g6")),
            Err(CatalogError::Io { .. })
        ));
    }
}
