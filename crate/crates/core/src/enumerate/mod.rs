//! Exhaustive generation of small graphs avoiding forbidden induced
//! patterns, by canonical augmentation, and of the minimal non-k-colourable
//! graphs among them.
//!
//! Order `n + 1` is produced from the representatives of order `n` by adding
//! a vertex with every admissible neighbourhood. A child is kept only when
//! its canonical deletion vertex (among vertices whose removal keeps the
//! family's shape, with the largest `(degree, neighbour degree sum)`, ties
//! broken by canonical label) leaves a graph isomorphic to the parent, so
//! every class has a single parent class. Children of one parent are
//! deduplicated by canonical code.

mod checkpoint;
mod naming;

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::canon::{canonical_code, canonical_form, CanonicalCode};
use crate::coloring::{
    is_k_colorable, is_minimal_obstruction, k_color, Catalog, ObstructionEntry, SearchRecord,
};
use crate::detect::{self, Pattern};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::reductions::{nice_check, NiceWitness};
use crate::structure::has_clique_cutset;

pub use checkpoint::{Checkpoint, CheckpointError};
pub use naming::name_obstructions;

#[derive(Debug, Error)]
pub enum EnumError {
    #[error("n_max must be at least 1")]
    EmptyBudget,
    #[error("palette size must be at least 1")]
    ZeroPalette,
    #[error("minimal obstruction {graph6} violates the degree/cutset lemma: {detail}")]
    LemmaViolation { graph6: String, detail: String },
    #[error(transparent)]
    Checkpoint(#[from] CheckpointError),
    #[error("worker pool: {0}")]
    Pool(String),
}

/// Toggles for the two pruning rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneFlags {
    /// Drop children containing a forbidden pattern (sound because freeness
    /// is hereditary). When off, such children are still expanded but never
    /// emitted.
    pub forbidden: bool,
    /// Drop children properly containing a confirmed obstruction. When off,
    /// non-colourable graphs are expanded too and minimality alone filters.
    pub containment: bool,
}

impl Default for PruneFlags {
    fn default() -> Self {
        PruneFlags {
            forbidden: true,
            containment: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub k: usize,
    pub n_max: usize,
    pub forbidden: Vec<Graph>,
    pub connected_only: bool,
    pub prune: PruneFlags,
    /// Worker threads; 0 uses the available parallelism.
    pub workers: usize,
    /// Directory for per-level checkpoints, if any.
    pub checkpoint: Option<PathBuf>,
}

impl SearchConfig {
    pub fn new(k: usize, n_max: usize) -> Self {
        SearchConfig {
            k,
            n_max,
            forbidden: vec![crate::graph::named::path(6), crate::graph::named::cycle(4)],
            connected_only: true,
            prune: PruneFlags::default(),
            workers: 0,
            checkpoint: None,
        }
    }

    pub fn forbidding(mut self, forbidden: Vec<Graph>) -> Self {
        self.forbidden = forbidden;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Family,
    Critical,
}

/// Counters for one completed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelStats {
    pub order: usize,
    /// graphs kept for expansion
    pub frontier: usize,
    /// graphs emitted at this order
    pub emitted: usize,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    /// Emitted graphs in canonical labelling, sorted by order then code.
    pub graphs: Vec<Graph>,
    pub levels: Vec<LevelStats>,
}

/// One representative per isomorphism class of (connected, if configured)
/// graphs with at most `n_max` vertices avoiding every forbidden pattern.
pub fn enumerate_family(cfg: &SearchConfig) -> Result<Vec<Graph>, EnumError> {
    Ok(run(cfg, Mode::Family, &mut |_| {})?.graphs)
}

/// Every minimal non-k-colourable graph within the budget avoiding the
/// forbidden patterns, as catalog entries with generic ids in canonical
/// order.
pub fn enumerate_critical(cfg: &SearchConfig) -> Result<Vec<ObstructionEntry>, EnumError> {
    let out = run(cfg, Mode::Critical, &mut |_| {})?;
    Ok(entries_from(cfg.k, out.graphs))
}

pub(crate) fn entries_from(k: usize, graphs: Vec<Graph>) -> Vec<ObstructionEntry> {
    let mut per_order = std::collections::BTreeMap::<usize, usize>::new();
    graphs
        .into_iter()
        .map(|g| {
            let idx = per_order.entry(g.order()).or_default();
            *idx += 1;
            let id = format!("k{}-n{}-{}", k, g.order(), idx);
            ObstructionEntry::new(id, k, g, crate::coloring::Provenance::EnumerationDerived)
        })
        .collect()
}

/// Wraps enumerated obstructions as a catalog with recognisable names;
/// `lower` is the catalog for `k - 1`, used to name dominated entries.
pub fn catalog_from(cfg: &SearchConfig, graphs: Vec<Graph>, lower: Option<&Catalog>) -> Catalog {
    let mut entries = name_obstructions(cfg.k, entries_from(cfg.k, graphs), lower);
    // renumber the unnamed entries consecutively per order
    let generic = format!("k{}-n", cfg.k);
    let mut per_order = std::collections::BTreeMap::<usize, usize>::new();
    for e in entries.iter_mut().filter(|e| e.id.starts_with(&generic)) {
        let idx = per_order.entry(e.graph.order()).or_default();
        *idx += 1;
        e.id = format!("{generic}{}-{}", e.graph.order(), idx);
    }
    Catalog::new(cfg.k, cfg.n_max, entries)
        .expect("enumeration output is duplicate-free")
        .with_search(SearchRecord {
            forbidden: cfg.forbidden.iter().map(to_graph6).collect(),
            connected_only: cfg.connected_only,
            prune_forbidden: cfg.prune.forbidden,
            prune_containment: cfg.prune.containment,
        })
}

/// k-critical graphs (minimal non-(k-1)-colourable) within the budget that
/// admit a nice triple, each with its witness.
pub fn find_nice_critical(
    k: usize,
    n_max: usize,
    forbidden: Vec<Graph>,
    workers: usize,
) -> Result<Vec<(Graph, NiceWitness)>, EnumError> {
    if k < 2 {
        return Err(EnumError::ZeroPalette);
    }
    let mut cfg = SearchConfig::new(k - 1, n_max).forbidding(forbidden);
    cfg.workers = workers;
    let out = run(&cfg, Mode::Critical, &mut |_| {})?;
    Ok(out
        .graphs
        .into_iter()
        .filter_map(|g| nice_check(&g, k).map(|w| (g, w)))
        .collect())
}

struct Parent {
    graph: Graph,
    code: CanonicalCode,
}

struct Child {
    graph: Graph,
    code: CanonicalCode,
    emit: bool,
    expand: bool,
}

/// Runs the search level by level, reporting each completed order.
pub fn run(
    cfg: &SearchConfig,
    mode: Mode,
    progress: &mut dyn FnMut(&LevelStats),
) -> Result<Outcome, EnumError> {
    if cfg.n_max < 1 {
        return Err(EnumError::EmptyBudget);
    }
    if cfg.k < 1 && mode == Mode::Critical {
        return Err(EnumError::ZeroPalette);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| EnumError::Pool(e.to_string()))?;
    run_levels(cfg, mode, &pool, progress)
}

fn run_levels(
    cfg: &SearchConfig,
    mode: Mode,
    pool: &rayon::ThreadPool,
    progress: &mut dyn FnMut(&LevelStats),
) -> Result<Outcome, EnumError> {
    let patterns: Vec<Pattern> = cfg.forbidden.iter().cloned().map(Pattern::new).collect();
    let fingerprint = checkpoint::Fingerprint::of(cfg, mode);
    let resumed = match &cfg.checkpoint {
        Some(dir) => Checkpoint::latest(dir, &fingerprint)?,
        None => None,
    };

    let (mut order, mut frontier, mut emitted, mut levels) = match resumed {
        Some(cp) => {
            let frontier = cp.frontier_graphs()?;
            let emitted = cp.emitted_graphs()?;
            (cp.completed_order, frontier, emitted, cp.levels)
        }
        None => {
            let k1 = Graph::new(1);
            let free = detect::is_free(&k1, &patterns).is_free();
            let mut emitted = Vec::new();
            let mut expand = true;
            match mode {
                Mode::Family => {
                    if free {
                        emitted.push(k1.clone());
                    }
                }
                Mode::Critical => {
                    if free && !is_k_colorable(&k1, cfg.k) {
                        emitted.push(k1.clone());
                        expand = !cfg.prune.containment;
                    }
                }
            }
            let frontier = if expand && (free || !cfg.prune.forbidden) {
                vec![k1]
            } else {
                vec![]
            };
            let stats = LevelStats {
                order: 1,
                frontier: frontier.len(),
                emitted: emitted.len(),
            };
            progress(&stats);
            (1, frontier, emitted, vec![stats])
        }
    };

    while order < cfg.n_max && !frontier.is_empty() {
        let obstructions: Vec<Pattern> = if mode == Mode::Critical && cfg.prune.containment {
            emitted.iter().cloned().map(Pattern::new).collect()
        } else {
            Vec::new()
        };
        let parents: Vec<Parent> = frontier
            .into_iter()
            .map(|g| Parent {
                code: canonical_code(&g),
                graph: g,
            })
            .collect();
        let batches: Vec<Vec<Child>> = pool.install(|| {
            parents
                .par_iter()
                .map(|p| expand_parent(cfg, mode, &patterns, &obstructions, p))
                .collect::<Result<_, _>>()
        })?;
        let mut children: Vec<Child> = batches.into_iter().flatten().collect();
        children.sort_by(|a, b| a.code.cmp(&b.code));
        order += 1;
        let mut new_emitted = 0;
        let mut next = Vec::new();
        for c in children {
            if c.emit {
                emitted.push(c.graph.clone());
                new_emitted += 1;
            }
            if c.expand {
                next.push(c.graph);
            }
        }
        frontier = next;
        let stats = LevelStats {
            order,
            frontier: frontier.len(),
            emitted: new_emitted,
        };
        progress(&stats);
        levels.push(stats);
        if let Some(dir) = &cfg.checkpoint {
            Checkpoint::new(&fingerprint, order, &frontier, &emitted, &levels).save(dir)?;
        }
    }
    Ok(Outcome {
        graphs: emitted,
        levels,
    })
}

/// `(degree, sum of neighbour degrees)`, an isomorphism invariant used to
/// reject most children before computing a canonical form.
fn vertex_invariant(g: &Graph, v: usize) -> (usize, usize) {
    (g.degree(v), g.neighbor_iter(v).map(|u| g.degree(u)).sum())
}

fn expand_parent(
    cfg: &SearchConfig,
    mode: Mode,
    patterns: &[Pattern],
    obstructions: &[Pattern],
    parent: &Parent,
) -> Result<Vec<Child>, EnumError> {
    let p = &parent.graph;
    let n = p.order();
    let v = n;
    let parent_colouring = match mode {
        Mode::Critical => k_color(p, cfg.k).expect("palette checked"),
        Mode::Family => None,
    };
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut out = Vec::new();
    let first = usize::from(cfg.connected_only);
    for mask in first as u64..(1u64 << n) {
        let nbrs = VertexSet::from_vertices(n + 1, (0..n).filter(|&i| mask >> i & 1 == 1));
        let child = p.with_vertex(&nbrs);
        // without the prune the parent itself may already contain a pattern
        let free = if cfg.prune.forbidden {
            if patterns.iter().any(|pat| pat.find_through(&child, v).is_some()) {
                continue;
            }
            true
        } else {
            !patterns.iter().any(|pat| pat.find(&child).is_some())
        };
        if obstructions.iter().any(|o| o.find_through(&child, v).is_some()) {
            continue;
        }
        // canonical deletion
        let eligible = if cfg.connected_only {
            child.non_cut_vertices()
        } else {
            child.vertex_set()
        };
        let inv: Vec<Option<(usize, usize)>> = (0..=n)
            .map(|u| eligible.contains(u).then(|| vertex_invariant(&child, u)))
            .collect();
        let best_inv = inv.iter().flatten().max().copied().expect("v is eligible");
        if inv[v] != Some(best_inv) {
            continue;
        }
        let form = canonical_form(&child);
        let w = (0..=n)
            .filter(|&u| inv[u] == Some(best_inv))
            .max_by_key(|&u| form.labelling[u])
            .expect("v qualifies");
        if w != v && canonical_code(&child.remove_vertex(w)) != parent.code {
            continue;
        }
        if !seen.insert(form.code.clone()) {
            continue;
        }
        let canonical = form.code.to_graph();
        let (emit, expand) = match mode {
            Mode::Family => (free, true),
            Mode::Critical => {
                let colourable = match &parent_colouring {
                    Some(c) => {
                        let used: HashSet<usize> = nbrs.iter().map(|u| c.colours[u]).collect();
                        used.len() < cfg.k || is_k_colorable(&child, cfg.k)
                    }
                    None => is_k_colorable(&child, cfg.k),
                };
                if colourable {
                    (false, true)
                } else {
                    let minimal = free && is_minimal_obstruction(&child, cfg.k);
                    if minimal {
                        check_degree_cutset_lemma(&child, cfg.k)?;
                    }
                    (minimal, !cfg.prune.containment)
                }
            }
        };
        out.push(Child {
            graph: canonical,
            code: form.code,
            emit,
            expand,
        });
    }
    Ok(out)
}

/// Minimal obstructions have minimum degree at least `k` and no clique
/// cutset; a failure here is a bug, not a filter.
fn check_degree_cutset_lemma(g: &Graph, k: usize) -> Result<(), EnumError> {
    if g.min_degree() < k {
        return Err(EnumError::LemmaViolation {
            graph6: to_graph6(g),
            detail: format!("minimum degree {} < {k}", g.min_degree()),
        });
    }
    if has_clique_cutset(g) {
        return Err(EnumError::LemmaViolation {
            graph6: to_graph6(g),
            detail: "has a clique cutset".into(),
        });
    }
    Ok(())
}

/// Reads a checkpoint directory's latest level, for inspection.
pub fn checkpoint_file(dir: &Path) -> PathBuf {
    checkpoint::file_in(dir)
}
