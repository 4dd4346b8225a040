//! Dominating cycles and clique blow-ups of the Petersen graph plus a
//! universal vertex.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::detect::{self, find_induced_copy, induced_cycles, Embedding, Freeness};
use crate::graph::{named, Graph};

use super::has_clique_cutset;

/// Outcome of checking a lemma statement on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum LemmaVerdict {
    Holds { reason: String },
    NotApplicable { reason: String },
    /// A cycle that fails to dominate.
    Violated { cycle: Vec<usize> },
}

impl LemmaVerdict {
    pub fn is_violated(&self) -> bool {
        matches!(self, LemmaVerdict::Violated { .. })
    }
}

/// Groups of true twins (equal closed neighbourhoods), by smallest member.
pub fn true_twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let mut closed = g.neighbors(v);
        closed.insert(v);
        let id = classes.len();
        let mut members = vec![v];
        class_of[v] = id;
        for u in v + 1..n {
            if class_of[u] == usize::MAX && g.has_edge(u, v) {
                let mut cu = g.neighbors(u);
                cu.insert(u);
                if cu == closed {
                    class_of[u] = id;
                    members.push(u);
                }
            }
        }
        classes.push(members);
    }
    classes
}

/// Is `g` a clique blow-up of the 11-vertex base (Petersen plus a universal
/// vertex), with cliques joined completely iff their base vertices are
/// adjacent? Returns the base vertex hosting each twin class.
///
/// Twin classes of a blow-up are unions of substituted cliques, so `g`
/// qualifies iff its twin quotient is an induced subgraph of the base.
pub fn specific_witness(g: &Graph) -> Option<Vec<(Vec<usize>, usize)>> {
    let classes = true_twin_classes(g);
    if classes.len() > 11 {
        return None;
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let quotient = g.induced_unchecked(&reps);
    let base = named::petersen_plus_universal();
    let e = find_induced_copy(&base, &quotient)?;
    Some(classes.into_iter().zip(e.map).collect())
}

pub fn is_specific(g: &Graph) -> bool {
    specific_witness(g).is_some()
}

fn p6_c4_free(g: &Graph) -> bool {
    detect::is_free(g, &detect::p6_c4()) == Freeness::Free
}

fn first_non_dominating(g: &Graph, l: usize) -> Option<Vec<usize>> {
    induced_cycles(g, l)
        .into_iter()
        .find(|c| !g.is_dominating(&VertexSet::from_vertices(g.order(), c.iter().copied())))
}

/// Every induced C5 of a (P6, C4)-free graph without clique cutset is
/// dominating.
pub fn check_dominating_c5(g: &Graph) -> LemmaVerdict {
    if !p6_c4_free(g) {
        return LemmaVerdict::NotApplicable {
            reason: "graph is not (P6, C4)-free".into(),
        };
    }
    if has_clique_cutset(g) {
        return LemmaVerdict::NotApplicable {
            reason: "graph has a clique cutset".into(),
        };
    }
    match first_non_dominating(g, 5) {
        Some(cycle) => LemmaVerdict::Violated { cycle },
        None => LemmaVerdict::Holds {
            reason: "every induced C5 dominates".into(),
        },
    }
}

/// A (P6, C4)-free graph without clique cutset is a blow-up of the base or
/// has only dominating induced C6s.
pub fn check_c6_lemma(g: &Graph) -> LemmaVerdict {
    if !p6_c4_free(g) {
        return LemmaVerdict::NotApplicable {
            reason: "graph is not (P6, C4)-free".into(),
        };
    }
    if has_clique_cutset(g) {
        return LemmaVerdict::NotApplicable {
            reason: "graph has a clique cutset".into(),
        };
    }
    if is_specific(g) {
        return LemmaVerdict::Holds {
            reason: "graph is specific".into(),
        };
    }
    match first_non_dominating(g, 6) {
        Some(cycle) => LemmaVerdict::Violated { cycle },
        None => LemmaVerdict::Holds {
            reason: "every induced C6 dominates".into(),
        },
    }
}

/// Convenience: the witness embedding of the twin quotient, if specific.
pub fn specific_embedding(g: &Graph) -> Option<Embedding> {
    specific_witness(g).map(|w| Embedding {
        pattern_order: w.len(),
        map: w.into_iter().map(|(_, b)| b).collect(),
    })
}
