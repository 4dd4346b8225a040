//! Clique cutsets and the decomposition into atoms.
//!
//! Minimal separators are generated by closure: start from the
//! neighbourhoods of the components of `G - N[v]`, then for every separator
//! `S` and `x` in `S`, add the neighbourhoods of the components of
//! `G - (S ∪ N(x))`. This reaches every minimal separator, and a graph has a
//! clique cutset iff some minimal separator is a clique.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCutset {
    pub clique: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// A clique cutset of `g` restricted to `within`, if any. The empty set
/// counts when the restriction is disconnected.
pub fn find_clique_cutset_within(g: &Graph, within: &VertexSet) -> Option<CliqueCutset> {
    let comps = g.components_within(within);
    if comps.len() > 1 {
        let a = comps[0].clone();
        return Some(CliqueCutset {
            clique: VertexSet::new(g.order()),
            side_b: within.difference(&a),
            side_a: a,
        });
    }
    let sep = minimal_separators(g, within)
        .into_iter()
        .find(|s| g.is_clique(s))?;
    let rest = within.difference(&sep);
    let comps = g.components_within(&rest);
    let a = comps[0].clone();
    Some(CliqueCutset {
        side_b: rest.difference(&a),
        side_a: a,
        clique: sep,
    })
}

pub fn find_clique_cutset(g: &Graph) -> Option<CliqueCutset> {
    find_clique_cutset_within(g, &g.vertex_set())
}

pub fn has_clique_cutset(g: &Graph) -> bool {
    find_clique_cutset(g).is_some()
}

/// `N(C)` restricted to `within`.
fn boundary(g: &Graph, comp: &VertexSet, within: &VertexSet) -> VertexSet {
    let mut nb = VertexSet::new(g.order());
    for v in comp.iter() {
        nb.union_with(g.row(v));
    }
    nb.difference_with(comp.words());
    nb.intersect_with(within.words());
    nb
}

/// Minimal separators of the connected subgraph induced by `within`, in
/// generation order.
pub fn minimal_separators(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let mut offer = |s: VertexSet, queue: &mut VecDeque<VertexSet>| {
        if !s.is_empty() && seen.insert(s.clone()) {
            order.push(s.clone());
            queue.push_back(s);
        }
    };
    for v in within.iter() {
        let mut closed = g.neighbors(v);
        closed.insert(v);
        closed.intersect_with(within.words());
        for comp in g.components_within(&within.difference(&closed)) {
            offer(boundary(g, &comp, within), &mut queue);
        }
    }
    while let Some(s) = queue.pop_front() {
        for x in s.iter() {
            let mut removed = s.clone();
            removed.union_with(g.row(x));
            for comp in g.components_within(&within.difference(&removed)) {
                offer(boundary(g, &comp, within), &mut queue);
            }
        }
    }
    order
}

/// Recursive clique-cutset decomposition. Vertex ids are those of the root
/// graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "node")]
pub enum CutsetTree {
    Atom {
        vertices: Vec<usize>,
    },
    Split {
        separator: Vec<usize>,
        left: Box<CutsetTree>,
        right: Box<CutsetTree>,
    },
}

impl CutsetTree {
    /// Atoms in left-to-right order.
    pub fn atoms(&self) -> Vec<&[usize]> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a [usize]>) {
        match self {
            CutsetTree::Atom { vertices } => out.push(vertices),
            CutsetTree::Split { left, right, .. } => {
                left.collect_atoms(out);
                right.collect_atoms(out);
            }
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.atoms().concat();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

pub fn decompose(g: &Graph) -> CutsetTree {
    decompose_within(g, &g.vertex_set())
}

fn decompose_within(g: &Graph, within: &VertexSet) -> CutsetTree {
    match find_clique_cutset_within(g, within) {
        None => CutsetTree::Atom {
            vertices: within.to_vec(),
        },
        Some(cut) => {
            let left = cut.side_a.union(&cut.clique);
            let right = cut.side_b.union(&cut.clique);
            CutsetTree::Split {
                separator: cut.clique.to_vec(),
                left: Box::new(decompose_within(g, &left)),
                right: Box::new(decompose_within(g, &right)),
            }
        }
    }
}

/// Rebuilds the vertex and edge sets covered by a tree: the union of the
/// atoms' induced subgraphs.
pub fn reassemble(g: &Graph, tree: &CutsetTree) -> Graph {
    let mut out = Graph::new(g.order());
    for atom in tree.atoms() {
        for (i, &u) in atom.iter().enumerate() {
            for &v in &atom[i + 1..] {
                if g.has_edge(u, v) && !out.has_edge(u, v) {
                    out.set_edge(u, v);
                }
            }
        }
    }
    out
}
