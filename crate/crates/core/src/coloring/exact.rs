//! Exact k-colouring by saturation-degree backtracking.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

use super::ColoringError;

/// A proper colouring with colours `1..=k`; `colours[v]` is the colour of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub k: usize,
    pub colours: Vec<usize>,
}

impl Coloring {
    /// Vertex-to-colour map, the shape used in certificates.
    pub fn as_map(&self) -> BTreeMap<usize, usize> {
        self.colours.iter().copied().enumerate().collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum ColoringCheck {
    Proper,
    /// The first monochromatic edge in lexicographic order.
    Conflict { u: usize, v: usize },
}

/// Checks a colouring literally. Missing or out-of-palette colours are
/// errors rather than conflicts.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<ColoringCheck, ColoringError> {
    if c.colours.len() != g.order() {
        return Err(ColoringError::NotTotal {
            coloured: c.colours.len(),
            n: g.order(),
        });
    }
    for (v, &col) in c.colours.iter().enumerate() {
        if col == 0 || col > c.k {
            return Err(ColoringError::ColourOutOfRange {
                vertex: v,
                colour: col,
                k: c.k,
            });
        }
    }
    Ok(g
        .edges()
        .into_iter()
        .find(|&(u, v)| c.colours[u] == c.colours[v])
        .map_or(ColoringCheck::Proper, |(u, v)| ColoringCheck::Conflict { u, v }))
}

/// A proper k-colouring if one exists.
///
/// Branches on the uncoloured vertex with most distinct neighbour colours
/// (ties: degree, then lowest index), trying colours up to one past the
/// largest used so far.
pub fn k_color(g: &Graph, k: usize) -> Result<Option<Coloring>, ColoringError> {
    if k < 1 {
        return Err(ColoringError::ZeroPalette);
    }
    let n = g.order();
    if n == 0 {
        return Ok(Some(Coloring { k, colours: vec![] }));
    }
    let palette = k;
    let k = k.min(n);
    let mut s = Dsatur {
        g,
        k,
        colour: vec![0; n],
        seen: vec![0; n * (k + 1)],
        sat: vec![0; n],
        degree: (0..n).map(|v| g.degree(v)).collect(),
    };
    let found = s.search(n, 0);
    Ok(found.then(|| Coloring {
        k: palette,
        colours: s.colour,
    }))
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    /// `seen[v * (k+1) + c]`: coloured neighbours of `v` with colour `c`.
    seen: Vec<u32>,
    /// distinct colours among coloured neighbours
    sat: Vec<usize>,
    degree: Vec<usize>,
}

impl Dsatur<'_> {
    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0, 0);
        for v in 0..self.colour.len() {
            if self.colour[v] != 0 {
                continue;
            }
            let kv = (self.sat[v], self.degree[v]);
            if best == usize::MAX || kv > key {
                best = v;
                key = kv;
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        let w = self.k + 1;
        for u in self.g.neighbor_iter(v) {
            let slot = &mut self.seen[u * w + c];
            if *slot == 0 {
                self.sat[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = 0;
        let w = self.k + 1;
        for u in self.g.neighbor_iter(v) {
            let slot = &mut self.seen[u * w + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn search(&mut self, remaining: usize, max_used: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let v = self.pick();
        if self.sat[v] == self.k {
            return false;
        }
        let w = self.k + 1;
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            if self.seen[v * w + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(remaining - 1, max_used.max(c)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return g.order() == 0;
    }
    k_color(g, k).expect("palette is positive").is_some()
}

/// The least `k` admitting a proper colouring; 0 for the empty graph.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let (mut lo, mut hi) = (crate::detect::clique_number(g).max(1), n);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if is_k_colorable(g, mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Not k-colourable, but every one-vertex deletion is.
pub fn is_minimal_obstruction(g: &Graph, k: usize) -> bool {
    !is_k_colorable(g, k) && (0..g.order()).all(|v| is_k_colorable(&g.remove_vertex(v), k))
}

/// A vertex-minimal non-k-colourable induced subgraph, found by trying
/// deletions in ascending vertex order. Returns the subgraph and its vertex
/// ids in `g`.
///
/// A single pass suffices: a vertex kept at some point stays necessary once
/// more vertices are gone, since colourability is hereditary.
pub fn minimize_obstruction(g: &Graph, k: usize) -> Result<(Graph, Vec<usize>), ColoringError> {
    if is_k_colorable(g, k) {
        return Err(ColoringError::Colorable(k));
    }
    let mut keep: Vec<usize> = (0..g.order()).collect();
    for v in 0..g.order() {
        let trial: Vec<usize> = keep.iter().copied().filter(|&u| u != v).collect();
        if !is_k_colorable(&g.induced_unchecked(&trial), k) {
            keep = trial;
        }
    }
    Ok((g.induced_unchecked(&keep), keep))
}
