//! Immutable simple undirected graphs over dense vertex ids `0..n`.
//!
//! Adjacency is stored as one bit row per vertex, `words` 64-bit words wide,
//! so neighbourhood intersections are word-parallel. Graphs with at most 64
//! vertices use a single word per row.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{iter_bits, words_for, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate vertex {0} in vertex list")]
    DuplicateVertex(usize),
    #[error("invalid edge-list JSON: {0}")]
    Json(String),
    #[error("order {0} exceeds the edge-list limit {MAX_EDGE_LIST_ORDER}")]
    TooLarge(usize),
}

/// Largest order accepted from edge-list JSON; a short document could
/// otherwise request an arbitrarily large dense adjacency matrix.
pub const MAX_EDGE_LIST_ORDER: usize = 1 << 14;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = words_for(n).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + (v >> 6)] |= 1 << (v & 63);
        self.rows[v * self.words + (u >> 6)] |= 1 << (u & 63);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + (v >> 6)] >> (v & 63) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.row(v))
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in iter_bits(self.row(u)) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Is `s` a clique?
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.difference_with(self.row(v));
            rest.is_empty()
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !s.intersects(self.row(v)))
    }

    /// Induced subgraph on `vertices`, relabelled so that new vertex `i` is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = VertexSet::new(self.n);
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            if seen.contains(v) {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen.insert(v);
        }
        Ok(self.induced_unchecked(vertices))
    }

    pub(crate) fn induced_unchecked(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Induced subgraph on a vertex set, with the ascending relabelling map.
    pub fn induced_by_set(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        (self.induced_unchecked(&map), map)
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_unchecked(&keep)
    }

    /// Appends a new vertex `n` adjacent to exactly `nbrs`.
    pub fn with_vertex(&self, nbrs: &VertexSet) -> Graph {
        let n = self.n + 1;
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for u in nbrs.iter().filter(|&u| u < self.n) {
            g.set_edge(u, self.n);
        }
        g
    }

    /// Appends a vertex adjacent to every existing vertex.
    pub fn with_dominating_vertex(&self) -> Graph {
        self.with_vertex(&self.vertex_set())
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reach_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(self.n);
            for v in frontier.iter() {
                next.union_with(self.row(v));
            }
            next.intersect_with(within.words());
            next.difference_with(seen.words());
            seen.union_with(next.words());
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, each as a
    /// vertex set, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut rest = within.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach_within(v, &rest);
            rest.difference_with(comp.words());
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// Connectivity; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach_within(0, &self.vertex_set()).len() == self.n
    }

    /// Vertices whose removal leaves the graph connected (for connected
    /// inputs: the non-cut vertices).
    pub fn non_cut_vertices(&self) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        let all = self.vertex_set();
        for v in 0..self.n {
            let mut rest = all.clone();
            rest.remove(v);
            match rest.first() {
                None => out.insert(v),
                Some(s) => {
                    if self.reach_within(s, &rest).len() == self.n - 1 {
                        out.insert(v);
                    }
                }
            }
        }
        out
    }

    /// Is `s` dominating: every vertex outside `s` has a neighbour in `s`?
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        (0..self.n).all(|v| s.contains(v) || s.intersects(self.row(v)))
    }

    /// Edge-list JSON `{"n": .., "edges": [[u, v], ..]}`.
    pub fn to_edge_list_json(&self) -> String {
        serde_json::to_string(&EdgeList {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        })
        .expect("edge list serializes")
    }

    pub fn from_edge_list_json(text: &str) -> Result<Graph, GraphError> {
        let el: EdgeList =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        if el.n > MAX_EDGE_LIST_ORDER {
            return Err(GraphError::TooLarge(el.n));
        }
        let edges: Vec<(usize, usize)> = el.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(el.n, &edges)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeList {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Standard small graphs. Wheels put the hub last so the rim is `0..rim`.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut g = path(n);
        g.set_edge(n - 1, 0);
        g
    }

    /// Cycle `0..rim` plus hub `rim` adjacent to all of it.
    pub fn wheel(rim: usize) -> Graph {
        cycle(rim).with_dominating_vertex()
    }

    /// Outer cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.set_edge(i, (i + 1) % 5);
            g.set_edge(i, i + 5);
            g.set_edge(i + 5, (i + 2) % 5 + 5);
        }
        g
    }

    /// The Petersen graph plus a universal vertex `10`: the base graph of
    /// clique blow-ups ("specific" graphs).
    pub fn petersen_plus_universal() -> Graph {
        petersen().with_dominating_vertex()
    }

    /// The 7-vertex Hajós graph: a five-cycle `0..5` with `5` adjacent to
    /// `4, 0, 1` and `6` adjacent to `1, 2, 3`.
    pub fn hajos() -> Graph {
        let mut g = cycle(5).with_vertex(&crate::VertexSet::from_vertices(5, [4, 0, 1]));
        g = g.with_vertex(&crate::VertexSet::from_vertices(6, [1, 2, 3]));
        g
    }

    /// Parses the short pattern names used on the command line.
    pub fn by_name(name: &str) -> Option<Graph> {
        let (kind, num) = name.split_at(1);
        let num: usize = num.parse().ok()?;
        match kind {
            "P" if num >= 1 => Some(path(num)),
            "C" if num >= 3 => Some(cycle(num)),
            "K" => Some(complete(num)),
            "W" if num >= 3 => Some(wheel(num)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn basic_queries() {
        let w5 = wheel(5);
        assert_eq!(w5.min_degree(), 3);
        assert_eq!(w5.degree(5), 5);
        let two_triangles = complete(3).disjoint_union(&complete(3));
        let comps = two_triangles.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert!(!two_triangles.is_connected());
        assert!(Graph::new(0).is_connected());
        assert_eq!(petersen().size(), 15);
        assert!((0..10).all(|v| petersen().degree(v) == 3));
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = complete(4);
        assert_eq!(k4.induced_subgraph(&[0, 2, 3]).unwrap(), complete(3));
        let c5 = cycle(5);
        assert_eq!(c5.induced_subgraph(&[0, 1, 2]).unwrap(), path(3));
        let w5 = wheel(5);
        assert_eq!(w5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), cycle(5));
        assert_eq!(w5.induced_subgraph(&(0..6).collect::<Vec<_>>()).unwrap(), w5);
        assert!(c5.induced_subgraph(&[0, 5]).is_err());
        assert!(c5.induced_subgraph(&[0, 0]).is_err());
    }

    #[test]
    fn wide_graphs_use_several_words() {
        let c = cycle(150);
        assert_eq!(c.words(), 3);
        assert!(c.has_edge(149, 0));
        assert!(c.has_edge(63, 64));
        assert!(c.is_connected());
        assert_eq!(c.complement().size(), 150 * 149 / 2 - 150);
    }

    #[test]
    fn edge_list_json() {
        let g = Graph::from_edge_list_json(r#"{"n": 3, "edges": [[0,1],[1,2]]}"#).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(Graph::from_edge_list_json(&g.to_edge_list_json()).unwrap(), g);
        assert!(Graph::from_edge_list_json(r#"{"n": 2, "edges": [[0,0]]}"#).is_err());
        assert!(Graph::from_edge_list_json(r#"{"n": 2}"#).is_err());
    }

    #[test]
    fn non_cut_vertices_of_a_path() {
        assert_eq!(path(4).non_cut_vertices().to_vec(), vec![0, 3]);
        assert_eq!(cycle(4).non_cut_vertices().len(), 4);
    }
}
