//! Induced-subgraph detection with witnesses: paths, cycles, holes,
//! cliques and general patterns.
//!
//! All searches are exhaustive and branch on vertices in ascending order, so
//! witnesses are reproducible.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{iter_bits, VertexSet};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("path length must be at least 1, got {0}")]
    PathTooShort(usize),
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
}

/// An induced copy of a pattern: pattern vertex `i` sits at `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub pattern_order: usize,
    pub map: Vec<usize>,
}

impl Embedding {
    fn new(map: Vec<usize>) -> Self {
        Embedding {
            pattern_order: map.len(),
            map,
        }
    }

    /// Replays the embedding: injective, and edges and non-edges preserved.
    pub fn verify(&self, g: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.order() || self.pattern_order != pattern.order() {
            return false;
        }
        if self.map.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let mut seen = VertexSet::new(g.order());
        for &v in &self.map {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        (0..pattern.order()).all(|i| {
            (i + 1..pattern.order())
                .all(|j| pattern.has_edge(i, j) == g.has_edge(self.map[i], self.map[j]))
        })
    }
}

fn closed_union(g: &Graph, vs: &[usize]) -> VertexSet {
    let mut s = VertexSet::new(g.order());
    for &v in vs {
        s.union_with(g.row(v));
        s.insert(v);
    }
    s
}

// ---------------------------------------------------------------- paths

pub fn find_induced_path(g: &Graph, t: usize) -> Result<Option<Embedding>, DetectError> {
    if t < 1 {
        return Err(DetectError::PathTooShort(t));
    }
    let mut path = Vec::with_capacity(t);
    for s in 0..g.order() {
        path.push(s);
        let excl = closed_union(g, &[]);
        if extend_path(g, t, &mut path, excl) {
            return Ok(Some(Embedding::new(path)));
        }
        path.pop();
    }
    Ok(None)
}

/// `excl` holds the path and the closed neighbourhoods of every path vertex
/// except the last.
fn extend_path(g: &Graph, t: usize, path: &mut Vec<usize>, mut excl: VertexSet) -> bool {
    if path.len() == t {
        return true;
    }
    let last = *path.last().expect("non-empty path");
    excl.insert(last);
    let mut cand = VertexSet::from_words(g.row(last));
    cand.difference_with(excl.words());
    let mut next_excl = excl;
    next_excl.union_with(g.row(last));
    for u in cand.iter() {
        path.push(u);
        if extend_path(g, t, path, next_excl.clone()) {
            return true;
        }
        path.pop();
    }
    false
}

/// An induced `P_t` that uses vertex `v`, if any.
pub fn find_induced_path_through(g: &Graph, t: usize, v: usize) -> Option<Embedding> {
    if t == 0 {
        return None;
    }
    let mut path = std::collections::VecDeque::with_capacity(t);
    path.push_back(v);
    if grow_anchored(g, t, &mut path, true) {
        Some(Embedding::new(path.into_iter().collect()))
    } else {
        None
    }
}

fn grow_anchored(
    g: &Graph,
    t: usize,
    path: &mut std::collections::VecDeque<usize>,
    right_phase: bool,
) -> bool {
    if path.len() == t {
        return true;
    }
    let end = if right_phase { *path.back().unwrap() } else { *path.front().unwrap() };
    let mut excl = VertexSet::new(g.order());
    for &x in path.iter() {
        excl.insert(x);
        if x != end {
            excl.union_with(g.row(x));
        }
    }
    let mut cand = VertexSet::from_words(g.row(end));
    cand.difference_with(excl.words());
    for u in cand.iter() {
        if right_phase {
            path.push_back(u);
        } else {
            path.push_front(u);
        }
        if grow_anchored(g, t, path, right_phase) {
            return true;
        }
        if right_phase {
            path.pop_back();
        } else {
            path.pop_front();
        }
    }
    right_phase && grow_anchored(g, t, path, false)
}

// ---------------------------------------------------------------- cycles

pub fn find_induced_cycle(g: &Graph, l: usize) -> Result<Option<Embedding>, DetectError> {
    if l < 3 {
        return Err(DetectError::CycleTooShort(l));
    }
    let mut found = None;
    for s in 0..g.order() {
        cycles_from(g, l, s, true, &mut |c| {
            found = Some(c.to_vec());
            true
        });
        if found.is_some() {
            break;
        }
    }
    Ok(found.map(Embedding::new))
}

/// An induced `C_l` that uses vertex `v`, as a cyclic order starting at `v`.
pub fn find_induced_cycle_through(g: &Graph, l: usize, v: usize) -> Option<Embedding> {
    if l < 3 {
        return None;
    }
    let mut found = None;
    cycles_from(g, l, v, false, &mut |c| {
        found = Some(c.to_vec());
        true
    });
    found.map(Embedding::new)
}

/// Every induced `C_l`, each listed once: starting at its smallest vertex,
/// oriented so the second vertex is smaller than the last.
pub fn induced_cycles(g: &Graph, l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if l < 3 {
        return out;
    }
    for s in 0..g.order() {
        cycles_from(g, l, s, true, &mut |c| {
            if c[1] < c[l - 1] {
                out.push(c.to_vec());
            }
            false
        });
    }
    out
}

/// Walks chordless paths from `start`; `visit` sees every closing cycle and
/// returns true to stop. With `lowest`, every cycle vertex exceeds `start`.
fn cycles_from(
    g: &Graph,
    l: usize,
    start: usize,
    lowest: bool,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let mut allowed = VertexSet::full(g.order());
    if lowest {
        for u in 0..=start {
            allowed.remove(u);
        }
    }
    let mut path = vec![start];
    cycle_step(g, l, &mut path, &allowed, visit)
}

fn cycle_step(
    g: &Graph,
    l: usize,
    path: &mut Vec<usize>,
    allowed: &VertexSet,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let last = *path.last().unwrap();
    let start = path[0];
    // closed neighbourhoods of all but the last vertex
    let mut excl = VertexSet::new(g.order());
    for &x in &path[..path.len() - 1] {
        excl.union_with(g.row(x));
        excl.insert(x);
    }
    excl.insert(last);
    if path.len() == l - 1 {
        // closing vertex: adjacent to last and start, to nothing in between
        let mut inner = VertexSet::new(g.order());
        for &x in &path[1..path.len() - 1] {
            inner.union_with(g.row(x));
            inner.insert(x);
        }
        inner.insert(start);
        inner.insert(last);
        let mut cand = VertexSet::from_words(g.row(last));
        cand.intersect_with(g.row(start));
        cand.intersect_with(allowed.words());
        cand.difference_with(inner.words());
        if l == 3 {
            // a triangle's closing vertex has no "between" vertices to avoid
        }
        for u in cand.iter() {
            path.push(u);
            let stop = visit(path);
            path.pop();
            if stop {
                return true;
            }
        }
        return false;
    }
    let mut cand = VertexSet::from_words(g.row(last));
    cand.difference_with(excl.words());
    cand.intersect_with(allowed.words());
    if path.len() >= 2 {
        // interior vertices must not touch the start
        cand.difference_with(g.row(start));
    }
    for u in cand.iter() {
        path.push(u);
        if cycle_step(g, l, path, allowed, visit) {
            path.pop();
            return true;
        }
        path.pop();
    }
    false
}

// ---------------------------------------------------------------- holes

/// A chordless cycle of length at least 4, if any.
///
/// For each vertex `v` and non-adjacent pair `a, b` of its neighbours, a
/// shortest `a`-`b` path avoiding the rest of `N[v]` closes a hole through
/// `v`; every hole arises this way.
pub fn find_hole(g: &Graph) -> Option<Embedding> {
    let n = g.order();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbor_iter(v).collect();
        for (ia, &a) in nb.iter().enumerate() {
            for &b in &nb[ia + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut within = VertexSet::full(n);
                within.difference_with(g.row(v));
                within.remove(v);
                within.insert(a);
                within.insert(b);
                if let Some(p) = shortest_path(g, a, b, &within) {
                    let mut cyc = vec![v];
                    cyc.extend(p);
                    return Some(Embedding::new(cyc));
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, within: &VertexSet) -> Option<Vec<usize>> {
    let n = g.order();
    let mut prev = vec![usize::MAX; n];
    let mut seen = VertexSet::new(n);
    seen.insert(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut p = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                p.push(cur);
            }
            p.reverse();
            return Some(p);
        }
        for y in g.neighbor_iter(x) {
            if within.contains(y) && !seen.contains(y) {
                seen.insert(y);
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chordality {
    /// Carries a perfect elimination order.
    Chordal { elimination_order: Vec<usize> },
    /// Carries a chordless cycle of length at least 4.
    NotChordal { hole: Vec<usize> },
}

pub fn is_chordal(g: &Graph) -> Chordality {
    match find_hole(g) {
        Some(h) => Chordality::NotChordal { hole: h.map },
        None => Chordality::Chordal {
            elimination_order: mcs_elimination_order(g),
        },
    }
}

/// Maximum cardinality search, reversed. For chordal graphs this is a
/// perfect elimination order.
fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut numbered = VertexSet::new(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        numbered.insert(v);
        order.push(v);
        for u in g.neighbor_iter(v) {
            if !numbered.contains(u) {
                weight[u] += 1;
            }
        }
    }
    order.reverse();
    order
}

/// Checks that each vertex's later neighbours form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.order() {
        return false;
    }
    let mut later = VertexSet::full(g.order());
    for &v in order {
        later.remove(v);
        let mut nb = VertexSet::from_words(g.row(v));
        nb.intersect_with(later.words());
        if !g.is_clique(&nb) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------- cliques

/// An exact maximum clique (branch and bound with greedy colouring bounds).
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand_clique(g, &mut current, g.vertex_set(), &mut best);
    VertexSet::from_vertices(g.order(), best)
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

fn expand_clique(g: &Graph, current: &mut Vec<usize>, mut cand: VertexSet, best: &mut Vec<usize>) {
    let coloured = greedy_colour_order(g, &cand);
    for &(v, colour) in coloured.iter().rev() {
        if current.len() + colour <= best.len() {
            return;
        }
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(g.row(v));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand_clique(g, current, next, best);
        }
        current.pop();
        cand.remove(v);
    }
}

fn greedy_colour_order(g: &Graph, cand: &VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.len());
    let mut uncoloured = cand.clone();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(g.row(v));
            uncoloured.remove(v);
            out.push((v, colour));
        }
    }
    out
}

/// A `K_k` witness, if the clique number is at least `k`.
pub fn has_clique(g: &Graph, k: usize) -> Option<Embedding> {
    let best = max_clique(g);
    (best.len() >= k).then(|| Embedding::new(best.iter().take(k).collect()))
}

// ---------------------------------------------------------------- patterns

/// A pattern prepared for repeated searches. Paths, cycles and cliques are
/// routed to the specialised finders; everything else uses backtracking.
#[derive(Debug, Clone)]
pub struct Pattern {
    graph: Graph,
    shape: Shape,
}

#[derive(Debug, Clone)]
enum Shape {
    /// pattern vertices in path order
    Path(Vec<usize>),
    /// pattern vertices in cyclic order
    Cycle(Vec<usize>),
    Complete,
    General,
}

impl Pattern {
    pub fn new(graph: Graph) -> Self {
        let shape = Self::shape_of(&graph);
        Pattern { graph, shape }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn shape_of(p: &Graph) -> Shape {
        let n = p.order();
        if n == 0 || !p.is_connected() {
            return Shape::General;
        }
        let m = p.size();
        if m == n * (n - 1) / 2 {
            return Shape::Complete;
        }
        if p.max_degree() > 2 {
            return Shape::General;
        }
        let walk = |start: usize| {
            let mut order = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            loop {
                let next = p.neighbor_iter(cur).find(|&u| u != prev && u != start);
                match next {
                    Some(u) if !order.contains(&u) => {
                        order.push(u);
                        prev = cur;
                        cur = u;
                    }
                    _ => break,
                }
            }
            order
        };
        if m == n - 1 {
            let end = (0..n).find(|&v| p.degree(v) <= 1).expect("paths have an end");
            Shape::Path(walk(end))
        } else if m == n && n >= 3 {
            Shape::Cycle(walk(0))
        } else {
            Shape::General
        }
    }

    /// Translates a witness found in the shape's canonical order back to
    /// pattern vertex ids.
    fn relabel(&self, order: &[usize], found: Vec<usize>) -> Embedding {
        let mut map = vec![0; found.len()];
        for (pos, &pv) in order.iter().enumerate() {
            map[pv] = found[pos];
        }
        Embedding::new(map)
    }

    pub fn find(&self, g: &Graph) -> Option<Embedding> {
        match &self.shape {
            Shape::Path(order) => find_induced_path(g, order.len())
                .expect("length checked")
                .map(|e| self.relabel(order, e.map)),
            Shape::Cycle(order) => find_induced_cycle(g, order.len())
                .expect("length checked")
                .map(|e| self.relabel(order, e.map)),
            Shape::Complete => has_clique(g, self.graph.order()),
            Shape::General => backtrack_copy(g, &self.graph, None),
        }
    }

    /// A copy using vertex `v`.
    pub fn find_through(&self, g: &Graph, v: usize) -> Option<Embedding> {
        match &self.shape {
            Shape::Path(order) => {
                find_induced_path_through(g, order.len(), v).map(|e| self.relabel(order, e.map))
            }
            Shape::Cycle(order) => {
                find_induced_cycle_through(g, order.len(), v).map(|e| self.relabel(order, e.map))
            }
            Shape::Complete => {
                let k = self.graph.order();
                let mut sub = VertexSet::from_words(g.row(v));
                let (h, map) = g.induced_by_set(&sub);
                sub.insert(v);
                has_clique(&h, k - 1).map(|e| {
                    let mut m = vec![v];
                    m.extend(e.map.iter().map(|&i| map[i]));
                    Embedding::new(m)
                })
            }
            Shape::General => backtrack_copy(g, &self.graph, Some(v)),
        }
    }
}

/// An induced copy of `pattern` in `g`, by backtracking with adjacency and
/// degree filters.
pub fn find_induced_copy(g: &Graph, pattern: &Graph) -> Option<Embedding> {
    backtrack_copy(g, pattern, None)
}

pub fn find_induced_copy_through(g: &Graph, pattern: &Graph, v: usize) -> Option<Embedding> {
    backtrack_copy(g, pattern, Some(v))
}

/// Placement order: `first`, then repeatedly the vertex with most placed
/// neighbours (ties: higher degree, lower index).
fn placement_order(p: &Graph, first: usize) -> Vec<usize> {
    let n = p.order();
    let mut order = vec![first];
    let mut placed = VertexSet::new(n);
    placed.insert(first);
    while order.len() < n {
        let next = (0..n)
            .filter(|&u| !placed.contains(u))
            .max_by_key(|&u| {
                (
                    placed.intersection_len(p.row(u)),
                    p.degree(u),
                    std::cmp::Reverse(u),
                )
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    order
}

fn backtrack_copy(g: &Graph, p: &Graph, anchor: Option<usize>) -> Option<Embedding> {
    let pn = p.order();
    if pn > g.order() {
        return None;
    }
    if pn == 0 {
        return anchor.is_none().then(|| Embedding::new(Vec::new()));
    }
    let pdeg: Vec<usize> = (0..pn).map(|v| p.degree(v)).collect();
    let gdeg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let firsts: Vec<usize> = match anchor {
        // any pattern vertex may land on the anchor
        Some(_) => (0..pn).collect(),
        None => vec![(0..pn).max_by_key(|&v| (pdeg[v], std::cmp::Reverse(v))).unwrap()],
    };
    for first in firsts {
        if let Some(a) = anchor {
            if gdeg[a] < pdeg[first] {
                continue;
            }
        }
        let order = placement_order(p, first);
        let mut images = vec![usize::MAX; pn];
        let mut used = VertexSet::new(g.order());
        if place(g, p, &order, 0, anchor, &pdeg, &gdeg, &mut images, &mut used) {
            return Some(Embedding::new(images));
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn place(
    g: &Graph,
    p: &Graph,
    order: &[usize],
    depth: usize,
    anchor: Option<usize>,
    pdeg: &[usize],
    gdeg: &[usize],
    images: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    let mut cand = VertexSet::full(g.order());
    cand.difference_with(used.words());
    if depth == 0 {
        if let Some(a) = anchor {
            cand = VertexSet::from_vertices(g.order(), [a]);
        }
    }
    for &pu in &order[..depth] {
        let img = images[pu];
        if p.has_edge(pv, pu) {
            cand.intersect_with(g.row(img));
        } else {
            cand.difference_with(g.row(img));
            cand.remove(img);
        }
    }
    for c in iter_bits(cand.words()) {
        if gdeg[c] < pdeg[pv] {
            continue;
        }
        images[pv] = c;
        used.insert(c);
        if place(g, p, order, depth + 1, anchor, pdeg, gdeg, images, used) {
            return true;
        }
        used.remove(c);
    }
    images[pv] = usize::MAX;
    false
}

/// Result of a freeness test against an ordered pattern list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Freeness {
    Free,
    /// First pattern (by list position) with an induced copy.
    Contains { pattern: usize, embedding: Embedding },
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }
}

pub fn is_free(g: &Graph, patterns: &[Pattern]) -> Freeness {
    for (i, p) in patterns.iter().enumerate() {
        if let Some(e) = p.find(g) {
            return Freeness::Contains {
                pattern: i,
                embedding: e,
            };
        }
    }
    Freeness::Free
}

/// Convenience wrapper taking plain graphs.
pub fn is_free_of(g: &Graph, patterns: &[Graph]) -> Freeness {
    let compiled: Vec<Pattern> = patterns.iter().cloned().map(Pattern::new).collect();
    is_free(g, &compiled)
}

/// The default forbidden pair `P6, C4`.
pub fn p6_c4() -> Vec<Pattern> {
    use crate::graph::named::{cycle, path};
    vec![Pattern::new(path(6)), Pattern::new(cycle(4))]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn paths() {
        let p6 = path(6);
        let e = find_induced_path(&p6, 6).unwrap().unwrap();
        assert_eq!(e.map, vec![0, 1, 2, 3, 4, 5]);
        assert!(find_induced_path(&complete(4), 3).unwrap().is_none());
        let c7 = cycle(7);
        let e = find_induced_path(&c7, 6).unwrap().unwrap();
        assert!(e.verify(&c7, &path(6)));
        assert!(find_induced_path(&c7, 7).unwrap().is_none());
        assert_eq!(find_induced_path(&c7, 0), Err(DetectError::PathTooShort(0)));
    }

    #[test]
    fn anchored_paths_cover_interior_positions() {
        let p7 = path(7);
        for v in 0..7 {
            let e = find_induced_path_through(&p7, 6, v).unwrap();
            assert!(e.map.contains(&v));
            assert!(e.verify(&p7, &path(6)));
        }
        // the middle vertex of P5 lies on no induced P5 other than the whole
        assert!(find_induced_path_through(&path(5), 6, 2).is_none());
    }

    #[test]
    fn cycles() {
        let pet = petersen();
        let e = find_induced_cycle(&pet, 5).unwrap().unwrap();
        assert!(e.verify(&pet, &cycle(5)));
        assert!(find_induced_cycle(&complete(4), 4).unwrap().is_none());
        assert_eq!(
            find_induced_cycle(&cycle(6), 6).unwrap().unwrap().map,
            vec![0, 1, 2, 3, 4, 5]
        );
        assert_eq!(find_induced_cycle(&complete(3), 3).unwrap().unwrap().map, vec![0, 1, 2]);
        assert!(find_induced_cycle(&cycle(5), 2).is_err());
        // Petersen has 12 five-cycles, all induced
        assert_eq!(induced_cycles(&pet, 5).len(), 12);
        assert_eq!(induced_cycles(&wheel(5), 5).len(), 1);
        assert_eq!(induced_cycles(&wheel(5), 3).len(), 5);
    }

    #[test]
    fn anchored_cycles() {
        let w = wheel(5);
        assert!(find_induced_cycle_through(&w, 5, 5).is_none());
        let e = find_induced_cycle_through(&w, 5, 3).unwrap();
        assert_eq!(e.map[0], 3);
        assert!(e.verify(&w, &cycle(5)));
    }

    #[test]
    fn chordality() {
        match is_chordal(&complete(4)) {
            Chordality::Chordal { elimination_order } => {
                assert!(is_perfect_elimination_order(&complete(4), &elimination_order))
            }
            other => panic!("{other:?}"),
        }
        match is_chordal(&cycle(5)) {
            Chordality::NotChordal { hole } => assert_eq!(hole.len(), 5),
            other => panic!("{other:?}"),
        }
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert!(matches!(is_chordal(&tree), Chordality::Chordal { .. }));
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&wheel(5)), 3);
        assert_eq!(clique_number(&cycle(7)), 2);
        assert_eq!(clique_number(&complete(5)), 5);
        assert_eq!(clique_number(&Graph::new(0)), 0);
        assert!(has_clique(&wheel(5), 4).is_none());
        let e = has_clique(&wheel(5), 3).unwrap();
        assert!(e.verify(&wheel(5), &complete(3)));
    }

    #[test]
    fn general_patterns() {
        let w5 = wheel(5);
        let mut with_pendant = w5.with_vertex(&VertexSet::from_vertices(6, [5]));
        let e = find_induced_copy(&with_pendant, &w5).unwrap();
        assert!(e.verify(&with_pendant, &w5));
        assert!(!e.map.contains(&6));
        assert!(find_induced_copy(&cycle(5), &cycle(4)).is_none());
        with_pendant = with_pendant.complement();
        assert!(find_induced_copy(&with_pendant, &w5.complement()).is_some());
    }

    #[test]
    fn freeness() {
        let pats = p6_c4();
        assert_eq!(is_free(&cycle(5), &pats), Freeness::Free);
        match is_free(&cycle(4), &pats) {
            Freeness::Contains { pattern, embedding } => {
                assert_eq!(pattern, 1);
                assert!(embedding.verify(&cycle(4), &cycle(4)));
            }
            f => panic!("{f:?}"),
        }
        match is_free(&path(6), &pats) {
            Freeness::Contains { pattern, .. } => assert_eq!(pattern, 0),
            f => panic!("{f:?}"),
        }
    }

    #[test]
    fn shaped_patterns_relabel_witnesses() {
        // a path pattern whose own labelling is not in path order
        let p = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let pat = Pattern::new(p.clone());
        let g = path(5);
        let e = pat.find(&g).unwrap();
        assert!(e.verify(&g, &p));
        let e = pat.find_through(&g, 4).unwrap();
        assert!(e.verify(&g, &p) && e.map.contains(&4));
        let k3 = Pattern::new(complete(3));
        let e = k3.find_through(&wheel(5), 5).unwrap();
        assert!(e.verify(&wheel(5), &complete(3)) && e.map.contains(&5));
    }
}
