//! Brute-force reference implementations shared by the integration tests.
//! Each one follows the textbook definition with no pruning beyond
//! rejecting a partial assignment as soon as it breaks the definition.

#![allow(dead_code)]

use p6c4::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Every labelled graph on `n` vertices, one per subset of the pair set.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Tries colours `0..k` on vertices in index order.
pub fn brute_colorable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, v: usize, col: &mut Vec<usize>) -> bool {
        if v == g.order() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !g.has_edge(u, v) || col[u] != c) {
                col[v] = c;
                if go(g, k, v + 1, col) {
                    return true;
                }
            }
        }
        false
    }
    go(g, k, 0, &mut vec![0; g.order()])
}

pub fn brute_minimal_obstruction(g: &Graph, k: usize) -> bool {
    !brute_colorable(g, k) && (0..g.order()).all(|v| brute_colorable(&g.remove_vertex(v), k))
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(p, k + 1, out);
            p.swap(k, i);
        }
    }
    go(&mut p, 0, &mut out);
    out
}

pub fn brute_isomorphic(g: &Graph, h: &Graph, perms: &[Vec<usize>]) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let n = g.order();
    perms.iter().any(|p| {
        (0..n).all(|j| (0..j).all(|i| g.has_edge(i, j) == h.has_edge(p[i], p[j])))
    })
}

/// An injective map from `pattern` into `g` preserving edges and non-edges.
pub fn brute_induced_copy(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    fn go(g: &Graph, p: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == p.order() {
            return true;
        }
        for v in 0..g.order() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| p.has_edge(i, j) == g.has_edge(v, map[j])) {
                map.push(v);
                if go(g, p, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    let mut map = Vec::new();
    go(g, pattern, &mut map).then_some(map)
}

pub fn brute_free(g: &Graph, patterns: &[Graph]) -> bool {
    patterns.iter().all(|p| brute_induced_copy(g, p).is_none())
}

pub fn brute_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if g.has_edge(u, v) && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
