//! Canonical forms.
//!
//! Equitable partition refinement followed by an individualisation search
//! tree. Every leaf is a discrete ordered partition, read off as an upper
//! triangle bit string; the canonical form is the maximum leaf. Subtrees are
//! skipped when an automorphism discovered earlier, fixing the current
//! individualised prefix, maps the branch vertex onto one already explored.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A total-order key: two graphs share a code iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct CanonicalCode {
    n: u32,
    bits: Vec<u64>,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Hex rendering, handy for manifests and logs.
    pub fn to_hex(&self) -> String {
        let mut s = format!("{:02x}:", self.n);
        for w in &self.bits {
            s.push_str(&format!("{w:016x}"));
        }
        s
    }

    /// The graph in canonical labelling.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let mut g = Graph::new(n);
        let mut bit = 0usize;
        for j in 1..n {
            for i in 0..j {
                if self.bits[bit >> 6] >> (63 - (bit & 63)) & 1 == 1 {
                    g.set_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }
}

/// Canonical code together with the labelling that produced it:
/// `labelling[v]` is the canonical position of vertex `v`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    pub labelling: Vec<usize>,
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_form(g).code
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_code(g) == canonical_code(h)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm {
            code: CanonicalCode { n: 0, bits: Vec::new() },
            labelling: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
        jump_to: None,
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    let mut prefix = Vec::new();
    search.descend(cells, &mut prefix);
    let (bits, order, _) = search.best.expect("search visits at least one leaf");
    let mut labelling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labelling[v] = pos;
    }
    CanonicalForm {
        code: CanonicalCode { n: n as u32, bits },
        labelling,
    }
}

/// Splits cells until the partition is equitable. Cells are split by the
/// number of neighbours in a splitter cell; sub-cells are ordered by that
/// count, so the result depends only on the graph and the input partition.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let mut splitter = 0;
    while splitter < cells.len() {
        let words = g.words();
        let mut mask = vec![0u64; words];
        for &v in &cells[splitter] {
            mask[v >> 6] |= 1 << (v & 63);
        }
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(usize, usize)> = cell
                .iter()
                .map(|&v| {
                    let c = g
                        .row(v)
                        .iter()
                        .zip(&mask)
                        .map(|(a, b)| (a & b).count_ones() as usize)
                        .sum();
                    (c, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            if keyed.first().map(|k| k.0) != keyed.last().map(|k| k.0) {
                changed = true;
            }
        }
        *cells = next;
        // A split can invalidate splitters already processed.
        splitter = if changed { 0 } else { splitter + 1 };
    }
}

fn leaf_bits(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * (n - 1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64).max(1)];
    let mut bit = 0usize;
    for j in 1..n {
        let row = g.row(order[j]);
        for &oi in &order[..j] {
            if row[oi >> 6] >> (oi & 63) & 1 == 1 {
                bits[bit >> 6] |= 1 << (63 - (bit & 63));
            }
            bit += 1;
        }
    }
    bits
}

struct Search<'a> {
    g: &'a Graph,
    /// leaf bits, leaf order, individualised path
    best: Option<(Vec<u64>, Vec<usize>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
    /// Set when a leaf repeats the best one: the automorphism between them
    /// maps the subtree below their divergence level onto one already
    /// searched, so the search unwinds to that level.
    jump_to: Option<usize>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        if cells.len() == self.g.order() {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.leaf(order, prefix);
            return;
        }
        // first smallest non-singleton cell
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let mut branch = cells[target].clone();
        branch.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &branch {
            if !explored.is_empty() && self.same_orbit_as_explored(prefix, v, &explored) {
                continue;
            }
            let mut child = cells.clone();
            let cell = child.remove(target);
            let rest: Vec<usize> = cell.into_iter().filter(|&u| u != v).collect();
            child.insert(target, rest);
            child.insert(target, vec![v]);
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
            match self.jump_to {
                Some(d) if d < prefix.len() => return,
                Some(_) => self.jump_to = None,
                None => {}
            }
        }
    }

    fn same_orbit_as_explored(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for aut in &self.automorphisms {
            if prefix.iter().any(|&p| aut[p] != p) {
                continue;
            }
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, aut[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }

    fn leaf(&mut self, order: Vec<usize>, path: &[usize]) {
        let bits = leaf_bits(self.g, &order);
        match &self.best {
            None => self.best = Some((bits, order, path.to_vec())),
            Some((best_bits, best_order, best_path)) => match bits.cmp(best_bits) {
                Ordering::Greater => self.best = Some((bits, order, path.to_vec())),
                Ordering::Equal => {
                    // best_order[i] and order[i] sit at the same position in
                    // identical leaves, so mapping one onto the other is an
                    // automorphism.
                    let mut aut = vec![0; order.len()];
                    for (a, b) in best_order.iter().zip(&order) {
                        aut[*a] = *b;
                    }
                    let diverge = best_path
                        .iter()
                        .zip(path)
                        .take_while(|(a, b)| a == b)
                        .count();
                    self.jump_to = Some(diverge);
                    if self.automorphisms.len() < 256 {
                        self.automorphisms.push(aut);
                    }
                }
                Ordering::Less => {}
            },
        }
    }
}
