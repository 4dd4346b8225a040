use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::StructureError;

/// An induced five-cycle `v0 v1 v2 v3 v4`; indices are taken mod 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct C5Embedding {
    ring: [usize; 5],
}

impl C5Embedding {
    pub fn new(g: &Graph, ring: [usize; 5]) -> Result<Self, StructureError> {
        for &v in &ring {
            if v >= g.order() {
                return Err(StructureError::VertexOutOfRange(v));
            }
        }
        for i in 0..5 {
            for j in i + 1..5 {
                if ring[i] == ring[j] {
                    return Err(StructureError::NotInducedC5(ring.to_vec()));
                }
                let consecutive = j == i + 1 || (i == 0 && j == 4);
                if g.has_edge(ring[i], ring[j]) != consecutive {
                    return Err(StructureError::NotInducedC5(ring.to_vec()));
                }
            }
        }
        Ok(C5Embedding { ring })
    }

    pub fn ring(&self) -> [usize; 5] {
        self.ring
    }

    /// `v_i` with the index reduced mod 5.
    pub fn v(&self, i: isize) -> usize {
        self.ring[i.rem_euclid(5) as usize]
    }

    pub fn reversed(&self) -> Self {
        let r = self.ring;
        C5Embedding {
            ring: [r[0], r[4], r[3], r[2], r[1]],
        }
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.ring)
    }
}

/// Every induced five-cycle, each once, as embeddings.
pub fn induced_c5s(g: &Graph) -> Vec<C5Embedding> {
    crate::detect::induced_cycles(g, 5)
        .into_iter()
        .map(|c| C5Embedding {
            ring: [c[0], c[1], c[2], c[3], c[4]],
        })
        .collect()
}

/// Names of the sets of the partition, used by replayable facts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetName {
    /// `S_p`: vertices with exactly `p` neighbours on the cycle.
    S(usize),
    /// `S_1(v_i)`.
    S1(usize),
    /// `S_2(v_i, v_{i+1})`.
    S2(usize),
    /// `S_3(v_i)`: neighbours `v_{i-1}, v_i, v_{i+1}`.
    S3(usize),
}

/// Vertices off the cycle grouped by their neighbourhood on it.
///
/// The indexed families only hold consecutive neighbourhoods. Two-vertices
/// seeing `v_i, v_{i+2}` and three-vertices seeing a non-consecutive triple
/// each close an induced `C4` with the cycle, so they only occur in graphs
/// that are not C4-free; they are kept in `s2_skew` and `s3_skew` so the
/// partition stays total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SPartition {
    pub s: [VertexSet; 6],
    pub s1_at: [VertexSet; 5],
    pub s2_at: [VertexSet; 5],
    pub s3_at: [VertexSet; 5],
    pub s2_skew: VertexSet,
    pub s3_skew: VertexSet,
}

impl SPartition {
    pub fn set(&self, name: SetName) -> &VertexSet {
        match name {
            SetName::S(p) => &self.s[p],
            SetName::S1(i) => &self.s1_at[i % 5],
            SetName::S2(i) => &self.s2_at[i % 5],
            SetName::S3(i) => &self.s3_at[i % 5],
        }
    }

    /// The set holding vertex `x`, by neighbour count.
    pub fn class_of(&self, x: usize) -> Option<usize> {
        (0..6).find(|&p| self.s[p].contains(x))
    }
}

pub fn classify(g: &Graph, c: &C5Embedding) -> SPartition {
    let n = g.order();
    let empty = VertexSet::new(n);
    let mut part = SPartition {
        s: std::array::from_fn(|_| empty.clone()),
        s1_at: std::array::from_fn(|_| empty.clone()),
        s2_at: std::array::from_fn(|_| empty.clone()),
        s3_at: std::array::from_fn(|_| empty.clone()),
        s2_skew: empty.clone(),
        s3_skew: empty,
    };
    let on_cycle = c.vertex_set(n);
    for x in 0..n {
        if on_cycle.contains(x) {
            continue;
        }
        let mask: u8 = (0..5)
            .filter(|&i| g.has_edge(x, c.ring[i]))
            .fold(0, |m, i| m | 1 << i);
        let p = mask.count_ones() as usize;
        part.s[p].insert(x);
        let has = |i: isize| mask >> i.rem_euclid(5) & 1 == 1;
        match p {
            1 => part.s1_at[mask.trailing_zeros() as usize].insert(x),
            2 => match (0..5).find(|&i| has(i) && has(i + 1)) {
                Some(i) => part.s2_at[i as usize].insert(x),
                None => part.s2_skew.insert(x),
            },
            3 => match (0..5).find(|&i| has(i - 1) && has(i) && has(i + 1)) {
                Some(i) => part.s3_at[i as usize].insert(x),
                None => part.s3_skew.insert(x),
            },
            _ => {}
        }
    }
    part
}
