//! Size bounds on the partition of a K_{k+1}-free (P6, C4)-free graph
//! without clique cutset.
//!
//! `|S5| <= k-2` and `|S3(vi)| <= k-2` need only the clique bound. The
//! bound lemma and the single-`S1` case are argued for C6-free graphs, so
//! they are reported not-applicable when the graph has an induced C6.

use serde::{Deserialize, Serialize};

use crate::detect::{self, Freeness};
use crate::graph::Graph;

use super::has_clique_cutset;
use super::partition::{C5Embedding, SPartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum BoundVerdict {
    Holds { value: usize, limit: usize },
    Violated { value: usize, limit: usize, members: Vec<usize> },
    NotApplicable { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound: String,
    pub verdict: BoundVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub k: usize,
    pub cycle: [usize; 5],
    pub bounds: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.bounds
            .iter()
            .filter(|b| matches!(b.verdict, BoundVerdict::Violated { .. }))
    }
}

/// Graph-level preconditions, computed once per graph.
#[derive(Debug, Clone)]
pub struct BoundPreconditions {
    /// Why the bounds do not apply at all, if they do not.
    pub blocked: Option<String>,
    pub c6_free: bool,
}

impl BoundPreconditions {
    pub fn of(g: &Graph, k: usize) -> Self {
        let blocked = if detect::has_clique(g, k + 1).is_some() {
            Some(format!("graph contains K{}", k + 1))
        } else if detect::is_free(g, &detect::p6_c4()) != Freeness::Free {
            Some("graph is not (P6, C4)-free".to_string())
        } else if has_clique_cutset(g) {
            Some("graph has a clique cutset".to_string())
        } else {
            None
        };
        BoundPreconditions {
            blocked,
            c6_free: detect::find_induced_cycle(g, 6).expect("length 6 is valid").is_none(),
        }
    }
}

pub fn check_size_bounds(g: &Graph, c: &C5Embedding, p: &SPartition, k: usize) -> BoundReport {
    check_size_bounds_with(g, c, p, k, &BoundPreconditions::of(g, k))
}

fn anticomplete(g: &Graph, a: &crate::VertexSet, b: &crate::VertexSet) -> bool {
    a.iter().all(|x| !b.intersects(g.row(x)))
}

pub fn check_size_bounds_with(
    g: &Graph,
    c: &C5Embedding,
    p: &SPartition,
    k: usize,
    pre: &BoundPreconditions,
) -> BoundReport {
    let mut bounds = Vec::new();
    let mut push = |name: String, verdict: BoundVerdict| {
        bounds.push(BoundCheck {
            bound: name,
            verdict,
        })
    };
    let measure = |set: &crate::VertexSet, limit: usize| {
        let value = set.len();
        if value <= limit {
            BoundVerdict::Holds { value, limit }
        } else {
            BoundVerdict::Violated {
                value,
                limit,
                members: set.to_vec(),
            }
        }
    };
    let na = |reason: &str| BoundVerdict::NotApplicable {
        reason: reason.to_string(),
    };
    let small = k.saturating_sub(2);

    if let Some(reason) = &pre.blocked {
        push("S5".into(), na(reason));
        for i in 0..5 {
            push(format!("S3(v{i})"), na(reason));
        }
        for i in 0..5 {
            push(format!("lemma.S1(v{i})"), na(reason));
            push(format!("lemma.S2(v{},v{})", (i + 2) % 5, (i + 3) % 5), na(reason));
            push(format!("single.S1(v{i})"), na(reason));
            push(format!("single.S2(v{},v{})", (i + 2) % 5, (i + 3) % 5), na(reason));
        }
        return BoundReport {
            k,
            cycle: c.ring(),
            bounds,
        };
    }

    push("S5".into(), measure(&p.s[5], small));
    for i in 0..5 {
        push(format!("S3(v{i})"), measure(&p.s3_at[i], small));
    }

    let lemma_s1 = k * small * small;
    let lemma_s2 = 2 * k * small;
    let single_s1 = k.pow(2) + k.pow(3) + k.pow(5);
    let single_s2 = k.pow(4) + k.pow(2);
    let nonempty_s1: Vec<usize> = (0..5).filter(|&i| !p.s1_at[i].is_empty()).collect();
    for i in 0..5 {
        let s1 = &p.s1_at[i];
        let s2 = &p.s2_at[(i + 2) % 5];
        let s2_name = format!("S2(v{},v{})", (i + 2) % 5, (i + 3) % 5);
        let separated = anticomplete(g, s1, s2);
        if !pre.c6_free {
            push(format!("lemma.S1(v{i})"), na("graph contains an induced C6"));
            push(format!("lemma.{s2_name}"), na("graph contains an induced C6"));
        } else if separated {
            push(format!("lemma.S1(v{i})"), measure(s1, lemma_s1));
            push(format!("lemma.{s2_name}"), measure(s2, lemma_s2));
        } else {
            let reason = format!("S1(v{i}) is not anti-complete to {s2_name}");
            push(format!("lemma.S1(v{i})"), na(&reason));
            push(format!("lemma.{s2_name}"), na(&reason));
        }

        let single = pre.c6_free
            && nonempty_s1 == [i]
            && !separated
            && p.s2_at[(i + 1) % 5].is_empty()
            && p.s2_at[(i + 3) % 5].is_empty();
        if single {
            push(format!("single.S1(v{i})"), measure(s1, single_s1));
            push(format!("single.{s2_name}"), measure(s2, single_s2));
        } else {
            let reason = "case hypotheses unmet";
            push(format!("single.S1(v{i})"), na(reason));
            push(format!("single.{s2_name}"), na(reason));
        }
    }
    BoundReport {
        k,
        cycle: c.ring(),
        bounds,
    }
}
