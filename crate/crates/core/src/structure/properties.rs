//! The properties P0-P12 of the partition around an induced five-cycle and
//! the three-part observation O5 for W5-free graphs.
//!
//! A violation carries the facts that make it one. Facts are stated against
//! the partition, so [`replay`] can re-check them from scratch.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::partition::{classify, induced_c5s, C5Embedding, SetName, SPartition};
use super::{has_clique_cutset, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fact {
    Adjacent(usize, usize),
    /// Distinct and non-adjacent.
    NonAdjacent(usize, usize),
    Member { vertex: usize, set: SetName },
    NotMember { vertex: usize, set: SetName },
    CompleteTo { vertex: usize, set: SetName },
    AntiCompleteTo { vertex: usize, set: SetName },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Verdict {
    Holds,
    Violated { witness: Vec<usize>, facts: Vec<Fact> },
    NotApplicable { reason: String },
}

impl Verdict {
    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyVerdict {
    pub property: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub cycle: [usize; 5],
    pub properties: Vec<PropertyVerdict>,
}

impl PropertyReport {
    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.properties
            .iter()
            .find(|p| p.property == name)
            .map(|p| &p.verdict)
    }

    pub fn violations(&self) -> impl Iterator<Item = &PropertyVerdict> {
        self.properties.iter().filter(|p| p.verdict.is_violated())
    }
}

/// Graph-level hypotheses shared by every cycle of one graph.
#[derive(Debug, Clone, Copy)]
pub struct Hypotheses {
    pub has_clique_cutset: bool,
    pub w5_free: bool,
}

impl Hypotheses {
    pub fn of(g: &Graph) -> Self {
        Hypotheses {
            has_clique_cutset: has_clique_cutset(g),
            w5_free: crate::detect::find_induced_copy(g, &crate::graph::named::wheel(5)).is_none(),
        }
    }
}

pub const PROPERTY_NAMES: [&str; 16] = [
    "P0", "P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9", "P10", "P11", "P12", "O5.1",
    "O5.2", "O5.3",
];

pub fn check_properties(
    g: &Graph,
    c: &C5Embedding,
    p: &SPartition,
) -> Result<PropertyReport, StructureError> {
    if *p != classify(g, c) {
        return Err(StructureError::MismatchedPartition);
    }
    Ok(check_with(g, c, p, Hypotheses::of(g)))
}

/// Reports for every induced five-cycle, in both orientations.
pub fn check_all_c5(g: &Graph) -> Vec<PropertyReport> {
    let hyp = Hypotheses::of(g);
    let mut out = Vec::new();
    for c in induced_c5s(g) {
        for oriented in [c, c.reversed()] {
            let p = classify(g, &oriented);
            out.push(check_with(g, &oriented, &p, hyp));
        }
    }
    out
}

pub fn check_with(g: &Graph, c: &C5Embedding, p: &SPartition, hyp: Hypotheses) -> PropertyReport {
    let ctx = Ctx { g, p };
    let run = |f: &dyn Fn(&Ctx, usize) -> Option<Vec<Fact>>| -> Verdict {
        (0..5)
            .find_map(|i| f(&ctx, i))
            .map_or(Verdict::Holds, violated)
    };
    let mut props = vec![
        run(&p0),
        run(&p1),
        run(&p2),
        run(&p3),
        run(&p4),
        run(&p5),
        run(&p6),
        run(&p7),
        run(&p8),
        run(&p9),
        run(&p10),
        run(&p11),
    ];
    props.push(if hyp.has_clique_cutset {
        not_applicable("graph has a clique cutset")
    } else {
        run(&p12)
    });
    for o in [o5_1 as fn(&Ctx, usize) -> Option<Vec<Fact>>, o5_2, o5_3] {
        props.push(if hyp.w5_free {
            run(&o)
        } else {
            not_applicable("graph contains an induced W5")
        });
    }
    PropertyReport {
        cycle: c.ring(),
        properties: PROPERTY_NAMES
            .iter()
            .zip(props)
            .map(|(name, verdict)| PropertyVerdict {
                property: name.to_string(),
                verdict,
            })
            .collect(),
    }
}

fn not_applicable(reason: &str) -> Verdict {
    Verdict::NotApplicable {
        reason: reason.to_string(),
    }
}

fn violated(facts: Vec<Fact>) -> Verdict {
    let mut witness = Vec::new();
    let mut push = |v: usize| {
        if !witness.contains(&v) {
            witness.push(v);
        }
    };
    for f in &facts {
        match *f {
            Fact::Adjacent(a, b) | Fact::NonAdjacent(a, b) => {
                push(a);
                push(b);
            }
            Fact::Member { vertex, .. }
            | Fact::NotMember { vertex, .. }
            | Fact::CompleteTo { vertex, .. }
            | Fact::AntiCompleteTo { vertex, .. } => push(vertex),
        }
    }
    Verdict::Violated { witness, facts }
}

/// Re-checks every fact against a fresh partition. True iff all hold.
pub fn replay(g: &Graph, c: &C5Embedding, facts: &[Fact]) -> bool {
    let p = classify(g, c);
    let n = g.order();
    facts.iter().all(|f| match *f {
        Fact::Adjacent(a, b) => a < n && b < n && g.has_edge(a, b),
        Fact::NonAdjacent(a, b) => a < n && b < n && a != b && !g.has_edge(a, b),
        Fact::Member { vertex, set } => p.set(set).contains(vertex),
        Fact::NotMember { vertex, set } => vertex < n && !p.set(set).contains(vertex),
        Fact::CompleteTo { vertex, set } => {
            vertex < n && p.set(set).iter().all(|u| u != vertex && g.has_edge(vertex, u))
        }
        Fact::AntiCompleteTo { vertex, set } => {
            vertex < n && p.set(set).iter().all(|u| !g.has_edge(vertex, u))
        }
    })
}

struct Ctx<'a> {
    g: &'a Graph,
    p: &'a SPartition,
}

fn m(vertex: usize, set: SetName) -> Fact {
    Fact::Member { vertex, set }
}

fn s1(i: usize) -> SetName {
    SetName::S1(i % 5)
}
fn s2(i: usize) -> SetName {
    SetName::S2(i % 5)
}
fn s3(i: usize) -> SetName {
    SetName::S3(i % 5)
}

impl Ctx<'_> {
    fn set(&self, name: SetName) -> &VertexSet {
        self.p.set(name)
    }

    fn member(&self, a: SetName) -> Option<Fact> {
        self.set(a).first().map(|v| m(v, a))
    }

    fn not_complete(&self, a: SetName, b: SetName) -> Option<Vec<Fact>> {
        for x in self.set(a).iter() {
            for y in self.set(b).iter() {
                if x != y && !self.g.has_edge(x, y) {
                    return Some(vec![m(x, a), m(y, b), Fact::NonAdjacent(x, y)]);
                }
            }
        }
        None
    }

    fn not_anticomplete(&self, a: SetName, b: SetName) -> Option<Vec<Fact>> {
        for x in self.set(a).iter() {
            for y in self.set(b).iter() {
                if self.g.has_edge(x, y) {
                    return Some(vec![m(x, a), m(y, b), Fact::Adjacent(x, y)]);
                }
            }
        }
        None
    }

    fn not_clique(&self, a: SetName) -> Option<Vec<Fact>> {
        self.not_complete(a, a)
    }

    /// Members of every listed set, or none if one is empty.
    fn all_nonempty(&self, sets: &[SetName]) -> Option<Vec<Fact>> {
        sets.iter().map(|&s| self.member(s)).collect()
    }
}

fn chain(first: Option<Vec<Fact>>, rest: Option<Vec<Fact>>) -> Option<Vec<Fact>> {
    let mut a = first?;
    a.extend(rest?);
    Some(a)
}

// (P0) S5 and each S3(vi) are cliques; S4 is empty.
fn p0(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    (if i == 0 {
        c.not_clique(SetName::S(5))
            .or_else(|| c.member(SetName::S(4)).map(|f| vec![f]))
    } else {
        None
    })
    .or_else(|| c.not_clique(s3(i)))
}

// (P1) S1(vi) complete to S1(vi+2), anti-complete to S1(vi+1); both
// cliques when S1(vi) and S1(vi+2) are nonempty.
fn p1(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    c.not_complete(s1(i), s1(i + 2))
        .or_else(|| c.not_anticomplete(s1(i), s1(i + 1)))
        .or_else(|| {
            let both = c.all_nonempty(&[s1(i), s1(i + 2)]);
            chain(both.clone(), c.not_clique(s1(i))).or_else(|| chain(both, c.not_clique(s1(i + 2))))
        })
}

// (P2) S2(vi,vi+1) complete to S2(vi+1,vi+2), anti-complete to
// S2(vi+2,vi+3); both cliques when the first two are nonempty.
fn p2(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    c.not_complete(s2(i), s2(i + 1))
        .or_else(|| c.not_anticomplete(s2(i), s2(i + 2)))
        .or_else(|| {
            let both = c.all_nonempty(&[s2(i), s2(i + 1)]);
            chain(both.clone(), c.not_clique(s2(i))).or_else(|| chain(both, c.not_clique(s2(i + 1))))
        })
}

// (P3) S3(vi) anti-complete to S3(vi+2).
fn p3(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    c.not_anticomplete(s3(i), s3(i + 2))
}

// (P4) S1(vi) anti-complete to S2(vj,vj+1) for j != i+2; a vertex of
// S2(vi+2,vi+3) with a neighbour in S1(vi) is universal in S2(vi+2,vi+3).
fn p4(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    for j in 0..5 {
        if j != (i + 2) % 5 {
            if let Some(f) = c.not_anticomplete(s1(i), s2(j)) {
                return Some(f);
            }
        }
    }
    let target = s2(i + 2);
    for y in c.set(target).iter() {
        let Some(x) = c.set(s1(i)).iter().find(|&x| c.g.has_edge(x, y)) else {
            continue;
        };
        if let Some(z) = c.set(target).iter().find(|&z| z != y && !c.g.has_edge(y, z)) {
            return Some(vec![
                m(x, s1(i)),
                m(y, target),
                Fact::Adjacent(x, y),
                m(z, target),
                Fact::NonAdjacent(y, z),
            ]);
        }
    }
    None
}

// (P5) S1(vi) anti-complete to S3(vi+2).
fn p5(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    c.not_anticomplete(s1(i), s3(i + 2))
}

// (P6) S2(vi+2,vi+3) anti-complete to S3(vi).
fn p6(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    c.not_anticomplete(s2(i + 2), s3(i))
}

// (P7) one of S1(vi), S2(vi+3,vi+4) is empty; one of S1(vi),
// S2(vi+1,vi+2) is empty.
fn p7(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    c.all_nonempty(&[s1(i), s2(i + 3)])
        .or_else(|| c.all_nonempty(&[s1(i), s2(i + 1)]))
}

// (P8) one of S2(vi-1,vi), S2(vi,vi+1), S2(vi+2,vi+3) is empty.
fn p8(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    c.all_nonempty(&[s2(i + 4), s2(i), s2(i + 2)])
}

// (P9) S1(vi-1), S1(vi+1) nonempty => S2 empty; S1(vi), S1(vi+1) nonempty
// => S2 = S2(vi,vi+1).
fn p9(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    c.all_nonempty(&[s1(i + 4), s1(i + 1), SetName::S(2)])
        .or_else(|| {
            let stray = c.set(SetName::S(2)).difference(c.set(s2(i))).first()?;
            chain(
                c.all_nonempty(&[s1(i), s1(i + 1)]),
                Some(vec![
                    m(stray, SetName::S(2)),
                    Fact::NotMember {
                        vertex: stray,
                        set: s2(i),
                    },
                ]),
            )
        })
}

// (P10) for x in S3(vi) with S2(vi+1,vi+2), S2(vi+3,vi+4) both nonempty:
// x is complete or anti-complete to their union; if complete, both are
// cliques; if S2(vi+2,vi+3) is nonempty too, x is anti-complete.
fn p10(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    let (a, b) = (s2(i + 1), s2(i + 3));
    let both = c.all_nonempty(&[a, b])?;
    let union: Vec<(usize, SetName)> = c
        .set(a)
        .iter()
        .map(|v| (v, a))
        .chain(c.set(b).iter().map(|v| (v, b)))
        .collect();
    for x in c.set(s3(i)).iter() {
        let adj = union.iter().find(|&&(u, _)| c.g.has_edge(x, u));
        let non = union.iter().find(|&&(u, _)| !c.g.has_edge(x, u));
        let mut base = both.clone();
        base.push(m(x, s3(i)));
        match (adj, non) {
            (Some(&(u, su)), Some(&(w, sw))) => {
                let mut f = base;
                f.extend([m(u, su), Fact::Adjacent(x, u), m(w, sw), Fact::NonAdjacent(x, w)]);
                return Some(f);
            }
            (Some(&(u, su)), None) => {
                let complete = vec![
                    Fact::CompleteTo { vertex: x, set: a },
                    Fact::CompleteTo { vertex: x, set: b },
                ];
                let mut prefix = base.clone();
                prefix.extend(complete);
                if let Some(f) = chain(Some(prefix.clone()), c.not_clique(a))
                    .or_else(|| chain(Some(prefix), c.not_clique(b)))
                {
                    return Some(f);
                }
                if let Some(w) = c.member(s2(i + 2)) {
                    let mut f = base;
                    f.extend([w, m(u, su), Fact::Adjacent(x, u)]);
                    return Some(f);
                }
            }
            _ => {}
        }
    }
    None
}

// (P11) S1(vi) not anti-complete to S2(vi+2,vi+3) => S1 = S1(vi).
fn p11(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    let edge = c.not_anticomplete(s1(i), s2(i + 2))?;
    let stray = c.set(SetName::S(1)).difference(c.set(s1(i))).first()?;
    chain(
        Some(edge),
        Some(vec![
            m(stray, SetName::S(1)),
            Fact::NotMember {
                vertex: stray,
                set: s1(i),
            },
        ]),
    )
}

// (P12) without a clique cutset, S1(vi) is complete to S3(vi).
fn p12(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    c.not_complete(s1(i), s3(i))
}

// (O5.1) S1(vi-1), S1(vi+1) nonempty => S3(vi) anti-complete to both.
fn o5_1(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    let both = c.all_nonempty(&[s1(i + 4), s1(i + 1)]);
    chain(
        both,
        c.not_anticomplete(s3(i), s1(i + 4))
            .or_else(|| c.not_anticomplete(s3(i), s1(i + 1))),
    )
}

// (O5.2) S2(vi-1,vi), S2(vi,vi+1) nonempty => S3(vi) complete to both.
fn o5_2(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    let both = c.all_nonempty(&[s2(i + 4), s2(i)]);
    chain(
        both,
        c.not_complete(s3(i), s2(i + 4))
            .or_else(|| c.not_complete(s3(i), s2(i))),
    )
}

// (O5.3) x in S3(vi-1) or S3(vi+1), p in S1(vi), q in S2(vi+2,vi+3), pq an
// edge => x anti-complete to {p, q}.
fn o5_3(c: &Ctx, i: usize) -> Option<Vec<Fact>> {
    for p in c.set(s1(i)).iter() {
        for q in c.set(s2(i + 2)).iter() {
            if !c.g.has_edge(p, q) {
                continue;
            }
            for xs in [s3(i + 4), s3(i + 1)] {
                for x in c.set(xs).iter() {
                    for t in [p, q] {
                        if c.g.has_edge(x, t) {
                            return Some(vec![
                                m(p, s1(i)),
                                m(q, s2(i + 2)),
                                Fact::Adjacent(p, q),
                                m(x, xs),
                                Fact::Adjacent(x, t),
                            ]);
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn report(g: &Graph, ring: [usize; 5]) -> PropertyReport {
        let c = C5Embedding::new(g, ring).unwrap();
        check_properties(g, &c, &classify(g, &c)).unwrap()
    }

    #[test]
    fn wheel_satisfies_everything_applicable() {
        let r = report(&wheel(5), [0, 1, 2, 3, 4]);
        assert_eq!(r.violations().count(), 0);
        assert!(matches!(r.get("O5.1"), Some(Verdict::NotApplicable { .. })));
        assert_eq!(r.get("P12"), Some(&Verdict::Holds));
    }

    #[test]
    fn two_two_vertices_on_adjacent_edges_break_p2() {
        // x sees v0 v1, y sees v1 v2, x and y non-adjacent
        let mut g = cycle(5).with_vertex(&VertexSet::from_vertices(5, [0, 1]));
        g = g.with_vertex(&VertexSet::from_vertices(6, [1, 2]));
        let r = report(&g, [0, 1, 2, 3, 4]);
        let c = C5Embedding::new(&g, [0, 1, 2, 3, 4]).unwrap();
        match r.get("P2").unwrap() {
            Verdict::Violated { witness, facts } => {
                assert_eq!(witness, &vec![5, 6]);
                assert!(replay(&g, &c, facts));
            }
            v => panic!("{v:?}"),
        }
        let p6 = crate::detect::find_induced_path(&g, 6).unwrap().unwrap();
        assert!(p6.verify(&g, &path(6)));
    }

    #[test]
    fn replay_rejects_altered_facts() {
        let g = wheel(5);
        let c = C5Embedding::new(&g, [0, 1, 2, 3, 4]).unwrap();
        assert!(replay(&g, &c, &[m(5, SetName::S(5))]));
        assert!(!replay(&g, &c, &[m(5, SetName::S(4))]));
        assert!(!replay(&g, &c, &[Fact::NonAdjacent(0, 0)]));
    }

    #[test]
    fn mismatched_partition_is_an_error() {
        let g = wheel(5);
        let c = C5Embedding::new(&g, [0, 1, 2, 3, 4]).unwrap();
        let other = C5Embedding::new(&cycle(5).with_vertex(&VertexSet::new(5)), [0, 1, 2, 3, 4]).unwrap();
        let wrong = classify(&cycle(5).with_vertex(&VertexSet::new(5)), &other);
        assert_eq!(
            check_properties(&g, &c, &wrong),
            Err(StructureError::MismatchedPartition)
        );
    }
}
