//! Gadget construction with per-vertex roles.
//!
//! Clause-component gadget numbering: `x_i = 2i`, `x̄_i = 2i+1`,
//! `d_i = 2n+i`, then one block of `|H|` vertices per clause in input order.
//! Not-all-equal gadget numbering: `x_i = i`, the path `d_i e'_i e_i d'_i`
//! at `n + 4i ..`, then 14 vertices per clause: the two 7-cycles, with the
//! clause's vertices at cycle positions 0, 2, 4.

use serde::{Deserialize, Serialize};

use crate::graph::named::cycle;
use crate::graph::Graph;
use crate::graph6::to_graph6;

use super::nice::NiceWitness;
use super::{Flavor, ReductionError, SatInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetKind {
    Ghi,
    Nae,
}

/// Position on the truth-assignment path `d e' e d'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FPosition {
    D,
    EPrime,
    E,
    DPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "type")]
pub enum Role {
    X { var: usize },
    Xbar { var: usize },
    D { var: usize },
    F { var: usize, position: FPosition },
    /// `slot` is the literal position within the clause.
    C { var: usize, clause: usize, slot: usize, negated: bool },
    CPrime { var: usize, clause: usize, slot: usize },
    /// `copy` is 0 for the first clause component, 1 for the second.
    U { clause: usize, copy: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub kind: GadgetKind,
    pub graph: Graph,
    pub roles: Vec<Role>,
    /// The graph each clause component is a copy of.
    pub component: Graph,
    /// Criticality of the component: the gadget's target palette is this
    /// plus one.
    pub component_k: usize,
}

#[derive(Serialize)]
struct RolesJson<'a> {
    kind: GadgetKind,
    n: usize,
    graph6: String,
    component_graph6: String,
    roles: &'a [Role],
}

impl LabeledGraph {
    /// Palette for which colourability is equivalent to satisfiability.
    pub fn palette(&self) -> usize {
        self.component_k + 1
    }

    /// The role sidecar written next to the graph6 export.
    pub fn roles_json(&self) -> String {
        serde_json::to_string_pretty(&RolesJson {
            kind: self.kind,
            n: self.graph.order(),
            graph6: to_graph6(&self.graph),
            component_graph6: to_graph6(&self.component),
            roles: &self.roles,
        })
        .expect("roles serialize")
    }

    fn with_role(&self, f: impl Fn(&Role) -> bool) -> Vec<usize> {
        (0..self.roles.len()).filter(|&v| f(&self.roles[v])).collect()
    }

    /// Checks the construction rules directly on the built graph: connector
    /// vertices are independent, U-type vertices are complete to the
    /// variable side, and each connector has exactly its two cross edges.
    pub fn check_role_laws(&self) -> Result<(), String> {
        let g = &self.graph;
        let connectors = self.with_role(|r| matches!(r, Role::C { .. } | Role::CPrime { .. }));
        for (i, &a) in connectors.iter().enumerate() {
            for &b in &connectors[i + 1..] {
                if g.has_edge(a, b) {
                    return Err(format!("connectors {a} and {b} are adjacent"));
                }
            }
        }
        let side = self.with_role(|r| matches!(r, Role::X { .. } | Role::Xbar { .. } | Role::D { .. } | Role::F { .. }));
        for u in self.with_role(|r| matches!(r, Role::U { .. })) {
            if let Some(&s) = side.iter().find(|&&s| !g.has_edge(u, s)) {
                return Err(format!("U-type {u} misses {s}"));
            }
        }
        let find = |want: Role| self.roles.iter().position(|r| *r == want).expect("role exists");
        for &c in &connectors {
            let expected: Vec<usize> = match (self.kind, self.roles[c]) {
                (GadgetKind::Ghi, Role::C { var, negated, .. }) => {
                    let x = if negated { find(Role::Xbar { var }) } else { find(Role::X { var }) };
                    vec![x, find(Role::D { var })]
                }
                (GadgetKind::Nae, Role::C { var, .. }) => vec![
                    find(Role::X { var }),
                    find(Role::F {
                        var,
                        position: FPosition::D,
                    }),
                ],
                (GadgetKind::Nae, Role::CPrime { var, .. }) => vec![
                    find(Role::X { var }),
                    find(Role::F {
                        var,
                        position: FPosition::DPrime,
                    }),
                ],
                (kind, r) => return Err(format!("role {r:?} in a {kind:?} gadget")),
            };
            let mut cross: Vec<usize> = side.iter().copied().filter(|&s| g.has_edge(c, s)).collect();
            cross.sort_unstable();
            let mut expected = expected;
            expected.sort_unstable();
            if cross != expected {
                return Err(format!("connector {c} has cross edges {cross:?}, expected {expected:?}"));
            }
        }
        Ok(())
    }
}

/// The clause-component gadget: satisfiable iff (k+1)-colourable when `h`
/// is nice k-critical with `witness`.
pub fn build_ghi(h: &Graph, witness: &NiceWitness, i: &SatInstance) -> Result<LabeledGraph, ReductionError> {
    if i.flavor != Flavor::Cnf3Sat {
        return Err(ReductionError::WrongFlavor {
            expected: Flavor::Cnf3Sat,
        });
    }
    witness.validate(h)?;
    let n = i.n_vars;
    let hn = h.order();
    let total = 3 * n + i.clauses.len() * hn;
    let mut edges = Vec::new();
    let mut roles = Vec::with_capacity(total);
    for var in 0..n {
        roles.push(Role::X { var });
        roles.push(Role::Xbar { var });
        edges.push((2 * var, 2 * var + 1));
    }
    for var in 0..n {
        roles.push(Role::D { var });
    }
    let variable_side: Vec<usize> = (0..3 * n).collect();
    for (j, clause) in i.clauses.iter().enumerate() {
        let base = 3 * n + j * hn;
        for (a, b) in h.edges() {
            edges.push((base + a, base + b));
        }
        for local in 0..hn {
            let v = base + local;
            match witness.triple.iter().position(|&t| t == local) {
                Some(slot) => {
                    let lit = clause[slot];
                    roles.push(Role::C {
                        var: lit.var,
                        clause: j,
                        slot,
                        negated: lit.negated,
                    });
                    edges.push((v, 2 * n + lit.var));
                    edges.push((v, 2 * lit.var + usize::from(lit.negated)));
                }
                None => {
                    roles.push(Role::U { clause: j, copy: 0 });
                    edges.extend(variable_side.iter().map(|&s| (v, s)));
                }
            }
        }
    }
    Ok(LabeledGraph {
        kind: GadgetKind::Ghi,
        graph: Graph::from_edges(total, &edges).expect("construction edges are simple"),
        roles,
        component: h.clone(),
        component_k: witness.omega + 1,
    })
}

/// Connector positions on each 7-cycle.
const NAE_TRIPLE: [usize; 3] = [0, 2, 4];

/// The not-all-equal gadget: NAE-satisfiable iff 4-colourable.
pub fn build_nae(i: &SatInstance) -> Result<LabeledGraph, ReductionError> {
    if i.flavor != Flavor::Nae3SatPl {
        return Err(ReductionError::WrongFlavor {
            expected: Flavor::Nae3SatPl,
        });
    }
    if let Some(j) = i.clauses.iter().position(|c| c.iter().any(|l| l.negated)) {
        return Err(ReductionError::NegativeLiteral { clause: j });
    }
    let n = i.n_vars;
    let total = 5 * n + 14 * i.clauses.len();
    let f = |var: usize, p: FPosition| n + 4 * var + p as usize;
    let mut edges = Vec::new();
    let mut roles = Vec::with_capacity(total);
    for var in 0..n {
        roles.push(Role::X { var });
    }
    for var in 0..n {
        for position in [FPosition::D, FPosition::EPrime, FPosition::E, FPosition::DPrime] {
            roles.push(Role::F { var, position });
        }
        edges.push((f(var, FPosition::D), f(var, FPosition::EPrime)));
        edges.push((f(var, FPosition::EPrime), f(var, FPosition::E)));
        edges.push((f(var, FPosition::E), f(var, FPosition::DPrime)));
    }
    let variable_side: Vec<usize> = (0..5 * n).collect();
    let c7 = cycle(7);
    for (j, clause) in i.clauses.iter().enumerate() {
        for copy in 0..2 {
            let base = 5 * n + 14 * j + 7 * copy;
            for (a, b) in c7.edges() {
                edges.push((base + a, base + b));
            }
            for local in 0..7 {
                let v = base + local;
                match NAE_TRIPLE.iter().position(|&t| t == local) {
                    Some(slot) => {
                        let var = clause[slot].var;
                        let (role, end) = if copy == 0 {
                            (
                                Role::C {
                                    var,
                                    clause: j,
                                    slot,
                                    negated: false,
                                },
                                FPosition::D,
                            )
                        } else {
                            (Role::CPrime { var, clause: j, slot }, FPosition::DPrime)
                        };
                        roles.push(role);
                        edges.push((v, var));
                        edges.push((v, f(var, end)));
                    }
                    None => {
                        roles.push(Role::U { clause: j, copy });
                        edges.extend(variable_side.iter().map(|&s| (v, s)));
                    }
                }
            }
        }
    }
    Ok(LabeledGraph {
        kind: GadgetKind::Nae,
        graph: Graph::from_edges(total, &edges).expect("construction edges are simple"),
        roles,
        component: c7,
        component_k: 3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{nice_check, Literal};

    fn c7_witness() -> NiceWitness {
        nice_check(&cycle(7), 3).unwrap()
    }

    #[test]
    fn ghi_sizes_and_roles() {
        let i = SatInstance::new(
            3,
            vec![[Literal::pos(0), Literal::pos(1), Literal::pos(2)]],
            Flavor::Cnf3Sat,
        )
        .unwrap();
        let g = build_ghi(&cycle(7), &c7_witness(), &i).unwrap();
        assert_eq!(g.graph.order(), 16);
        let us: Vec<usize> = (0..16).filter(|&v| matches!(g.roles[v], Role::U { .. })).collect();
        assert_eq!(us.len(), 4);
        for &u in &us {
            assert!((0..9).all(|s| g.graph.has_edge(u, s)));
        }
        g.check_role_laws().unwrap();
        assert_eq!(g.palette(), 4);
    }

    #[test]
    fn repeated_literals_share_a_literal_vertex() {
        let i = SatInstance::new(1, vec![[Literal::neg(0); 3]], Flavor::Cnf3Sat).unwrap();
        let g = build_ghi(&cycle(7), &c7_witness(), &i).unwrap();
        assert_eq!(g.graph.degree(1), 1 + 3 + 4);
        g.check_role_laws().unwrap();
    }

    #[test]
    fn nae_sizes_and_roles() {
        let i = SatInstance::nae(3, &[[0, 1, 2]]).unwrap();
        let g = build_nae(&i).unwrap();
        assert_eq!(g.graph.order(), 29);
        g.check_role_laws().unwrap();
        let us = g.roles.iter().filter(|r| matches!(r, Role::U { .. })).count();
        assert_eq!(us, 8);
    }

    #[test]
    fn flavour_and_witness_errors() {
        let nae = SatInstance::nae(3, &[[0, 1, 2]]).unwrap();
        assert!(matches!(
            build_ghi(&cycle(7), &c7_witness(), &nae),
            Err(ReductionError::WrongFlavor { .. })
        ));
        let cnf = SatInstance::new(1, vec![[Literal::pos(0); 3]], Flavor::Cnf3Sat).unwrap();
        assert!(matches!(build_nae(&cnf), Err(ReductionError::WrongFlavor { .. })));
        let bad = NiceWitness {
            triple: [0, 1, 2],
            omega: 2,
        };
        assert!(matches!(
            build_ghi(&cycle(7), &bad, &cnf),
            Err(ReductionError::InvalidWitness(_))
        ));
    }

    #[test]
    fn deterministic() {
        let i = SatInstance::nae(2, &[[0, 1, 1], [1, 0, 0]]).unwrap();
        assert_eq!(build_nae(&i).unwrap(), build_nae(&i).unwrap());
    }

    #[test]
    fn tampering_breaks_role_laws() {
        let i = SatInstance::nae(3, &[[0, 1, 2]]).unwrap();
        let mut g = build_nae(&i).unwrap();
        g.check_role_laws().unwrap();
        let mut edges = g.graph.edges();
        edges.retain(|&(a, b)| !(a == 0 && b == 15));
        g.graph = Graph::from_edges(29, &edges).unwrap();
        assert!(g.check_role_laws().is_err());
    }
}
