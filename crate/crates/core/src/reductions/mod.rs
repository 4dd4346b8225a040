//! Hardness gadgets: the clause-component construction from a nice critical
//! graph and a 3-SAT instance, and the not-all-equal construction with two
//! 7-cycles per clause. Both come with brute-force equivalence and freeness
//! checks for small instances.

mod check;
mod gadgets;
mod io;
mod nice;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use check::{check_equivalence, check_freeness, Equivalence, FreenessCheck, FreenessReport, FreenessVerdict};
pub use gadgets::{build_ghi, build_nae, FPosition, GadgetKind, LabeledGraph, Role};
pub use io::{parse_dimacs, parse_nae_json, to_dimacs, to_nae_json};
pub use nice::{nice_check, NiceWitness};

/// Largest variable count `sat_brute` accepts by default.
pub const SAT_BRUTE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("clause {clause} has {len} literals, expected 3")]
    Arity { clause: usize, len: usize },
    #[error("clause {clause} uses variable {var} but the instance has {n_vars}")]
    VarOutOfRange { clause: usize, var: usize, n_vars: usize },
    #[error("clause {clause} has a negated literal in a positive-only instance")]
    NegativeLiteral { clause: usize },
    #[error("expected a {expected:?} instance")]
    WrongFlavor { expected: Flavor },
    #[error("invalid nice triple: {0}")]
    InvalidWitness(String),
    #[error("{n_vars} variables exceed the brute-force limit {limit}")]
    TooManyVars { n_vars: usize, limit: usize },
    #[error("line {line}: {msg}")]
    Dimacs { line: usize, msg: String },
    #[error("malformed instance JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Cnf3Sat,
    Nae3SatPl,
}

/// A literal over 0-based variable `var`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    pub fn value(&self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SatInstance {
    pub n_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
    pub flavor: Flavor,
}

impl SatInstance {
    /// Validates variable ranges and, for the not-all-equal flavour, that
    /// every literal is positive.
    pub fn new(n_vars: usize, clauses: Vec<[Literal; 3]>, flavor: Flavor) -> Result<Self, ReductionError> {
        for (j, c) in clauses.iter().enumerate() {
            for l in c {
                if l.var >= n_vars {
                    return Err(ReductionError::VarOutOfRange {
                        clause: j,
                        var: l.var,
                        n_vars,
                    });
                }
                if flavor == Flavor::Nae3SatPl && l.negated {
                    return Err(ReductionError::NegativeLiteral { clause: j });
                }
            }
        }
        Ok(SatInstance {
            n_vars,
            clauses,
            flavor,
        })
    }

    /// Positive-only instance from 0-based variable triples.
    pub fn nae(n_vars: usize, clauses: &[[usize; 3]]) -> Result<Self, ReductionError> {
        let clauses = clauses.iter().map(|c| c.map(Literal::pos)).collect();
        Self::new(n_vars, clauses, Flavor::Nae3SatPl)
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            let trues = c.iter().filter(|l| l.value(assignment)).count();
            match self.flavor {
                Flavor::Cnf3Sat => trues > 0,
                Flavor::Nae3SatPl => trues > 0 && trues < 3,
            }
        })
    }
}

/// A satisfying assignment by exhaustive search, if one exists, refusing
/// instances over [`SAT_BRUTE_LIMIT`] variables.
pub fn sat_brute(i: &SatInstance) -> Result<Option<Vec<bool>>, ReductionError> {
    sat_brute_with_limit(i, SAT_BRUTE_LIMIT)
}

pub fn sat_brute_with_limit(i: &SatInstance, limit: usize) -> Result<Option<Vec<bool>>, ReductionError> {
    if i.n_vars > limit {
        return Err(ReductionError::TooManyVars {
            n_vars: i.n_vars,
            limit,
        });
    }
    Ok((0u64..1 << i.n_vars)
        .map(|bits| (0..i.n_vars).map(|v| bits >> v & 1 == 1).collect::<Vec<_>>())
        .find(|a| i.satisfied_by(a)))
}

/// Every instance with `1..=max_vars` variables and `1..=max_clauses`
/// clauses, up to reordering literals within a clause and reordering
/// clauses. Repeated literals and repeated clauses are included.
pub fn all_instances(flavor: Flavor, max_vars: usize, max_clauses: usize) -> Vec<SatInstance> {
    let mut out = Vec::new();
    for n in 1..=max_vars {
        let literals: Vec<Literal> = match flavor {
            Flavor::Cnf3Sat => (0..n).flat_map(|v| [Literal::pos(v), Literal::neg(v)]).collect(),
            Flavor::Nae3SatPl => (0..n).map(Literal::pos).collect(),
        };
        let clauses = multisets(literals.len(), 3);
        for m in 1..=max_clauses {
            for pick in multisets(clauses.len(), m) {
                let cs = pick
                    .iter()
                    .map(|&c| {
                        let t = &clauses[c];
                        [literals[t[0]], literals[t[1]], literals[t[2]]]
                    })
                    .collect();
                out.push(SatInstance::new(n, cs, flavor).expect("generated in range"));
            }
        }
    }
    out
}

/// Non-decreasing sequences of length `len` over `0..alphabet`.
fn multisets(alphabet: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(alphabet: usize, len: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in from..alphabet {
            cur.push(x);
            go(alphabet, len, x, cur, out);
            cur.pop();
        }
    }
    go(alphabet, len, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(n: usize, clauses: &[[i64; 3]]) -> SatInstance {
        let cs = clauses
            .iter()
            .map(|c| {
                c.map(|x| Literal {
                    var: x.unsigned_abs() as usize - 1,
                    negated: x < 0,
                })
            })
            .collect();
        SatInstance::new(n, cs, Flavor::Cnf3Sat).unwrap()
    }

    #[test]
    fn brute_force_answers() {
        assert!(sat_brute(&cnf(1, &[[1, 1, 1]])).unwrap().is_some());
        assert!(sat_brute(&cnf(1, &[[1, 1, 1], [-1, -1, -1]])).unwrap().is_none());
        assert!(sat_brute(&SatInstance::nae(1, &[[0, 0, 0]]).unwrap()).unwrap().is_none());
        let a = sat_brute(&SatInstance::nae(3, &[[0, 1, 2]]).unwrap()).unwrap().unwrap();
        assert!(a.iter().any(|&x| x) && a.iter().any(|&x| !x));
        let big = SatInstance::new(21, vec![], Flavor::Cnf3Sat).unwrap();
        assert!(matches!(sat_brute(&big), Err(ReductionError::TooManyVars { .. })));
    }

    #[test]
    fn validation() {
        assert!(matches!(
            SatInstance::new(1, vec![[Literal::pos(0), Literal::pos(1), Literal::pos(0)]], Flavor::Cnf3Sat),
            Err(ReductionError::VarOutOfRange { var: 1, .. })
        ));
        assert!(matches!(
            SatInstance::new(1, vec![[Literal::neg(0); 3]], Flavor::Nae3SatPl),
            Err(ReductionError::NegativeLiteral { clause: 0 })
        ));
    }

    #[test]
    fn instance_family_sizes() {
        // clause multisets over 2n literals: C(2n+2, 3); pairs of them with
        // repetition: C(c+1, 2)
        let choose = |a: usize, b: usize| (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1));
        let expected: usize = (1..=3)
            .map(|n| {
                let c = choose(2 * n + 2, 3);
                c + choose(c + 1, 2)
            })
            .sum();
        assert_eq!(all_instances(Flavor::Cnf3Sat, 3, 2).len(), expected);
        let nae: usize = (1..=3)
            .map(|n| {
                let c = choose(n + 2, 3);
                c + choose(c + 1, 2)
            })
            .sum();
        assert_eq!(all_instances(Flavor::Nae3SatPl, 3, 2).len(), nae);
    }
}
