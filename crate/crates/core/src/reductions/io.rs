//! DIMACS CNF for 3-SAT and a small JSON schema for positive-only
//! not-all-equal instances.

use serde::{Deserialize, Serialize};

use super::{Flavor, Literal, ReductionError, SatInstance};

fn dimacs_err(line: usize, msg: impl Into<String>) -> ReductionError {
    ReductionError::Dimacs {
        line,
        msg: msg.into(),
    }
}

/// Parses DIMACS CNF. Every clause must have exactly three literals; a `%`
/// line ends the input.
pub fn parse_dimacs(text: &str) -> Result<SatInstance, ReductionError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        if l.starts_with('%') {
            break;
        }
        if l.starts_with('p') {
            if header.is_some() {
                return Err(dimacs_err(line, "second problem line"));
            }
            let parts: Vec<&str> = l.split_whitespace().collect();
            match parts[..] {
                ["p", "cnf", v, c] => {
                    let v = v.parse().map_err(|_| dimacs_err(line, "bad variable count"))?;
                    let c = c.parse().map_err(|_| dimacs_err(line, "bad clause count"))?;
                    header = Some((v, c));
                }
                _ => return Err(dimacs_err(line, "expected `p cnf <vars> <clauses>`")),
            }
            continue;
        }
        let (n_vars, _) = header.ok_or_else(|| dimacs_err(line, "clause before problem line"))?;
        for tok in l.split_whitespace() {
            let x: i64 = tok
                .parse()
                .map_err(|_| dimacs_err(line, format!("bad literal `{tok}`")))?;
            if x == 0 {
                if pending.len() != 3 {
                    return Err(ReductionError::Arity {
                        clause: clauses.len(),
                        len: pending.len(),
                    });
                }
                clauses.push([pending[0], pending[1], pending[2]]);
                pending.clear();
                continue;
            }
            let var = x.unsigned_abs() as usize;
            if var > n_vars {
                return Err(ReductionError::VarOutOfRange {
                    clause: clauses.len(),
                    var: var - 1,
                    n_vars,
                });
            }
            pending.push(Literal {
                var: var - 1,
                negated: x < 0,
            });
        }
    }
    let (n_vars, n_clauses) = header.ok_or_else(|| dimacs_err(last_line, "missing problem line"))?;
    if !pending.is_empty() {
        return Err(dimacs_err(last_line, "unterminated clause"));
    }
    if clauses.len() != n_clauses {
        return Err(dimacs_err(
            last_line,
            format!("header declares {n_clauses} clauses, found {}", clauses.len()),
        ));
    }
    SatInstance::new(n_vars, clauses, Flavor::Cnf3Sat)
}

pub fn to_dimacs(i: &SatInstance) -> String {
    let mut s = format!("p cnf {} {}\n", i.n_vars, i.clauses.len());
    for c in &i.clauses {
        for l in c {
            let v = l.var as i64 + 1;
            s.push_str(&format!("{} ", if l.negated { -v } else { v }));
        }
        s.push_str("0\n");
    }
    s
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NaeJson {
    n: usize,
    /// 1-based variables
    clauses: Vec<Vec<i64>>,
}

/// Parses `{"n": int, "clauses": [[i, j, k], ...]}` with 1-based variables.
pub fn parse_nae_json(text: &str) -> Result<SatInstance, ReductionError> {
    let raw: NaeJson = serde_json::from_str(text).map_err(|e| ReductionError::Json(e.to_string()))?;
    let mut clauses = Vec::with_capacity(raw.clauses.len());
    for (j, c) in raw.clauses.iter().enumerate() {
        if c.len() != 3 {
            return Err(ReductionError::Arity {
                clause: j,
                len: c.len(),
            });
        }
        let mut lits = [Literal::pos(0); 3];
        for (slot, &x) in lits.iter_mut().zip(c) {
            if x < 0 {
                return Err(ReductionError::NegativeLiteral { clause: j });
            }
            if x == 0 || x as usize > raw.n {
                return Err(ReductionError::VarOutOfRange {
                    clause: j,
                    var: (x as usize).wrapping_sub(1),
                    n_vars: raw.n,
                });
            }
            *slot = Literal::pos(x as usize - 1);
        }
        clauses.push(lits);
    }
    SatInstance::new(raw.n, clauses, Flavor::Nae3SatPl)
}

pub fn to_nae_json(i: &SatInstance) -> Result<String, ReductionError> {
    if i.flavor != Flavor::Nae3SatPl {
        return Err(ReductionError::WrongFlavor {
            expected: Flavor::Nae3SatPl,
        });
    }
    let raw = NaeJson {
        n: i.n_vars,
        clauses: i
            .clauses
            .iter()
            .map(|c| c.iter().map(|l| l.var as i64 + 1).collect())
            .collect(),
    };
    Ok(serde_json::to_string(&raw).expect("instance serializes"))
}
