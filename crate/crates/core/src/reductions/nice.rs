//! Nice critical graphs: k-critical with an independent triple whose removal
//! keeps the clique number at k-1.

use serde::{Deserialize, Serialize};

use crate::coloring::is_minimal_obstruction;
use crate::detect::clique_number;
use crate::graph::Graph;

use super::ReductionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceWitness {
    pub triple: [usize; 3],
    /// clique number of the graph, equal to that of the graph minus the triple
    pub omega: usize,
}

impl NiceWitness {
    /// Checks the witness against `h` without re-checking criticality.
    pub fn validate(&self, h: &Graph) -> Result<(), ReductionError> {
        let [a, b, c] = self.triple;
        let n = h.order();
        if a >= n || b >= n || c >= n {
            return Err(ReductionError::InvalidWitness(format!(
                "triple {:?} out of range for {n} vertices",
                self.triple
            )));
        }
        if a == b || b == c || a == c || h.has_edge(a, b) || h.has_edge(b, c) || h.has_edge(a, c) {
            return Err(ReductionError::InvalidWitness(format!(
                "triple {:?} is not independent",
                self.triple
            )));
        }
        let omega = clique_number(h);
        let rest: Vec<usize> = (0..n).filter(|v| !self.triple.contains(v)).collect();
        let omega_rest = clique_number(&h.induced_unchecked(&rest));
        if omega != self.omega || omega_rest != omega {
            return Err(ReductionError::InvalidWitness(format!(
                "clique numbers {omega} and {omega_rest} without the triple, witness says {}",
                self.omega
            )));
        }
        Ok(())
    }
}

/// The lexicographically first nice triple, if `h` is k-critical with
/// clique number k-1 and has one.
pub fn nice_check(h: &Graph, k: usize) -> Option<NiceWitness> {
    if k < 2 || !is_minimal_obstruction(h, k - 1) {
        return None;
    }
    let omega = clique_number(h);
    if omega != k - 1 {
        return None;
    }
    let n = h.order();
    for a in 0..n {
        for b in a + 1..n {
            if h.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if h.has_edge(a, c) || h.has_edge(b, c) {
                    continue;
                }
                let rest: Vec<usize> = (0..n).filter(|&v| v != a && v != b && v != c).collect();
                if clique_number(&h.induced_unchecked(&rest)) == omega {
                    return Some(NiceWitness {
                        triple: [a, b, c],
                        omega,
                    });
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

    #[test]
    fn odd_cycles() {
        let w = nice_check(&cycle(7), 3).unwrap();
        assert_eq!(w.triple, [0, 2, 4]);
        assert_eq!(w.omega, 2);
        w.validate(&cycle(7)).unwrap();
        assert!(nice_check(&cycle(9), 3).is_some());
        assert_eq!(nice_check(&cycle(5), 3), None);
    }

    #[test]
    fn non_examples() {
        assert_eq!(nice_check(&complete(4), 4), None);
        // not critical for this k
        assert_eq!(nice_check(&cycle(7), 4), None);
        assert_eq!(nice_check(&path(7), 3), None);
    }

    #[test]
    fn witness_validation() {
        let bad = NiceWitness {
            triple: [0, 1, 3],
            omega: 2,
        };
        assert!(bad.validate(&cycle(7)).is_err());
        let wrong_omega = NiceWitness {
            triple: [0, 2, 4],
            omega: 3,
        };
        assert!(wrong_omega.validate(&cycle(7)).is_err());
    }
}
