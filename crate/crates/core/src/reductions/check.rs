//! Brute-force equivalence and detector-based freeness checks on gadgets.

use serde::{Deserialize, Serialize};

use crate::coloring::{k_color, verify_coloring, Coloring, ColoringCheck};
use crate::detect::{find_induced_cycle, find_induced_path};
use crate::graph::Graph;

use super::gadgets::{build_ghi, build_nae, GadgetKind, LabeledGraph};
use super::nice::nice_check;
use super::{sat_brute, ReductionError, SatInstance};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalence {
    pub kind: GadgetKind,
    pub palette: usize,
    pub order: usize,
    pub satisfiable: bool,
    pub colorable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Vec<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Coloring>,
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        self.satisfiable == self.colorable
    }
}

/// Builds the gadget and compares satisfiability (exhaustive) with
/// colourability. For the clause-component gadget `h` must be nice
/// `k`-critical and the palette is `k + 1`; for the not-all-equal gadget
/// `h` is ignored and the palette is `k`.
pub fn check_equivalence(
    kind: GadgetKind,
    h: Option<&Graph>,
    i: &SatInstance,
    k: usize,
) -> Result<Equivalence, ReductionError> {
    let (built, palette) = match kind {
        GadgetKind::Ghi => {
            let h = h.ok_or_else(|| ReductionError::InvalidWitness("no component graph given".into()))?;
            let w = nice_check(h, k)
                .ok_or_else(|| ReductionError::InvalidWitness(format!("component is not nice {k}-critical")))?;
            (build_ghi(h, &w, i)?, k + 1)
        }
        GadgetKind::Nae => (build_nae(i)?, k),
    };
    let assignment = sat_brute(i)?;
    let coloring = k_color(&built.graph, palette).map_err(|e| ReductionError::InvalidWitness(e.to_string()))?;
    if let Some(c) = &coloring {
        assert_eq!(
            verify_coloring(&built.graph, c),
            Ok(ColoringCheck::Proper),
            "exact colouring returned an improper colouring"
        );
    }
    Ok(Equivalence {
        kind,
        palette,
        order: built.graph.order(),
        satisfiable: assignment.is_some(),
        colorable: coloring.is_some(),
        assignment,
        coloring,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum FreenessVerdict {
    /// Claimed free and no copy found.
    Free,
    /// Claimed free but a copy exists.
    Violated { witness: Vec<usize> },
    /// No freeness claim for this pattern; `present` records what the
    /// detector saw.
    NotApplicable { reason: String, present: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessCheck {
    pub pattern: String,
    pub verdict: FreenessVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessReport {
    pub kind: GadgetKind,
    pub checks: Vec<FreenessCheck>,
}

impl FreenessReport {
    pub fn all_hold(&self) -> bool {
        !self
            .checks
            .iter()
            .any(|c| matches!(c.verdict, FreenessVerdict::Violated { .. }))
    }

    pub fn get(&self, pattern: &str) -> Option<&FreenessVerdict> {
        self.checks.iter().find(|c| c.pattern == pattern).map(|c| &c.verdict)
    }
}

/// Runs the detectors for induced paths on `paths` vertices and induced
/// cycles of the given lengths, and compares with what the construction
/// guarantees: for the clause-component gadget, P_t-freeness for t >= 6 and
/// C_l-freeness for l >= 6 whenever the component is free of the same
/// pattern; for the not-all-equal gadget, P7-freeness (hence P_t for
/// t >= 7) and C5-freeness.
pub fn check_freeness(built: &LabeledGraph, paths: &[usize], cycles: &[usize]) -> FreenessReport {
    let g = &built.graph;
    let h = &built.component;
    let mut checks = Vec::new();
    for &t in paths {
        let claim = match built.kind {
            GadgetKind::Ghi if t < 6 => Err("paths shorter than 6 are not covered".to_string()),
            GadgetKind::Ghi => match find_induced_path(h, t) {
                Ok(None) => Ok(()),
                _ => Err(format!("component contains P{t}")),
            },
            GadgetKind::Nae if t >= 7 => Ok(()),
            GadgetKind::Nae => Err("only P7-freeness is claimed".to_string()),
        };
        let found = find_induced_path(g, t).ok().flatten().map(|e| e.map);
        checks.push(FreenessCheck {
            pattern: format!("P{t}"),
            verdict: verdict(claim, found),
        });
    }
    for &l in cycles {
        let claim = match built.kind {
            GadgetKind::Ghi if l < 6 => Err("cycles shorter than 6 are not covered".to_string()),
            GadgetKind::Ghi => match find_induced_cycle(h, l) {
                Ok(None) => Ok(()),
                _ => Err(format!("component contains C{l}")),
            },
            GadgetKind::Nae if l == 5 => Ok(()),
            GadgetKind::Nae => Err("only C5-freeness is claimed".to_string()),
        };
        let found = find_induced_cycle(g, l).ok().flatten().map(|e| e.map);
        checks.push(FreenessCheck {
            pattern: format!("C{l}"),
            verdict: verdict(claim, found),
        });
    }
    FreenessReport {
        kind: built.kind,
        checks,
    }
}

fn verdict(claim: Result<(), String>, found: Option<Vec<usize>>) -> FreenessVerdict {
    match (claim, found) {
        (Ok(()), None) => FreenessVerdict::Free,
        (Ok(()), Some(witness)) => FreenessVerdict::Violated { witness },
        (Err(reason), found) => FreenessVerdict::NotApplicable {
            reason,
            present: found.is_some(),
        },
    }
}
