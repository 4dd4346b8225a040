//! Recognisable names for enumerated obstructions.

use crate::canon::is_isomorphic;
use crate::coloring::{Catalog, ObstructionEntry, Provenance};
use crate::graph::named::{complete, hajos, wheel};
use crate::graph::Graph;

/// Renames entries that are recognised: `K{k+1}`, `W5` and `HAJOS` for
/// k = 3 (plus `F` when a single further entry remains), and for larger k
/// any entry with a dominating vertex whose removal leaves a named entry of
/// `lower` (the catalog for k-1) becomes `<name>+dom`. Complete graphs and
/// the 5-wheel (with dominating vertices) are constructible without search
/// and are marked fixed; everything else keeps enumeration provenance.
pub fn name_obstructions(
    k: usize,
    mut entries: Vec<ObstructionEntry>,
    lower: Option<&Catalog>,
) -> Vec<ObstructionEntry> {
    let mut named = vec![false; entries.len()];
    for (i, e) in entries.iter_mut().enumerate() {
        let g = &e.graph;
        let mut rename = |id: String, fixed: bool| {
            e.id = id;
            if fixed {
                e.provenance = Provenance::PaperFixed;
            }
            named[i] = true;
        };
        if is_isomorphic(g, &complete(k + 1)) {
            rename(format!("K{}", k + 1), true);
        } else if k == 3 && is_isomorphic(g, &wheel(5)) {
            rename("W5".into(), true);
        } else if k == 3 && is_isomorphic(g, &hajos()) {
            rename("HAJOS".into(), false);
        } else if let Some((name, fixed)) = lower.and_then(|c| dominated_name(g, c)) {
            rename(format!("{name}+dom"), fixed);
        }
    }
    if k == 3 {
        let rest: Vec<usize> = (0..entries.len()).filter(|&i| !named[i]).collect();
        if let [only] = rest[..] {
            entries[only].id = "F".into();
        }
    }
    entries
}

/// The name of `g - v` in `lower` for a dominating vertex `v`, and whether
/// that entry was fixed without search.
fn dominated_name(g: &Graph, lower: &Catalog) -> Option<(String, bool)> {
    let n = g.order();
    let v = (0..n).find(|&v| g.degree(v) + 1 == n)?;
    let e = lower.lookup(&g.remove_vertex(v))?;
    if e.id.starts_with('k') && e.id.contains("-n") {
        return None;
    }
    Some((e.id.clone(), e.provenance == Provenance::PaperFixed))
}
