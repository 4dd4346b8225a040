//! Certifying colouring: a proper colouring or a catalogued induced
//! obstruction.

use serde::{Deserialize, Serialize};

use crate::detect::{self, find_induced_copy, Embedding, Freeness};
use crate::graph::Graph;
use crate::structure::{decompose, CutsetTree};

use super::catalog::Catalog;
use super::exact::{k_color, minimize_obstruction, Coloring};
use super::ColoringError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum Certificate {
    Colored {
        coloring: Coloring,
    },
    /// `embedding.map[i]` is the vertex of the input hosting vertex `i` of
    /// the catalog entry.
    Obstructed {
        id: String,
        embedding: Embedding,
    },
    /// A minimal obstruction missing from the catalog.
    Uncataloged {
        vertices: Vec<usize>,
        graph6: String,
    },
}

/// Serialized certificate shape used by the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub result: String,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<std::collections::BTreeMap<usize, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

impl Certificate {
    pub fn to_json(&self, k: usize) -> CertificateJson {
        match self {
            Certificate::Colored { coloring } => CertificateJson {
                result: "colored".into(),
                k,
                coloring: Some(coloring.as_map()),
                obstruction: None,
            },
            Certificate::Obstructed { id, embedding } => CertificateJson {
                result: "obstructed".into(),
                k,
                coloring: None,
                obstruction: Some(ObstructionJson {
                    id: Some(id.clone()),
                    vertices: embedding.map.clone(),
                    graph6: None,
                }),
            },
            Certificate::Uncataloged { vertices, graph6 } => CertificateJson {
                result: "uncataloged".into(),
                k,
                coloring: None,
                obstruction: Some(ObstructionJson {
                    id: None,
                    vertices: vertices.clone(),
                    graph6: Some(graph6.clone()),
                }),
            },
        }
    }
}

/// Colours each atom of the clique-cutset decomposition and merges the
/// colourings, or extracts a minimal obstruction from the first atom that
/// cannot be coloured and names it from the catalog.
///
/// With `strict`, inputs containing an induced P6 or C4 are refused with
/// the witness.
pub fn certify_color(
    g: &Graph,
    k: usize,
    catalog: &Catalog,
    strict: bool,
) -> Result<Certificate, ColoringError> {
    if k != 3 && k != 4 {
        return Err(ColoringError::UnsupportedK(k));
    }
    if catalog.k != k {
        return Err(ColoringError::CatalogMismatch {
            catalog: catalog.k,
            k,
        });
    }
    if strict {
        if let Freeness::Contains { pattern, embedding } = detect::is_free(g, &detect::p6_c4()) {
            return Err(ColoringError::NotP6C4Free {
                pattern: ["P6", "C4"][pattern].to_string(),
                witness: embedding.map,
            });
        }
    }
    let tree = decompose(g);
    let mut failing: Option<Vec<usize>> = None;
    match colour_tree(g, k, &tree, &mut failing) {
        Some(colours) => Ok(Certificate::Colored {
            coloring: Coloring {
                k,
                colours: colours.into_iter().map(|c| c.expect("every vertex lies in an atom")).collect(),
            },
        }),
        None => {
            let atom = failing.expect("an atom failed");
            let sub = g.induced_unchecked(&atom);
            let (obstruction, local) = minimize_obstruction(&sub, k)?;
            let in_g: Vec<usize> = local.iter().map(|&i| atom[i]).collect();
            match catalog.lookup(&obstruction) {
                Some(entry) => {
                    let iso = find_induced_copy(&obstruction, &entry.graph)
                        .expect("isomorphic graphs embed onto each other");
                    Ok(Certificate::Obstructed {
                        id: entry.id.clone(),
                        embedding: Embedding {
                            pattern_order: entry.graph.order(),
                            map: iso.map.iter().map(|&i| in_g[i]).collect(),
                        },
                    })
                }
                None => Ok(Certificate::Uncataloged {
                    vertices: in_g,
                    graph6: crate::graph6::to_graph6(&obstruction),
                }),
            }
        }
    }
}

/// Colours the vertices of `tree` (ids of `g`); `None` entries are vertices
/// outside it. On failure records the first uncolourable atom.
fn colour_tree(
    g: &Graph,
    k: usize,
    tree: &CutsetTree,
    failing: &mut Option<Vec<usize>>,
) -> Option<Vec<Option<usize>>> {
    match tree {
        CutsetTree::Atom { vertices } => {
            let sub = g.induced_unchecked(vertices);
            match k_color(&sub, k).expect("palette is positive") {
                Some(c) => {
                    let mut out = vec![None; g.order()];
                    for (i, &v) in vertices.iter().enumerate() {
                        out[v] = Some(c.colours[i]);
                    }
                    Some(out)
                }
                None => {
                    *failing = Some(vertices.clone());
                    None
                }
            }
        }
        CutsetTree::Split {
            separator,
            left,
            right,
        } => {
            let mut l = colour_tree(g, k, left, failing)?;
            let r = colour_tree(g, k, right, failing)?;
            // Separators are cliques, so both sides use distinct colours on
            // them; permute the right palette to agree.
            let mut perm = vec![0usize; k + 1];
            let mut taken = vec![false; k + 1];
            for &s in separator {
                let (cl, cr) = (l[s].unwrap(), r[s].unwrap());
                perm[cr] = cl;
                taken[cl] = true;
            }
            let mut free = (1..=k).filter(|&c| !taken[c]);
            for slot in perm.iter_mut().skip(1) {
                if *slot == 0 {
                    *slot = free.next().expect("palette sizes agree");
                }
            }
            for (v, c) in r.into_iter().enumerate() {
                if let Some(c) = c {
                    l[v] = Some(perm[c]);
                }
            }
            Some(l)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::catalog::{ObstructionEntry, Provenance};
    use crate::coloring::exact::{verify_coloring, ColoringCheck};
    use crate::graph::named::*;
    use crate::VertexSet;

    fn small_catalog() -> Catalog {
        Catalog::new(
            3,
            6,
            vec![
                ObstructionEntry::new("K4", 3, complete(4), Provenance::PaperFixed),
                ObstructionEntry::new("W5", 3, wheel(5), Provenance::PaperFixed),
            ],
        )
        .unwrap()
    }

    #[test]
    fn colours_cycles() {
        match certify_color(&cycle(5), 3, &small_catalog(), true).unwrap() {
            Certificate::Colored { coloring } => {
                assert_eq!(verify_coloring(&cycle(5), &coloring).unwrap(), ColoringCheck::Proper)
            }
            c => panic!("{c:?}"),
        }
    }

    #[test]
    fn names_the_wheel() {
        match certify_color(&wheel(5), 3, &small_catalog(), true).unwrap() {
            Certificate::Obstructed { id, embedding } => {
                assert_eq!(id, "W5");
                assert!(embedding.verify(&wheel(5), &wheel(5)));
            }
            c => panic!("{c:?}"),
        }
    }

    #[test]
    fn avoids_a_pendant_vertex() {
        let g = wheel(5).with_vertex(&VertexSet::from_vertices(6, [5]));
        match certify_color(&g, 3, &small_catalog(), true).unwrap() {
            Certificate::Obstructed { id, embedding } => {
                assert_eq!(id, "W5");
                assert!(!embedding.map.contains(&6));
                assert!(embedding.verify(&g, &wheel(5)));
            }
            c => panic!("{c:?}"),
        }
    }

    #[test]
    fn merges_across_cutsets() {
        // two wheels' worth of triangles glued along edges, all 3-colourable
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (1, 3), (3, 4), (2, 4), (4, 5), (3, 5)],
        )
        .unwrap();
        match certify_color(&g, 3, &small_catalog(), false).unwrap() {
            Certificate::Colored { coloring } => {
                assert_eq!(verify_coloring(&g, &coloring).unwrap(), ColoringCheck::Proper)
            }
            c => panic!("{c:?}"),
        }
    }

    #[test]
    fn strict_mode_refuses_forbidden_inputs() {
        assert!(matches!(
            certify_color(&cycle(4), 3, &small_catalog(), true),
            Err(ColoringError::NotP6C4Free { .. })
        ));
        assert!(matches!(
            certify_color(&cycle(5), 5, &small_catalog(), true),
            Err(ColoringError::UnsupportedK(5))
        ));
    }

    #[test]
    fn unknown_obstructions_are_reported() {
        let g = hajos();
        match certify_color(&g, 3, &small_catalog(), true).unwrap() {
            Certificate::Uncataloged { vertices, .. } => assert_eq!(vertices.len(), 7),
            c => panic!("{c:?}"),
        }
    }
}
