use rayon::prelude::*;

use crate::sgcore::{sp_isomorphism_with, switching_isomorphism_with, Sign, SignedGraph};

/// The four symmetry notions for signed graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransitivityKind {
    /// Sign-preserving automorphisms act transitively on vertices.
    SpVertex,
    /// Sign-preserving automorphisms map any edge `uv` onto any `u'v'` of the same sign, `u ↦ u'`, `v ↦ v'`.
    SpEdge,
    /// Automorphisms up to switching act transitively on vertices.
    Vertex,
    /// Automorphisms up to switching map any edge `uv` onto any `u'v'`, `u ↦ u'`, `v ↦ v'`.
    Edge,
}

impl std::str::FromStr for TransitivityKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sp_vertex" => Ok(TransitivityKind::SpVertex),
            "sp_edge" => Ok(TransitivityKind::SpEdge),
            "vertex" => Ok(TransitivityKind::Vertex),
            "edge" => Ok(TransitivityKind::Edge),
            _ => Err(format!("unknown transitivity kind {s:?}")),
        }
    }
}

fn automorphism(t: &SignedGraph, pins: &[(usize, usize)], sp: bool) -> bool {
    if sp {
        sp_isomorphism_with(t, t, pins).is_some()
    } else {
        switching_isomorphism_with(t, t, pins).is_some()
    }
}

/// Whether `t` has the symmetry `kind`.
///
/// Transitivity is checked from one reference vertex (or one reference arc per
/// edge class) to all others; automorphisms form a group, so this suffices.
pub fn transitivity(t: &SignedGraph, kind: TransitivityKind) -> bool {
    let n = t.order();
    match kind {
        TransitivityKind::SpVertex | TransitivityKind::Vertex => {
            let sp = kind == TransitivityKind::SpVertex;
            n == 0 || (1..n).into_par_iter().all(|v| automorphism(t, &[(0, v)], sp))
        }
        TransitivityKind::SpEdge | TransitivityKind::Edge => {
            let sp = kind == TransitivityKind::SpEdge;
            let classes: Vec<Vec<(usize, usize)>> = if sp {
                Sign::BOTH
                    .iter()
                    .map(|&s| t.edges().into_iter().filter(|e| e.2 == s).map(|(u, v, _)| (u, v)).collect())
                    .collect()
            } else {
                vec![t.edges().into_iter().map(|(u, v, _)| (u, v)).collect()]
            };
            classes.iter().filter(|c| !c.is_empty()).all(|class| {
                let (u0, v0) = class[0];
                class
                    .par_iter()
                    .flat_map_iter(|&(u, v)| [(u, v), (v, u)])
                    .all(|(u, v)| automorphism(t, &[(u0, u), (v0, v)], sp))
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{named_graph, paley, paley_plus};
    use TransitivityKind::*;

    #[test]
    fn paley_symmetry() {
        let sp9 = paley(9).unwrap();
        assert!(transitivity(&sp9, SpVertex));
        assert!(transitivity(&sp9, SpEdge));
        let plus = paley_plus(5).unwrap();
        assert!(transitivity(&plus, Vertex));
        assert!(transitivity(&plus, Edge));
        assert!(!transitivity(&plus, SpVertex));
    }

    #[test]
    fn asymmetric_examples() {
        let p = named_graph("P5_M").unwrap().into_graph();
        assert!(!transitivity(&p, SpVertex));
        assert!(!transitivity(&p, Vertex));
        let k6m = named_graph("K6_M").unwrap().into_graph();
        assert!(transitivity(&k6m, SpVertex));
        assert!(transitivity(&k6m, SpEdge));
    }

    #[test]
    fn sp_vertex_transitive_graphs_have_constant_degrees() {
        for q in [5, 9, 13] {
            let t = paley(q).unwrap();
            assert!(transitivity(&t, SpVertex));
            let d: Vec<_> = (0..q).map(|v| (t.signed_degree(v, Sign::Positive), t.signed_degree(v, Sign::Negative))).collect();
            assert!(d.iter().all(|&x| x == d[0]));
        }
    }
}
