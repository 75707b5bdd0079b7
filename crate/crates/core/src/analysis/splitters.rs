use crate::error::{Error, Result};
use crate::sgcore::SignedGraph;

/// A pair `{i₁, i₂}` agreeing on one team and disagreeing on the other.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitterRecord {
    pub pair: (usize, usize),
    /// The two teams, each sorted, the team containing the least vertex first.
    pub teams: [(usize, usize); 2],
}

/// All splitters of a complete signed graph of order 6.
///
/// A pair is a splitter when it agrees on exactly two of the other four
/// vertices; those two form one team and the remaining two the other.
pub fn splitters(t: &SignedGraph) -> Result<Vec<SplitterRecord>> {
    if t.order() != 6 || !t.is_complete() {
        return Err(Error::Precondition {
            what: "splitters",
            requirement: format!("a complete signed graph of order 6, got order {} with {} edges", t.order(), t.edge_count()),
        });
    }
    let mut out = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            let rest: Vec<usize> = (0..6).filter(|&w| w != a && w != b).collect();
            let agree: Vec<usize> = rest.iter().copied().filter(|&w| t.sign(a, w) == t.sign(b, w)).collect();
            if agree.len() != 2 {
                continue;
            }
            let other: Vec<usize> = rest.iter().copied().filter(|w| !agree.contains(w)).collect();
            let mut teams = [(agree[0], agree[1]), (other[0], other[1])];
            teams.sort();
            out.push(SplitterRecord { pair: (a, b), teams });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{named_graph, paley_plus};
    use crate::sgcore::{switch, VertexSet};
    use proptest::prelude::*;

    fn per_vertex(recs: &[SplitterRecord]) -> Vec<usize> {
        let mut c = vec![0; 6];
        for r in recs {
            c[r.pair.0] += 1;
            c[r.pair.1] += 1;
        }
        c
    }

    #[test]
    fn sp5_plus_all_pairs() {
        let s = splitters(&paley_plus(5).unwrap()).unwrap();
        assert_eq!(s.len(), 15);
        assert_eq!(per_vertex(&s), vec![5; 6]);
    }

    #[test]
    fn k6_matchings_have_one_non_splitter_partner() {
        for name in ["K6_M", "K6_Mbar"] {
            let g = named_graph(name).unwrap().into_graph();
            let s = splitters(&g).unwrap();
            assert_eq!(per_vertex(&s), vec![4; 6]);
            // the missing partner is the matching mate
            for (u, v) in [(0, 1), (2, 3), (4, 5)] {
                assert!(s.iter().all(|r| r.pair != (u, v)));
            }
        }
    }

    #[test]
    fn rejects_other_inputs() {
        assert!(splitters(&SignedGraph::empty(6)).is_err());
        assert!(splitters(&named_graph("K4_Mminus").unwrap().into_graph()).is_err());
    }

    proptest! {
        #[test]
        fn invariant_under_switching(mask in 0u32..64, which in 0usize..3) {
            let t = match which {
                0 => paley_plus(5).unwrap(),
                1 => named_graph("K6_M").unwrap().into_graph(),
                _ => named_graph("K6_Mbar").unwrap().into_graph(),
            };
            let s = VertexSet::new(6, (0..6).filter(|&v| mask >> v & 1 == 1)).unwrap();
            prop_assert_eq!(splitters(&t).unwrap(), splitters(&switch(&t, &s).unwrap()).unwrap());
        }
    }
}
