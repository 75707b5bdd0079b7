use crate::bitset::Bits;

use super::canon::{canonical_form, refined_colors, ColoredGraph};
use super::graph::{Mapping, Sign, SignedGraph, VertexSet};
use super::switching::double_switching;

/// Equivalence used by canonical keys and catalogs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsoMode {
    /// Sign-preserving isomorphism.
    Sp,
    /// Isomorphism up to switching.
    Signed,
}

fn color_matrix(g: &SignedGraph) -> Vec<u8> {
    let n = g.order();
    let mut adj = vec![0u8; n * n];
    for (u, v, s) in g.edges() {
        let c = if s == Sign::Positive { 1 } else { 2 };
        adj[u * n + v] = c;
        adj[v * n + u] = c;
    }
    adj
}

/// Canonical byte key of `g` with extra vertex colours (used for marked vertices).
pub fn canonical_key_colored(g: &SignedGraph, vertex_colors: &[u32]) -> Vec<u8> {
    let adj = color_matrix(g);
    canonical_form(&ColoredGraph { n: g.order(), adj: &adj, vertex_colors }).certificate
}

/// Canonical labelling of `g` in sp mode: position → vertex.
pub fn canonical_labeling(g: &SignedGraph) -> Vec<usize> {
    let adj = color_matrix(g);
    let colors = vec![0u32; g.order()];
    canonical_form(&ColoredGraph { n: g.order(), adj: &adj, vertex_colors: &colors }).labeling
}

/// Byte key that is equal for two graphs iff they are sp-isomorphic
/// (`IsoMode::Sp`) or isomorphic up to switching (`IsoMode::Signed`).
///
/// Signed mode canonicalises the double switching graph.
pub fn canonical_key(g: &SignedGraph, mode: IsoMode) -> Vec<u8> {
    let (tag, h) = match mode {
        IsoMode::Sp => (b'p', None),
        IsoMode::Signed => (b's', Some(double_switching(g))),
    };
    let h = h.as_ref().unwrap_or(g);
    let mut key = vec![tag];
    key.extend(canonical_key_colored(h, &vec![0; h.order()]));
    key
}

/// Sign-blind refinement colours of `a` and `b` computed on their disjoint union,
/// so equal colours are comparable across the two graphs.
fn joint_colors(a: &SignedGraph, b: &SignedGraph, signed: bool) -> (Vec<usize>, Vec<usize>) {
    let u = a.disjoint_union(b);
    let u = if signed { u } else { u.underlying() };
    let adj = color_matrix(&u);
    let colors = vec![0u32; u.order()];
    let c = refined_colors(&ColoredGraph { n: u.order(), adj: &adj, vertex_colors: &colors });
    (c[..a.order()].to_vec(), c[a.order()..].to_vec())
}

/// Backtracking search for an induced, sign-preserving embedding of `source`
/// into `target` that is bijective on the classes `class(x)` of target vertices.
///
/// Source vertices are assigned in id order and candidates tried in increasing
/// order, so the first map found is the lexicographically least.
struct EmbedSearch<'a> {
    source: &'a SignedGraph,
    target: &'a SignedGraph,
    nonadj: Vec<Bits>,
    same_class: Vec<Bits>,
}

impl<'a> EmbedSearch<'a> {
    fn new(source: &'a SignedGraph, target: &'a SignedGraph, classes: usize) -> Self {
        let m = target.order();
        let nonadj = (0..m)
            .map(|x| {
                let mut b = Bits::full(m);
                b.difference_with(&target.neighbor_bits(x));
                b.remove(x);
                b
            })
            .collect();
        let same_class = (0..m).map(|x| Bits::from_iter(m, (0..m).filter(|&y| y % classes == x % classes))).collect();
        EmbedSearch { source, target, nonadj, same_class }
    }

    fn run(&self, cands: Vec<Bits>) -> Option<Vec<usize>> {
        let mut image = vec![usize::MAX; self.source.order()];
        if self.rec(0, &cands, &mut image) {
            Some(image)
        } else {
            None
        }
    }

    fn rec(&self, v: usize, cands: &[Bits], image: &mut Vec<usize>) -> bool {
        let n = self.source.order();
        if v == n {
            return true;
        }
        for x in cands[v].iter() {
            let mut next = cands.to_vec();
            let mut ok = true;
            for u in v + 1..n {
                match self.source.sign(v, u) {
                    Some(s) => next[u].intersect_with(self.target.neighbors_with(x, s)),
                    None => next[u].intersect_with(&self.nonadj[x]),
                }
                next[u].difference_with(&self.same_class[x]);
                if next[u].is_empty() {
                    ok = false;
                    break;
                }
            }
            if ok {
                image[v] = x;
                if self.rec(v + 1, &next, image) {
                    return true;
                }
            }
        }
        false
    }
}

fn pinned_candidates(
    n: usize,
    m: usize,
    allowed: impl Fn(usize, usize) -> bool,
    pins: &[(usize, usize)],
) -> Option<Vec<Bits>> {
    let mut cands: Vec<Bits> = (0..n).map(|v| Bits::from_iter(m, (0..m).filter(|&x| allowed(v, x)))).collect();
    for &(v, x) in pins {
        if v >= n || x >= m || !cands[v].contains(x) {
            return None;
        }
        cands[v] = Bits::from_iter(m, [x]);
    }
    Some(cands)
}

/// Lexicographically least sp-isomorphism `g1 → g2` whose image respects `pins`.
pub fn sp_isomorphism_with(g1: &SignedGraph, g2: &SignedGraph, pins: &[(usize, usize)]) -> Option<Mapping> {
    let n = g1.order();
    if n != g2.order() || g1.edge_count() != g2.edge_count() || g1.negative_edge_count() != g2.negative_edge_count()
    {
        return None;
    }
    let (c1, c2) = joint_colors(g1, g2, true);
    let cands = pinned_candidates(n, n, |v, x| c1[v] == c2[x], pins)?;
    let search = EmbedSearch::new(g1, g2, n.max(1));
    search.run(cands).map(Mapping::new)
}

/// Lexicographically least sp-isomorphism from `g1` to `g2`, if any.
pub fn sp_isomorphic(g1: &SignedGraph, g2: &SignedGraph) -> Option<Mapping> {
    sp_isomorphism_with(g1, g2, &[])
}

/// Isomorphism up to switching, found directly: a bijection `f` and a set `S`
/// with `switch(g1, S)` sp-isomorphic to `g2` via `f`, honouring `pins`.
///
/// The search embeds `g1` into the double switching graph of `g2`; a source
/// vertex landing on an anti-twin is put in `S`.
pub fn switching_isomorphism_with(
    g1: &SignedGraph,
    g2: &SignedGraph,
    pins: &[(usize, usize)],
) -> Option<Mapping> {
    let n = g1.order();
    if n != g2.order() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(Mapping::with_witness(vec![], VertexSet::empty(0)));
    }
    let (c1, c2) = joint_colors(g1, g2, false);
    let hat = double_switching(g2);
    let cands = pinned_candidates(n, 2 * n, |v, x| c1[v] == c2[x % n], &[])?;
    let mut cands = cands;
    for &(v, x) in pins {
        if v >= n || x >= n {
            return None;
        }
        let mut keep = Bits::from_iter(2 * n, [x, x + n]);
        keep.intersect_with(&cands[v]);
        cands[v] = keep;
    }
    let search = EmbedSearch::new(g1, &hat, n);
    let image = search.run(cands)?;
    let witness = VertexSet::new(n, (0..n).filter(|&v| image[v] >= n)).ok()?;
    Some(Mapping::with_witness(image.iter().map(|&x| x % n).collect(), witness))
}

/// True iff the double switching graphs of `g1` and `g2` are sp-isomorphic.
pub fn signed_isomorphic(g1: &SignedGraph, g2: &SignedGraph) -> bool {
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    sp_isomorphic(&double_switching(g1), &double_switching(g2)).is_some()
}

/// Checks that `m` is a bijective sp-isomorphism (preserving non-edges too).
pub fn is_sp_isomorphism(m: &Mapping, g1: &SignedGraph, g2: &SignedGraph) -> bool {
    let n = g1.order();
    if n != g2.order() || m.image.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in &m.image {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    (0..n).all(|u| (u + 1..n).all(|v| g1.sign(u, v) == g2.sign(m.image[u], m.image[v])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgcore::switching::switch_at;
    use Sign::*;

    fn k4_with_negative(neg: &[(usize, usize)]) -> SignedGraph {
        let mut e = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                let s = if neg.contains(&(u, v)) { Negative } else { Positive };
                e.push((u, v, s));
            }
        }
        SignedGraph::new(4, &e).unwrap()
    }

    #[test]
    fn identity_is_lex_least_self_map() {
        let g = k4_with_negative(&[(0, 1)]);
        let m = sp_isomorphic(&g, &g).unwrap();
        assert_eq!(m.image, vec![0, 1, 2, 3]);
    }

    #[test]
    fn matching_vs_four_cycle_negative_sets() {
        let mminus = k4_with_negative(&[(0, 1), (2, 3)]);
        let mplus = k4_with_negative(&[(0, 2), (1, 2), (1, 3), (0, 3)]);
        assert!(sp_isomorphic(&mminus, &mplus).is_none());
        assert_ne!(canonical_key(&mminus, IsoMode::Sp), canonical_key(&mplus, IsoMode::Sp));
    }

    #[test]
    fn four_cycles_up_to_switching() {
        let c4 = |s: [Sign; 4]| {
            SignedGraph::new(4, &[(0, 1, s[0]), (1, 2, s[1]), (2, 3, s[2]), (3, 0, s[3])]).unwrap()
        };
        let pos = c4([Positive; 4]);
        let two = c4([Negative, Negative, Positive, Positive]);
        let one = c4([Negative, Positive, Positive, Positive]);
        assert!(signed_isomorphic(&pos, &two));
        assert!(!signed_isomorphic(&pos, &one));
        let m = switching_isomorphism_with(&pos, &two, &[]).unwrap();
        assert!(m.is_hom(&pos, &two));
    }

    #[test]
    fn switched_graph_is_signed_isomorphic() {
        let g = k4_with_negative(&[(0, 1), (1, 2)]);
        let h = switch_at(&g, &[0, 3]).unwrap().relabel(&[2, 0, 3, 1]);
        assert!(signed_isomorphic(&g, &h));
        assert_eq!(canonical_key(&g, IsoMode::Signed), canonical_key(&h, IsoMode::Signed));
    }

    #[test]
    fn pins_are_honoured() {
        let g = k4_with_negative(&[]);
        let m = sp_isomorphism_with(&g, &g, &[(0, 3)]).unwrap();
        assert_eq!(m.image[0], 3);
        assert!(is_sp_isomorphism(&m, &g, &g));
    }
}
