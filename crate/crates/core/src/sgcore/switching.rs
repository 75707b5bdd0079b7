use std::collections::BTreeSet;

use super::graph::{Sign, SignedGraph, VertexSet, Walk};
use crate::error::{Error, Result};

/// Flips the sign of every edge with exactly one endpoint in `s`.
pub fn switch(g: &SignedGraph, s: &VertexSet) -> Result<SignedGraph> {
    if s.order() != g.order() {
        if let Some(v) = s.iter().find(|&v| v >= g.order()) {
            return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
        }
    }
    let mut out = g.clone();
    for (u, v, sign) in g.edges() {
        if s.contains(u) != s.contains(v) {
            out.set(u, v, Some(-sign));
        }
    }
    Ok(out)
}

/// Switches at the vertices listed; convenience over [`switch`].
pub fn switch_at(g: &SignedGraph, vertices: &[usize]) -> Result<SignedGraph> {
    switch(g, &VertexSet::new(g.order(), vertices.iter().copied())?)
}

/// Sign of a closed walk: negative iff it traverses an odd number of
/// negative edges, counted with multiplicity.
pub fn walk_sign(g: &SignedGraph, w: &Walk) -> Result<Sign> {
    let vs = w.vertices();
    for &v in vs {
        g.check_vertex(v)?;
    }
    if !w.is_closed() {
        return Err(Error::OpenWalk);
    }
    let mut sign = Sign::Positive;
    for pair in vs.windows(2) {
        match g.sign(pair[0], pair[1]) {
            Some(s) => sign = sign * s,
            None => return Err(Error::NotAnEdge(pair[0], pair[1])),
        }
    }
    Ok(sign)
}

/// Spanning forest rooted at the least vertex of each component (BFS), with
/// the vertex potential that makes every tree edge positive after switching.
///
/// `potential[v]` is negative exactly for the vertices that must be switched.
pub(crate) struct TreeNormalizer {
    pub tree: BTreeSet<(usize, usize)>,
    pub potential: Vec<Sign>,
}

pub(crate) fn tree_normalizer(g: &SignedGraph) -> TreeNormalizer {
    let n = g.order();
    let mut potential = vec![Sign::Positive; n];
    let mut tree = BTreeSet::new();
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbor_bits(u).iter() {
                if !seen[w] {
                    seen[w] = true;
                    potential[w] = potential[u] * g.sign(u, w).unwrap();
                    tree.insert((u.min(w), u.max(w)));
                    queue.push_back(w);
                }
            }
        }
    }
    TreeNormalizer { tree, potential }
}

/// Switching that makes every spanning-forest edge positive.
pub fn tree_normal_form(g: &SignedGraph) -> SignedGraph {
    let t = tree_normalizer(g);
    let set = VertexSet::new(g.order(), (0..g.order()).filter(|&v| t.potential[v] == Sign::Negative))
        .expect("in range");
    switch(g, &set).expect("same order")
}

/// A set `S` with `switch(g1, S) == g2`, if the graphs are switching equivalent.
pub fn switching_witness(g1: &SignedGraph, g2: &SignedGraph) -> Result<Option<VertexSet>> {
    if !g1.same_underlying(g2) {
        return Err(Error::UnderlyingMismatch);
    }
    let p1 = tree_normalizer(g1).potential;
    let p2 = tree_normalizer(g2).potential;
    for (u, v, s1) in g1.edges() {
        let s2 = g2.sign(u, v).unwrap();
        if p1[u] * s1 * p1[v] != p2[u] * s2 * p2[v] {
            return Ok(None);
        }
    }
    let members = (0..g1.order()).filter(|&v| p1[v] != p2[v]);
    Ok(Some(VertexSet::new(g1.order(), members)?))
}

/// Whether `g2` arises from `g1` by switching some vertex set.
///
/// Both graphs are normalised on the same BFS spanning forest (root = least
/// vertex of each component) and the remaining edge signs compared.
pub fn is_switch_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Result<bool> {
    Ok(switching_witness(g1, g2)?.is_some())
}

/// Id of the anti-twin of `v` in the double switching graph of an order-`n` graph.
pub fn anti_twin(v: usize, n: usize) -> usize {
    if v < n {
        v + n
    } else {
        v - n
    }
}

/// The double switching graph: every vertex `v` gets an anti-twin `v + n`.
///
/// For an edge `uv` of sign `s` the output holds `uv` and `û v̂` with sign `s`
/// and `u v̂`, `û v` with sign `-s`. Twin labels carry a `^` suffix.
pub fn double_switching(g: &SignedGraph) -> SignedGraph {
    let n = g.order();
    let mut out = SignedGraph::empty(2 * n);
    for (u, v, s) in g.edges() {
        out.set(u, v, Some(s));
        out.set(u + n, v + n, Some(s));
        out.set(u, v + n, Some(-s));
        out.set(u + n, v, Some(-s));
    }
    let labels = (0..n).map(|v| g.label(v)).chain((0..n).map(|v| format!("{}^", g.label(v)))).collect();
    out.set_labels_unchecked(Some(labels));
    out
}

/// Pairs `{u, v}` (with `u < v`) that are adjacent or opposite on a negative 4-cycle.
pub fn forced_distinct_pairs(g: &SignedGraph) -> BTreeSet<(usize, usize)> {
    let n = g.order();
    let mut out = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.is_adjacent(u, v) {
                out.insert((u, v));
                continue;
            }
            // A 4-cycle u-a-v-b is negative iff the two-paths through a and b differ in sign.
            let mut through = [false; 2];
            for s in Sign::BOTH {
                for t in Sign::BOTH {
                    let common = g.neighbors_with(u, s).intersection(g.neighbors_with(v, t));
                    if !common.is_empty() {
                        through[(s * t != Sign::Positive) as usize] = true;
                    }
                }
            }
            if through[0] && through[1] {
                out.insert((u, v));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::*;

    fn k2(s: Sign) -> SignedGraph {
        SignedGraph::new(2, &[(0, 1, s)]).unwrap()
    }

    fn c4(signs: [Sign; 4]) -> SignedGraph {
        SignedGraph::new(4, &[(0, 1, signs[0]), (1, 2, signs[1]), (2, 3, signs[2]), (3, 0, signs[3])]).unwrap()
    }

    #[test]
    fn switching_full_set_is_identity() {
        let g = c4([Positive, Negative, Positive, Positive]);
        assert_eq!(switch(&g, &VertexSet::full(4)).unwrap(), g);
    }

    #[test]
    fn switching_one_end_of_k2() {
        assert_eq!(switch_at(&k2(Positive), &[0]).unwrap(), k2(Negative));
        assert!(switch_at(&k2(Positive), &[2]).is_err());
    }

    #[test]
    fn walk_signs() {
        let tri = SignedGraph::new(3, &[(0, 1, Positive), (1, 2, Positive), (0, 2, Positive)]).unwrap();
        let w = Walk::new(vec![0, 1, 2, 0]).unwrap();
        assert_eq!(walk_sign(&tri, &w), Ok(Positive));
        let neg = SignedGraph::new(3, &[(0, 1, Positive), (1, 2, Positive), (0, 2, Negative)]).unwrap();
        assert_eq!(walk_sign(&neg, &w), Ok(Negative));
        assert_eq!(walk_sign(&k2(Negative), &Walk::new(vec![0, 1, 0]).unwrap()), Ok(Positive));
        assert_eq!(walk_sign(&neg, &Walk::new(vec![0, 1, 2]).unwrap()), Err(Error::OpenWalk));
        let path = SignedGraph::new(3, &[(0, 1, Positive), (1, 2, Positive)]).unwrap();
        assert_eq!(walk_sign(&path, &w), Err(Error::NotAnEdge(2, 0)));
    }

    #[test]
    fn triangle_sign_is_a_switching_invariant() {
        let pos = SignedGraph::new(3, &[(0, 1, Positive), (1, 2, Positive), (0, 2, Positive)]).unwrap();
        let neg = SignedGraph::new(3, &[(0, 1, Positive), (1, 2, Positive), (0, 2, Negative)]).unwrap();
        assert_eq!(is_switch_equivalent(&pos, &neg), Ok(false));
        let sw = switch_at(&neg, &[1]).unwrap();
        assert_eq!(is_switch_equivalent(&neg, &sw), Ok(true));
        let w = switching_witness(&neg, &sw).unwrap().unwrap();
        assert_eq!(switch(&neg, &w).unwrap(), sw);
    }

    #[test]
    fn equivalence_requires_same_underlying_graph() {
        let p = SignedGraph::new(3, &[(0, 1, Positive)]).unwrap();
        let q = SignedGraph::new(3, &[(1, 2, Positive)]).unwrap();
        assert_eq!(is_switch_equivalent(&p, &q), Err(Error::UnderlyingMismatch));
    }

    #[test]
    fn double_switching_of_k2() {
        let d = double_switching(&k2(Positive));
        assert_eq!(d.order(), 4);
        assert_eq!(d.sign(0, 1), Some(Positive));
        assert_eq!(d.sign(2, 3), Some(Positive));
        assert_eq!(d.sign(0, 3), Some(Negative));
        assert_eq!(d.sign(2, 1), Some(Negative));
        assert_eq!(d.sign(0, 2), None);
        assert_eq!(d.sign(1, 3), None);
        assert_eq!(d.label(2), "0^");
        assert_eq!(double_switching(&SignedGraph::empty(3)).edge_count(), 0);
        assert_eq!(double_switching(&SignedGraph::empty(3)).order(), 6);
    }

    #[test]
    fn forced_pairs_on_four_cycles() {
        let pos = forced_distinct_pairs(&c4([Positive; 4]));
        assert_eq!(pos.len(), 4);
        assert!(!pos.contains(&(0, 2)));
        let neg = forced_distinct_pairs(&c4([Negative, Positive, Positive, Positive]));
        assert_eq!(neg.len(), 6);
    }

    #[test]
    fn tree_normal_form_makes_tree_positive() {
        let g = c4([Negative, Negative, Positive, Negative]);
        let t = tree_normal_form(&g);
        let norm = tree_normalizer(&g);
        for &(u, v) in &norm.tree {
            assert_eq!(t.sign(u, v), Some(Positive));
        }
        assert!(is_switch_equivalent(&g, &t).unwrap());
    }
}
