use crate::sgcore::{Sign, SignedGraph};

fn copy_into(out: &mut SignedGraph, g: &SignedGraph, offset: usize) {
    for (u, v, s) in g.edges() {
        out.set(u + offset, v + offset, Some(s));
    }
}

/// Two copies of `g` (ids `0..n` and `n..2n`) and a vertex `2n` joined
/// positively to the first copy and negatively to the second.
pub fn star_construction(g: &SignedGraph) -> SignedGraph {
    let n = g.order();
    let mut out = SignedGraph::empty(2 * n + 1);
    copy_into(&mut out, g, 0);
    copy_into(&mut out, g, n);
    for v in 0..n {
        out.set(v, 2 * n, Some(Sign::Positive));
        out.set(v + n, 2 * n, Some(Sign::Negative));
    }
    let mut labels: Vec<String> = (0..n).map(|v| g.label(v)).collect();
    labels.extend((0..n).map(|v| format!("{}'", g.label(v))));
    labels.push("inf".into());
    let mut sorted = labels.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() == labels.len() {
        out.set_labels_unchecked(Some(labels));
    }
    out
}

/// For each vertex `v`, two fresh copies of `a`: every vertex of the first is
/// joined to `v` positively, every vertex of the second negatively.
///
/// Original vertices keep their ids; the copies for `v` follow in id order.
pub fn attach_vertex_gadgets(g: &SignedGraph, a: &SignedGraph) -> SignedGraph {
    let (n, k) = (g.order(), a.order());
    let mut out = SignedGraph::empty(n * (1 + 2 * k));
    copy_into(&mut out, g, 0);
    let mut next = n;
    for v in 0..n {
        for s in Sign::BOTH {
            copy_into(&mut out, a, next);
            for w in next..next + k {
                out.set(v, w, Some(s));
            }
            next += k;
        }
    }
    out
}

/// For each edge `xy` (lexicographic order) and each `(α, β)` in `{+,-}²`, a
/// fresh copy of `a` whose vertices are joined to `x` with sign α and to `y` with sign β.
pub fn attach_edge_gadgets(g: &SignedGraph, a: &SignedGraph) -> SignedGraph {
    let (n, k) = (g.order(), a.order());
    let edges = g.edges();
    let mut out = SignedGraph::empty(n + 4 * edges.len() * k);
    copy_into(&mut out, g, 0);
    let mut next = n;
    for (x, y, _) in edges {
        for alpha in Sign::BOTH {
            for beta in Sign::BOTH {
                copy_into(&mut out, a, next);
                for w in next..next + k {
                    out.set(x, w, Some(alpha));
                    out.set(y, w, Some(beta));
                }
                next += k;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::*;

    #[test]
    fn star_of_k1() {
        let s = star_construction(&SignedGraph::empty(1));
        assert_eq!(s.order(), 3);
        assert_eq!(s.sign(0, 2), Some(Positive));
        assert_eq!(s.sign(1, 2), Some(Negative));
        assert_eq!(s.edge_count(), 2);
    }

    #[test]
    fn star_counts_and_copies() {
        let g = SignedGraph::new(3, &[(0, 1, Negative), (1, 2, Positive)]).unwrap();
        let s = star_construction(&g);
        assert_eq!(s.order(), 7);
        assert_eq!(s.edge_count(), 2 * 2 + 2 * 3);
        for (u, v, sg) in g.edges() {
            assert_eq!(s.sign(u, v), Some(sg));
            assert_eq!(s.sign(u + 3, v + 3), Some(sg));
        }
        assert_eq!(s.degree(6), 6);
        assert_eq!(s.label(6), "inf");
    }

    #[test]
    fn vertex_gadgets() {
        let k1 = SignedGraph::empty(1);
        let out = attach_vertex_gadgets(&k1, &k1);
        assert_eq!(out.order(), 3);
        assert_eq!(out.sign(0, 1), Some(Positive));
        assert_eq!(out.sign(0, 2), Some(Negative));
        let g = SignedGraph::new(2, &[(0, 1, Positive)]).unwrap();
        let a = SignedGraph::new(2, &[(0, 1, Negative)]).unwrap();
        let out = attach_vertex_gadgets(&g, &a);
        assert_eq!(out.order(), 2 * (1 + 4));
        assert_eq!(out.sign(2, 3), Some(Negative));
        assert!([2, 3].iter().all(|&w| out.neighbors_with(0, Positive).contains(w)));
    }

    #[test]
    fn edge_gadgets() {
        let k2 = SignedGraph::new(2, &[(0, 1, Positive)]).unwrap();
        let out = attach_edge_gadgets(&k2, &SignedGraph::empty(1));
        assert_eq!(out.order(), 6);
        assert_eq!(out.edge_count(), 9);
        let mut patterns: Vec<(Sign, Sign)> = (2..6).map(|w| (out.sign(0, w).unwrap(), out.sign(1, w).unwrap())).collect();
        patterns.sort_by_key(|p| (p.0.is_positive(), p.1.is_positive()));
        patterns.dedup();
        assert_eq!(patterns.len(), 4);
        assert!((2..6).all(|w| out.degree(w) == 2));
    }
}
