use std::ops::Neg;

use rayon::prelude::*;

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::sgcore::{Sign, SignedGraph, VertexSet};

/// A nonempty vector of signs `(α₁, …, α_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(entries: Vec<Sign>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Precondition { what: "SignVector", requirement: "at least one entry".into() });
        }
        Ok(SignVector(entries))
    }

    pub fn entries(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All `2^k` vectors of length `k`, bit `i` of the index set meaning entry `i` negative.
    pub fn all(k: usize) -> impl Iterator<Item = SignVector> {
        (0u64..1 << k).map(move |m| {
            SignVector((0..k).map(|i| if m >> i & 1 == 1 { Sign::Negative } else { Sign::Positive }).collect())
        })
    }
}

impl Neg for &SignVector {
    type Output = SignVector;
    fn neg(self) -> SignVector {
        SignVector(self.0.iter().map(|&s| -s).collect())
    }
}

fn check_tuple(t: &SignedGraph, vs: &[usize]) -> Result<()> {
    for (i, &v) in vs.iter().enumerate() {
        t.check_vertex(v)?;
        if vs[..i].contains(&v) {
            return Err(Error::RepeatedVertex(v));
        }
    }
    Ok(())
}

fn alpha_bits(t: &SignedGraph, vs: &[usize], a: &[Sign]) -> Bits {
    let mut acc = Bits::full(t.order());
    for (&v, &s) in vs.iter().zip(a) {
        acc.intersect_with(t.neighbors_with(v, s));
    }
    acc
}

/// `N^α(v) = ∩ N^{α_i}(v_i)`.
pub fn alpha_neighborhood(t: &SignedGraph, vs: &[usize], a: &SignVector) -> Result<VertexSet> {
    if vs.len() != a.len() {
        return Err(Error::LengthMismatch(vs.len(), a.len()));
    }
    check_tuple(t, vs)?;
    Ok(VertexSet::from_bits(alpha_bits(t, vs, a.entries())))
}

/// `N̂^α(v) = N^α(v) ∪ N^{-α}(v)`.
pub fn hat_neighborhood(t: &SignedGraph, vs: &[usize], a: &SignVector) -> Result<VertexSet> {
    let mut bits = alpha_neighborhood(t, vs, a)?.bits().clone();
    bits.union_with(&alpha_bits(t, vs, (-a).entries()));
    Ok(VertexSet::from_bits(bits))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

fn property(t: &SignedGraph, k: usize, l: usize, hat: bool) -> Result<bool> {
    let n = t.order();
    if k == 0 || k > n {
        return Err(Error::Precondition { what: "property P", requirement: format!("1 <= k <= {n}, got k = {k}") });
    }
    // Intersections do not depend on the order of the tuple, so every ordered
    // tuple is covered by a sorted one paired with the permuted sign vector.
    let vectors: Vec<SignVector> = SignVector::all(k).collect();
    Ok(combinations(n, k).par_iter().all(|vs| {
        vectors.iter().all(|a| {
            let mut bits = alpha_bits(t, vs, a.entries());
            if hat {
                bits.union_with(&alpha_bits(t, vs, (-a).entries()));
            }
            bits.count() >= l
        })
    }))
}

/// Property `P_{k,ℓ}`: every k-tuple of distinct vertices and every sign vector have `|N^α(v)| ≥ ℓ`.
pub fn has_property_p(t: &SignedGraph, k: usize, l: usize) -> Result<bool> {
    property(t, k, l, false)
}

/// Property `P̂_{k,ℓ}`: as `P_{k,ℓ}` with `N̂^α(v)`; invariant under switching.
pub fn has_property_phat(t: &SignedGraph, k: usize, l: usize) -> Result<bool> {
    property(t, k, l, true)
}

/// Whether `u` and `v` agree on their common neighbour `w`.
pub fn agrees_on(t: &SignedGraph, u: usize, v: usize, w: usize) -> Result<bool> {
    for x in [u, v, w] {
        t.check_vertex(x)?;
    }
    match (t.sign(u, w), t.sign(v, w)) {
        (Some(a), Some(b)) => Ok(a == b),
        _ => Err(Error::NotCommonNeighbor { u, v, w }),
    }
}

/// Subgraph induced by `s`, vertices renumbered in increasing order, labels kept.
pub fn induced_signed_subgraph(t: &SignedGraph, s: &VertexSet) -> Result<SignedGraph> {
    let keep = s.to_vec();
    for &v in &keep {
        t.check_vertex(v)?;
    }
    let mut edges = Vec::new();
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            if let Some(sg) = t.sign(u, v) {
                edges.push((i, j, sg));
            }
        }
    }
    let g = SignedGraph::new(keep.len(), &edges)?;
    Ok(match t.labels() {
        Some(l) => g.with_labels(keep.iter().map(|&v| l[v].clone()).collect())?,
        None => g,
    })
}
