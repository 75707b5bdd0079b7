use std::collections::HashSet;
use std::fmt;
use std::ops::{Mul, Neg};

use crate::bitset::Bits;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Positive, Sign::Negative];

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A simple graph with a sign on every edge.
///
/// Adjacency is held twice: a dense `n × n` matrix of optional signs for
/// constant-time pair queries, and one positive and one negative neighbour
/// bitset per vertex for set algebra over neighbourhoods. Graphs are
/// immutable once built; every transformation returns a new value.
#[derive(Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<Option<Sign>>,
    pos: Vec<Bits>,
    neg: Vec<Bits>,
    labels: Option<Vec<String>>,
}

impl SignedGraph {
    /// Builds a signed graph from an explicit edge list.
    pub fn new(order: usize, edges: &[(usize, usize, Sign)]) -> Result<Self> {
        let mut g = SignedGraph::empty(order);
        for &(u, v, s) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.sign(u, v).is_some() {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set(u, v, Some(s));
        }
        Ok(g)
    }

    pub fn empty(order: usize) -> Self {
        SignedGraph {
            n: order,
            adj: vec![None; order * order],
            pos: vec![Bits::new(order); order],
            neg: vec![Bits::new(order); order],
            labels: None,
        }
    }

    /// Attaches vertex labels; they must be unique and one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LabelCount { labels: labels.len(), order: self.n });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    // Overwrites the pair (u, v). Callers inside the crate maintain simplicity.
    pub(crate) fn set(&mut self, u: usize, v: usize, s: Option<Sign>) {
        debug_assert!(u != v);
        let n = self.n;
        self.adj[u * n + v] = s;
        self.adj[v * n + u] = s;
        for (a, b) in [(u, v), (v, u)] {
            self.pos[a].remove(b);
            self.neg[a].remove(b);
            match s {
                Some(Sign::Positive) => self.pos[a].insert(b),
                Some(Sign::Negative) => self.neg[a].insert(b),
                None => {}
            }
        }
    }

    pub(crate) fn set_labels_unchecked(&mut self, labels: Option<Vec<String>>) {
        self.labels = labels;
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.adj[u * self.n + v]
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.sign(u, v).is_some()
    }

    /// Neighbours of `v` joined by an edge of sign `s`.
    #[inline]
    pub fn neighbors_with(&self, v: usize, s: Sign) -> &Bits {
        match s {
            Sign::Positive => &self.pos[v],
            Sign::Negative => &self.neg[v],
        }
    }

    pub fn neighbor_bits(&self, v: usize) -> Bits {
        self.pos[v].union(&self.neg[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.pos[v].count() + self.neg[v].count()
    }

    pub fn signed_degree(&self, v: usize, s: Sign) -> usize {
        self.neighbors_with(v, s).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, Sign)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if let Some(s) = self.sign(u, v) {
                    out.push((u, v, s));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn negative_edge_count(&self) -> usize {
        (0..self.n).map(|v| self.neg[v].count()).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label when present, else its id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// True when both graphs have the same vertex count and edge set, ignoring signs.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a.is_some() == b.is_some())
    }

    /// The underlying graph with every edge made positive.
    pub fn underlying(&self) -> SignedGraph {
        let mut g = SignedGraph::empty(self.n);
        for (u, v, _) in self.edges() {
            g.set(u, v, Some(Sign::Positive));
        }
        g
    }

    /// Renames vertex `v` to `perm[v]`; labels follow their vertices.
    pub fn relabel(&self, perm: &[usize]) -> SignedGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = SignedGraph::empty(self.n);
        for (u, v, s) in self.edges() {
            g.set(perm[u], perm[v], Some(s));
        }
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); self.n];
            for (v, name) in l.iter().enumerate() {
                nl[perm[v]] = name.clone();
            }
            g.labels = Some(nl);
        }
        g
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for r in 0..self.n {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let mut comp = vec![r];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbor_bits(u).iter() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    /// Labels are dropped unless both sides carry them.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let n = self.n + other.n;
        let mut g = SignedGraph::empty(n);
        for (u, v, s) in self.edges() {
            g.set(u, v, Some(s));
        }
        for (u, v, s) in other.edges() {
            g.set(u + self.n, v + self.n, Some(s));
        }
        if let (Some(a), Some(b)) = (&self.labels, &other.labels) {
            let all: Vec<String> = a.iter().chain(b).cloned().collect();
            let unique: HashSet<&String> = all.iter().collect();
            if unique.len() == all.len() {
                g.labels = Some(all);
            }
        }
        g
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}; ", self.n)?;
        for (i, (u, v, s)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}{s}{v}")?;
        }
        write!(f, ")")
    }
}

/// A subset of the vertices of some graph of known order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: Bits,
}

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(order: usize, members: I) -> Result<Self> {
        let mut bits = Bits::new(order);
        for v in members {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            bits.insert(v);
        }
        Ok(VertexSet { bits })
    }

    pub fn empty(order: usize) -> Self {
        VertexSet { bits: Bits::new(order) }
    }

    pub fn full(order: usize) -> Self {
        VertexSet { bits: Bits::full(order) }
    }

    pub fn from_bits(bits: Bits) -> Self {
        VertexSet { bits }
    }

    pub fn order(&self) -> usize {
        self.bits.capacity()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.bits.iter().collect()
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bits.fmt(f)
    }
}

/// A vertex sequence; validity against a graph is checked where it is used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk(Vec<usize>);

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyWalk);
        }
        Ok(Walk(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_closed(&self) -> bool {
        self.0.first() == self.0.last()
    }

    /// Number of edge traversals.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() <= 1
    }
}

/// A vertex map from a source graph to a target graph.
///
/// When `switch_witness` is present the map is meant as a homomorphism:
/// switching the source at the witness set turns it into a sign-preserving map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mapping {
    pub image: Vec<usize>,
    pub switch_witness: Option<VertexSet>,
}

impl Mapping {
    pub fn new(image: Vec<usize>) -> Self {
        Mapping { image, switch_witness: None }
    }

    pub fn with_witness(image: Vec<usize>, witness: VertexSet) -> Self {
        Mapping { image, switch_witness: Some(witness) }
    }

    /// Checks the sign-preserving homomorphism condition edge by edge.
    pub fn is_sp_hom(&self, source: &SignedGraph, target: &SignedGraph) -> bool {
        self.image.len() == source.order()
            && self.image.iter().all(|&x| x < target.order())
            && source
                .edges()
                .iter()
                .all(|&(u, v, s)| target.sign(self.image[u], self.image[v]) == Some(s))
    }

    /// Checks the homomorphism condition using the switch witness
    /// (an absent witness means the empty set).
    pub fn is_hom(&self, source: &SignedGraph, target: &SignedGraph) -> bool {
        let flip = |v: usize| self.switch_witness.as_ref().is_some_and(|w| w.contains(v));
        if let Some(w) = &self.switch_witness {
            if w.order() != source.order() {
                return false;
            }
        }
        self.image.len() == source.order()
            && self.image.iter().all(|&x| x < target.order())
            && source.edges().iter().all(|&(u, v, s)| {
                let s = if flip(u) != flip(v) { -s } else { s };
                target.sign(self.image[u], self.image[v]) == Some(s)
            })
    }
}
