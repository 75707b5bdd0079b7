use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::sgcore::canon::{canonical_form, ColoredGraph};
use crate::sgcore::{Sign, SignedGraph};

pub const MAX_CUBIC_ORDER: usize = 14;

fn adjacency(g: &SignedGraph) -> Vec<u8> {
    let n = g.order();
    let mut adj = vec![0u8; n * n];
    for (u, v, _) in g.edges() {
        adj[u * n + v] = 1;
        adj[v * n + u] = 1;
    }
    adj
}

fn connected_without(g: &SignedGraph, skip: usize) -> bool {
    let n = g.order();
    let Some(start) = (0..n).find(|&v| v != skip) else { return true };
    let mut seen = vec![false; n];
    seen[skip] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for w in g.neighbor_bits(u).iter() {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n - 1
}

fn marked_certificate(adj: &[u8], n: usize, v: usize) -> Vec<u8> {
    let mut colors = vec![0u32; n];
    colors[v] = 1;
    canonical_form(&ColoredGraph { n, adj, vertex_colors: &colors }).certificate
}

struct Augmenter {
    target: usize,
    out: Vec<SignedGraph>,
}

impl Augmenter {
    // Whether the last vertex of `g` is, up to automorphism, the canonical deletion.
    fn accepts(g: &SignedGraph) -> Option<Vec<u8>> {
        let n = g.order();
        let last = n - 1;
        if !connected_without(g, last) {
            return None;
        }
        let adj = adjacency(g);
        let colors = vec![0u32; n];
        let cf = canonical_form(&ColoredGraph { n, adj: &adj, vertex_colors: &colors });
        let chosen = cf.labeling.iter().rev().copied().find(|&v| v == last || connected_without(g, v))?;
        if chosen != last && marked_certificate(&adj, n, chosen) != marked_certificate(&adj, n, last) {
            return None;
        }
        Some(cf.certificate)
    }

    fn grow(&mut self, g: &SignedGraph) {
        let k = g.order();
        if k == self.target {
            if (0..k).all(|v| g.degree(v) == 3) {
                self.out.push(g.clone());
            }
            return;
        }
        let open: Vec<usize> = (0..k).filter(|&v| g.degree(v) < 3).collect();
        let mut seen = HashSet::new();
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        for a in 0..open.len() {
            subsets.push(vec![open[a]]);
            for b in a + 1..open.len() {
                subsets.push(vec![open[a], open[b]]);
                for c in b + 1..open.len() {
                    subsets.push(vec![open[a], open[b], open[c]]);
                }
            }
        }
        for nbrs in subsets {
            let mut child = SignedGraph::empty(k + 1);
            for (u, v, s) in g.edges() {
                child.set(u, v, Some(s));
            }
            for &u in &nbrs {
                child.set(u, k, Some(Sign::Positive));
            }
            // every remaining vertex can absorb at most three units of deficit
            let deficit: usize = (0..=k).map(|v| 3 - child.degree(v)).sum();
            let remaining = self.target - (k + 1);
            if deficit > 3 * remaining || (remaining == 0 && deficit != 0) {
                continue;
            }
            if let Some(cert) = Self::accepts(&child) {
                if seen.insert(cert) {
                    self.grow(&child);
                }
            }
        }
    }
}

/// All connected 3-regular graphs on `n` vertices up to isomorphism, by
/// canonical augmentation through connected graphs of maximum degree 3.
///
/// Edges are positive. Output order is the depth-first generation order,
/// which is deterministic.
pub fn enumerate_cubic_graphs(n: usize) -> Result<Vec<SignedGraph>> {
    if n % 2 == 1 || !(4..=MAX_CUBIC_ORDER).contains(&n) {
        return Err(Error::Precondition { what: "cubic enumeration", requirement: format!("even n in 4..=14, got {n}") });
    }
    let mut aug = Augmenter { target: n, out: Vec::new() };
    aug.grow(&SignedGraph::empty(1));
    Ok(aug.out)
}
