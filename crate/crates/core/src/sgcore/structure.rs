use super::graph::{Sign, SignedGraph, VertexSet};
use crate::error::Result;

/// Neighbourhood of `v`, optionally restricted to edges of one sign.
pub fn neighbors(g: &SignedGraph, v: usize, sign_filter: Option<Sign>) -> Result<VertexSet> {
    g.check_vertex(v)?;
    let bits = match sign_filter {
        Some(s) => g.neighbors_with(v, s).clone(),
        None => g.neighbor_bits(v),
    };
    Ok(VertexSet::from_bits(bits))
}

/// Length of a shortest cycle of the underlying graph; `None` for forests.
pub fn girth(g: &SignedGraph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbor_bits(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
