use crate::error::{Error, Result};
use crate::sgcore::SignedGraph;

pub const CHROMATIC_MAX_ORDER: usize = 20;
pub const ACYCLIC_MAX_ORDER: usize = 14;
pub const MINOR_MAX_ORDER: usize = 12;
pub const MINOR_MAX_CLIQUE: usize = 6;

fn cap(what: &'static str, cap: usize, got: usize) -> Result<()> {
    if got > cap {
        Err(Error::SizeCap { what, cap, got })
    } else {
        Ok(())
    }
}

fn adjacency_masks(g: &SignedGraph) -> Vec<u32> {
    (0..g.order()).map(|v| g.neighbor_bits(v).iter().fold(0u32, |m, w| m | 1 << w)).collect()
}

// Vertices ordered by decreasing degree, then id, for colouring searches.
fn colouring_order(g: &SignedGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn colourable(adj: &[u32], order: &[usize], k: usize, i: usize, colour: &mut [usize], used: usize) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // symmetry: a vertex may open at most one new colour
    for c in 0..k.min(used + 1) {
        if (0..adj.len()).all(|w| adj[v] >> w & 1 == 0 || colour[w] != c) {
            colour[v] = c;
            if colourable(adj, order, k, i + 1, colour, used.max(c + 1)) {
                return true;
            }
            colour[v] = usize::MAX;
        }
    }
    false
}

/// Chromatic number of the underlying graph (at most 20 vertices).
pub fn chromatic_number(g: &SignedGraph) -> Result<usize> {
    let n = g.order();
    cap("chromatic_number order", CHROMATIC_MAX_ORDER, n)?;
    let adj = adjacency_masks(g);
    let order = colouring_order(g);
    let lower = if g.edge_count() > 0 { 2 } else { n.min(1) };
    for k in lower..=n {
        let mut colour = vec![usize::MAX; n];
        if colourable(&adj, &order, k, 0, &mut colour, 0) {
            return Ok(k);
        }
    }
    Ok(n)
}

// Whether `a` and `b` are joined by a path inside the vertices coloured c or d, avoiding `skip`.
fn bicoloured_path(adj: &[u32], colour: &[usize], c: usize, d: usize, a: usize, b: usize, skip: usize) -> bool {
    let allowed: u32 =
        (0..adj.len()).filter(|&w| w != skip && (colour[w] == c || colour[w] == d)).fold(0, |m, w| m | 1 << w);
    let mut seen = 1u32 << a;
    let mut frontier = 1u32 << a;
    while frontier != 0 {
        let u = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let next = adj[u] & allowed & !seen;
        seen |= next;
        frontier |= next;
    }
    seen >> b & 1 == 1
}

fn acyclic_colourable(adj: &[u32], order: &[usize], k: usize, i: usize, colour: &mut [usize], used: usize) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    'colours: for c in 0..k.min(used + 1) {
        let nbrs: Vec<usize> = (0..adj.len()).filter(|&w| adj[v] >> w & 1 == 1 && colour[w] != usize::MAX).collect();
        if nbrs.iter().any(|&w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        // a new bicoloured cycle through v needs two d-neighbours already linked by a c/d path
        for (j, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[j + 1..] {
                if colour[a] == colour[b] && bicoloured_path(adj, colour, c, colour[a], a, b, v) {
                    colour[v] = usize::MAX;
                    continue 'colours;
                }
            }
        }
        if acyclic_colourable(adj, order, k, i + 1, colour, used.max(c + 1)) {
            return true;
        }
        colour[v] = usize::MAX;
    }
    false
}

/// Least number of colours in a proper colouring where every two colour
/// classes induce a forest (at most 14 vertices).
pub fn acyclic_chromatic_number(g: &SignedGraph) -> Result<usize> {
    let n = g.order();
    cap("acyclic_chromatic_number order", ACYCLIC_MAX_ORDER, n)?;
    let adj = adjacency_masks(g);
    // BFS-like order keeps cycles closing early
    let order = colouring_order(g);
    for k in chromatic_number(g)?..=n {
        let mut colour = vec![usize::MAX; n];
        if acyclic_colourable(&adj, &order, k, 0, &mut colour, 0) {
            return Ok(k);
        }
    }
    Ok(n)
}

struct MinorSearch<'a> {
    adj: &'a [u32],
    n: usize,
    t: usize,
}

impl MinorSearch<'_> {
    fn touches(&self, set: u32, other: u32) -> bool {
        (0..self.n).any(|v| set >> v & 1 == 1 && self.adj[v] & other != 0)
    }

    // Chooses branch set number `sets.len()`, whose least vertex exceeds the previous one's.
    fn place(&self, sets: &mut Vec<u32>, used: u32, min_from: usize) -> bool {
        if sets.len() == self.t {
            return true;
        }
        let left = self.t - sets.len();
        for root in min_from..self.n {
            if used >> root & 1 == 1 {
                continue;
            }
            let free = (0..self.n).filter(|&w| w >= root && used >> w & 1 == 0).count();
            if free < left {
                break;
            }
            let allowed: u32 = (root + 1..self.n).filter(|&w| used >> w & 1 == 0).fold(0, |m, w| m | 1 << w);
            if self.grow(sets, used, 1 << root, allowed, 0, root) {
                return true;
            }
        }
        false
    }

    // Enumerates connected sets containing `set`, each once: `banned` vertices are excluded from extension.
    fn grow(&self, sets: &mut Vec<u32>, used: u32, set: u32, allowed: u32, banned: u32, root: usize) -> bool {
        if sets.iter().all(|&s| self.touches(set, s)) {
            sets.push(set);
            if self.place(sets, used | set, root + 1) {
                return true;
            }
            sets.pop();
        }
        let frontier = (0..self.n)
            .filter(|&v| set >> v & 1 == 1)
            .fold(0u32, |m, v| m | self.adj[v])
            & allowed
            & !set
            & !banned;
        let mut banned = banned;
        let mut f = frontier;
        while f != 0 {
            let w = f.trailing_zeros() as usize;
            f &= f - 1;
            if self.grow(sets, used, set | 1 << w, allowed, banned, root) {
                return true;
            }
            banned |= 1 << w;
        }
        false
    }
}

/// Whether the underlying graph has a `K_t` minor (at most 12 vertices, `t <= 6`).
pub fn has_clique_minor(g: &SignedGraph, t: usize) -> Result<bool> {
    let n = g.order();
    cap("has_clique_minor order", MINOR_MAX_ORDER, n)?;
    cap("has_clique_minor clique size", MINOR_MAX_CLIQUE, t)?;
    if t <= 1 {
        return Ok(n >= t);
    }
    if g.edge_count() < t * (t - 1) / 2 {
        return Ok(false);
    }
    let adj = adjacency_masks(g);
    Ok(MinorSearch { adj: &adj, n, t }.place(&mut Vec::new(), 0, 0))
}
