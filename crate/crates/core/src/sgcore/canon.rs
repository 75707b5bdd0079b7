//! Canonical labelling of small edge-coloured graphs by colour refinement
//! and individualisation.
//!
//! The search tree individualises each vertex of the first non-singleton
//! cell in turn and keeps the lexicographically least leaf certificate.
//! Two prunings keep it small: structural twins in a cell are explored once,
//! and automorphisms discovered from equal leaves prune siblings that lie in
//! one orbit of the pointwise stabiliser of the current prefix.

/// Canonical labelling of an edge-coloured graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `labeling[i]` is the vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// Equal for two inputs iff they are isomorphic (colour-preserving).
    pub certificate: Vec<u8>,
}

/// Colour matrix plus vertex colours; colour 0 means "no edge".
pub struct ColoredGraph<'a> {
    pub n: usize,
    pub adj: &'a [u8],
    pub vertex_colors: &'a [u32],
}

impl ColoredGraph<'_> {
    #[inline]
    fn at(&self, u: usize, v: usize) -> u8 {
        self.adj[u * self.n + v]
    }
}

const MAX_GENERATORS: usize = 256;

/// Ranks arbitrary keys densely, preserving their order.
fn rank<K: Ord + Clone>(keys: &[K]) -> (Vec<usize>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let cells = sorted.len();
    let ranks = keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect();
    (ranks, cells)
}

/// Refines `cell_of` to the coarsest equitable partition below it.
pub(crate) fn refine(g: &ColoredGraph<'_>, cell_of: &mut Vec<usize>) {
    let n = g.n;
    let mut cells = {
        let mut c = cell_of.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        if cells == n {
            return;
        }
        let sigs: Vec<(usize, Vec<(usize, u8, u32)>)> = (0..n)
            .map(|v| {
                let mut counts: Vec<(usize, u8, u32)> = Vec::new();
                let mut pairs: Vec<(usize, u8)> =
                    (0..n).filter(|&w| w != v && g.at(v, w) != 0).map(|w| (cell_of[w], g.at(v, w))).collect();
                pairs.sort_unstable();
                for p in pairs {
                    match counts.last_mut() {
                        Some(last) if last.0 == p.0 && last.1 == p.1 => last.2 += 1,
                        _ => counts.push((p.0, p.1, 1)),
                    }
                }
                (cell_of[v], counts)
            })
            .collect();
        let (ranks, new_cells) = rank(&sigs);
        *cell_of = ranks;
        if new_cells == cells {
            return;
        }
        cells = new_cells;
    }
}

fn certificate(g: &ColoredGraph<'_>, labeling: &[usize]) -> Vec<u8> {
    let n = g.n;
    let mut cert = Vec::with_capacity(8 + 4 * n + n * n / 2);
    cert.extend_from_slice(&(n as u64).to_be_bytes());
    for &v in labeling {
        cert.extend_from_slice(&g.vertex_colors[v].to_be_bytes());
    }
    for i in 0..n {
        for j in i + 1..n {
            cert.push(g.at(labeling[i], labeling[j]));
        }
    }
    cert
}

fn are_twins(g: &ColoredGraph<'_>, u: usize, v: usize) -> bool {
    g.at(u, v) == g.at(v, u) && (0..g.n).all(|x| x == u || x == v || g.at(u, x) == g.at(v, x))
}

struct Search<'a, 'b> {
    g: &'a ColoredGraph<'b>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_, '_> {
    fn leaf(&mut self, cell_of: &[usize]) {
        let mut labeling = vec![0; self.g.n];
        for (v, &c) in cell_of.iter().enumerate() {
            labeling[c] = v;
        }
        let cert = certificate(self.g, &labeling);
        match &self.best {
            None => self.best = Some((cert, labeling)),
            Some((best, best_lab)) => match cert.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((cert, labeling)),
                std::cmp::Ordering::Equal => {
                    if self.generators.len() < MAX_GENERATORS {
                        let mut gamma = vec![0; self.g.n];
                        for i in 0..self.g.n {
                            gamma[best_lab[i]] = labeling[i];
                        }
                        if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                            self.generators.push(gamma);
                        }
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Orbit representative of `v` under the generators fixing `prefix` pointwise.
    fn orbit_of(&self, prefix: &[usize], cell: &[usize]) -> Vec<usize> {
        let n = self.g.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for gamma in &self.generators {
            if prefix.iter().all(|&p| gamma[p] == p) {
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        cell.iter().map(|&v| find(&mut parent, v)).collect()
    }

    fn descend(&mut self, cell_of: Vec<usize>, prefix: &mut Vec<usize>) {
        let n = self.g.n;
        let mut sizes = vec![0usize; n];
        for &c in &cell_of {
            sizes[c] += 1;
        }
        let target = match (0..n).find(|&c| sizes[c] > 1) {
            Some(c) => c,
            None => return self.leaf(&cell_of),
        };
        let cell: Vec<usize> = (0..n).filter(|&v| cell_of[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for (i, &v) in cell.iter().enumerate() {
            if tried.iter().any(|&u| are_twins(self.g, u, v)) {
                continue;
            }
            if !tried.is_empty() {
                let orbits = self.orbit_of(prefix, &cell);
                if tried.iter().any(|&u| orbits[cell.iter().position(|&c| c == u).unwrap()] == orbits[i]) {
                    continue;
                }
            }
            tried.push(v);
            let keys: Vec<(usize, bool)> =
                (0..n).map(|x| (cell_of[x], cell_of[x] == target && x != v)).collect();
            let (mut child, _) = rank(&keys);
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }
}

/// Computes a canonical form of `g`.
pub fn canonical_form(g: &ColoredGraph<'_>) -> CanonicalForm {
    assert_eq!(g.adj.len(), g.n * g.n);
    assert_eq!(g.vertex_colors.len(), g.n);
    if g.n == 0 {
        return CanonicalForm { labeling: vec![], certificate: certificate(g, &[]) };
    }
    let (mut cell_of, _) = rank(g.vertex_colors);
    refine(g, &mut cell_of);
    let mut search = Search { g, best: None, generators: Vec::new() };
    search.descend(cell_of, &mut Vec::new());
    let (certificate, labeling) = search.best.expect("at least one leaf");
    CanonicalForm { labeling, certificate }
}

/// Equitable-partition colours of `g` (isomorphism invariant).
pub fn refined_colors(g: &ColoredGraph<'_>) -> Vec<usize> {
    let (mut cell_of, _) = rank(g.vertex_colors);
    refine(g, &mut cell_of);
    cell_of
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, perm: &[usize]) -> Vec<u8> {
        let mut adj = vec![0u8; n * n];
        for i in 0..n {
            let (a, b) = (perm[i], perm[(i + 1) % n]);
            adj[a * n + b] = 1;
            adj[b * n + a] = 1;
        }
        adj
    }

    #[test]
    fn relabelled_cycles_share_a_certificate() {
        let colors = vec![0u32; 6];
        let a = cycle(6, &[0, 1, 2, 3, 4, 5]);
        let b = cycle(6, &[3, 0, 5, 1, 4, 2]);
        let ca = canonical_form(&ColoredGraph { n: 6, adj: &a, vertex_colors: &colors });
        let cb = canonical_form(&ColoredGraph { n: 6, adj: &b, vertex_colors: &colors });
        assert_eq!(ca.certificate, cb.certificate);
    }

    #[test]
    fn two_triangles_differ_from_hexagon() {
        let colors = vec![0u32; 6];
        let hex = cycle(6, &[0, 1, 2, 3, 4, 5]);
        let mut tri = vec![0u8; 36];
        for (a, b) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            tri[a * 6 + b] = 1;
            tri[b * 6 + a] = 1;
        }
        let c1 = canonical_form(&ColoredGraph { n: 6, adj: &hex, vertex_colors: &colors });
        let c2 = canonical_form(&ColoredGraph { n: 6, adj: &tri, vertex_colors: &colors });
        assert_ne!(c1.certificate, c2.certificate);
    }

    #[test]
    fn empty_graph_on_many_vertices_is_cheap() {
        let n = 40;
        let adj = vec![0u8; n * n];
        let colors = vec![0u32; n];
        let c = canonical_form(&ColoredGraph { n, adj: &adj, vertex_colors: &colors });
        assert_eq!(c.labeling.len(), n);
    }

    #[test]
    fn vertex_colours_are_respected() {
        let adj = cycle(4, &[0, 1, 2, 3]);
        let a = canonical_form(&ColoredGraph { n: 4, adj: &adj, vertex_colors: &[1, 0, 0, 0] });
        let b = canonical_form(&ColoredGraph { n: 4, adj: &adj, vertex_colors: &[0, 0, 1, 0] });
        let c = canonical_form(&ColoredGraph { n: 4, adj: &adj, vertex_colors: &[1, 0, 1, 0] });
        assert_eq!(a.certificate, b.certificate);
        assert_ne!(a.certificate, c.certificate);
    }
}
