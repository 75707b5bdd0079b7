use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sgcore::{canonical_key, tree_normalizer, IsoMode, Sign, SignedGraph};

/// One representative per switching class of signatures on the underlying
/// graph of `g`: spanning-forest edges positive, every sign pattern on the
/// remaining `m - n + c` edges (bit `i` set = `i`-th non-tree edge negative).
pub fn enumerate_signatures_mod_switching(g: &SignedGraph) -> impl Iterator<Item = SignedGraph> {
    let base = g.underlying();
    let tree = tree_normalizer(&base).tree;
    let free: Vec<(usize, usize)> =
        base.edges().into_iter().map(|(u, v, _)| (u, v)).filter(|e| !tree.contains(e)).collect();
    assert!(free.len() < 64, "cycle space too large to enumerate");
    (0u64..1 << free.len()).map(move |mask| {
        let mut h = base.clone();
        for (i, &(u, v)) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                h.set(u, v, Some(Sign::Negative));
            }
        }
        h
    })
}

/// Which targets a catalog contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetScope {
    /// Every signed graph of the order.
    All,
    /// Complete signed graphs only.
    Complete,
}

/// Default order caps for `(mode, scope)`; larger orders need an explicit override.
pub fn default_cap(mode: IsoMode, scope: TargetScope) -> usize {
    match (mode, scope) {
        (IsoMode::Sp, TargetScope::All) => 7,
        (IsoMode::Signed, TargetScope::All) => 6,
        (IsoMode::Sp, TargetScope::Complete) => 8,
        (IsoMode::Signed, TargetScope::Complete) => 9,
    }
}

/// All signed graphs of one order up to the equivalence of `mode`, sorted by canonical key.
#[derive(Debug, Clone)]
pub struct TargetCatalog {
    pub order: usize,
    pub mode: IsoMode,
    pub scope: TargetScope,
    pub graphs: Arc<Vec<SignedGraph>>,
}

impl TargetCatalog {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignedGraph> {
        self.graphs.iter()
    }
}

type CatalogKey = (IsoMode, TargetScope, usize);

fn cache() -> &'static Mutex<HashMap<CatalogKey, Arc<Vec<SignedGraph>>>> {
    static CACHE: OnceLock<Mutex<HashMap<CatalogKey, Arc<Vec<SignedGraph>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

// Adjacency vectors for a new vertex joined to `k` old ones.
fn extension_vectors(k: usize, mode: IsoMode, scope: TargetScope) -> Vec<Vec<Option<Sign>>> {
    let alphabet: &[Option<Sign>] = match scope {
        TargetScope::All => &[None, Some(Sign::Positive), Some(Sign::Negative)],
        TargetScope::Complete => &[Some(Sign::Positive), Some(Sign::Negative)],
    };
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                alphabet.iter().map(move |&s| {
                    let mut w = v.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    if mode == IsoMode::Signed {
        // switching the new vertex negates its vector; keep the one whose first edge is positive
        out.retain(|v| v.iter().flatten().next() != Some(&Sign::Negative));
    }
    out
}

fn build(order: usize, mode: IsoMode, scope: TargetScope) -> Arc<Vec<SignedGraph>> {
    if let Some(c) = cache().lock().unwrap().get(&(mode, scope, order)) {
        return c.clone();
    }
    let graphs = if order == 0 {
        vec![SignedGraph::empty(0)]
    } else {
        let parents = build(order - 1, mode, scope);
        let vectors = extension_vectors(order - 1, mode, scope);
        let found: BTreeMap<Vec<u8>, SignedGraph> = parents
            .par_iter()
            .flat_map_iter(|p| {
                let mut local = BTreeMap::new();
                for vec in &vectors {
                    let mut g = SignedGraph::empty(order);
                    for (u, v, s) in p.edges() {
                        g.set(u, v, Some(s));
                    }
                    for (u, &s) in vec.iter().enumerate() {
                        g.set(u, order - 1, s);
                    }
                    local.entry(canonical_key(&g, mode)).or_insert(g);
                }
                local
            })
            .collect::<Vec<_>>()
            .into_iter()
            .fold(BTreeMap::new(), |mut acc, (k, g)| {
                acc.entry(k).or_insert(g);
                acc
            });
        found.into_values().collect()
    };
    let graphs = Arc::new(graphs);
    cache().lock().unwrap().insert((mode, scope, order), graphs.clone());
    graphs
}

/// Catalog of all signed graphs of `order` up to sp-isomorphism or switching
/// isomorphism, under the default cap.
pub fn enumerate_targets(order: usize, mode: IsoMode) -> Result<TargetCatalog> {
    enumerate_targets_with(order, mode, TargetScope::All, None)
}

/// Catalog with explicit scope; `cap_override` replaces the default order cap.
pub fn enumerate_targets_with(
    order: usize,
    mode: IsoMode,
    scope: TargetScope,
    cap_override: Option<usize>,
) -> Result<TargetCatalog> {
    let cap = cap_override.unwrap_or_else(|| default_cap(mode, scope));
    if order > cap {
        return Err(Error::SizeCap { what: "target catalog order", cap, got: order });
    }
    Ok(TargetCatalog { order, mode, scope, graphs: build(order, mode, scope) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgcore::is_switch_equivalent;
    use std::collections::BTreeSet;

    fn complete(n: usize) -> SignedGraph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, Sign::Positive))).collect();
        SignedGraph::new(n, &e).unwrap()
    }

    #[test]
    fn signature_classes() {
        assert_eq!(enumerate_signatures_mod_switching(&complete(3)).count(), 2);
        assert_eq!(enumerate_signatures_mod_switching(&complete(4)).count(), 8);
        let path = SignedGraph::new(4, &[(0, 1, Sign::Negative), (1, 2, Sign::Positive), (2, 3, Sign::Positive)]).unwrap();
        assert_eq!(enumerate_signatures_mod_switching(&path).count(), 1);
    }

    #[test]
    fn k4_classes_match_orbit_count() {
        // oracle: orbits of the 64 signatures under the 16 switchings
        let k4 = complete(4);
        let edges = k4.edges();
        let mut orbits = BTreeSet::new();
        for mask in 0u32..64 {
            let mut rep = u32::MAX;
            for s in 0u32..16 {
                let mut m = 0;
                for (i, &(u, v, _)) in edges.iter().enumerate() {
                    let flip = (s >> u & 1) ^ (s >> v & 1);
                    m |= ((mask >> i & 1) ^ flip) << i;
                }
                rep = rep.min(m);
            }
            orbits.insert(rep);
        }
        assert_eq!(orbits.len(), 8);
        let reps: Vec<_> = enumerate_signatures_mod_switching(&k4).collect();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!is_switch_equivalent(a, b).unwrap());
            }
        }
    }

    #[test]
    fn small_catalogs() {
        assert_eq!(enumerate_targets(1, IsoMode::Sp).unwrap().len(), 1);
        assert_eq!(enumerate_targets(2, IsoMode::Sp).unwrap().len(), 3);
        assert_eq!(enumerate_targets(2, IsoMode::Signed).unwrap().len(), 2);
        assert!(matches!(enumerate_targets(8, IsoMode::Sp), Err(Error::SizeCap { .. })));
        assert!(matches!(enumerate_targets(7, IsoMode::Signed), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn complete_catalog_counts() {
        // sp classes of complete signed graphs are graphs; switching classes are two-graphs
        let graphs = [1, 2, 4, 11, 34, 156];
        let two_graphs = [1, 1, 2, 3, 7, 16, 54];
        for (i, &c) in graphs.iter().enumerate() {
            let cat = enumerate_targets_with(i + 1, IsoMode::Sp, TargetScope::Complete, None).unwrap();
            assert_eq!(cat.len(), c);
            assert!(cat.iter().all(|g| g.is_complete()));
        }
        for (i, &c) in two_graphs.iter().enumerate() {
            assert_eq!(enumerate_targets_with(i + 1, IsoMode::Signed, TargetScope::Complete, None).unwrap().len(), c);
        }
    }

    #[test]
    fn sp_catalog_counts_three_coloured_complete_graphs() {
        for (n, c) in [(1, 1), (2, 3), (3, 10), (4, 66), (5, 792)] {
            assert_eq!(enumerate_targets(n, IsoMode::Sp).unwrap().len(), c);
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn catalogs_match_brute_force_orbits() {
        // oracle: minimum code over all relabellings (and switchings in signed mode)
        for n in 1..=4usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let perms = permutations(n);
            let total = 3usize.pow(pairs.len() as u32);
            let decode = |mut code: usize| {
                let mut m = vec![0u8; n * n];
                for &(u, v) in &pairs {
                    m[u * n + v] = (code % 3) as u8;
                    m[v * n + u] = (code % 3) as u8;
                    code /= 3;
                }
                m
            };
            let encode = |m: &[u8]| pairs.iter().rev().fold(0usize, |acc, &(u, v)| acc * 3 + m[u * n + v] as usize);
            for signed in [false, true] {
                let mut reps = BTreeSet::new();
                for code in 0..total {
                    let m = decode(code);
                    let mut best = usize::MAX;
                    for p in &perms {
                        for s in 0..(if signed { 1usize << n } else { 1 }) {
                            let mut r = vec![0u8; n * n];
                            for u in 0..n {
                                for v in 0..n {
                                    let mut c = m[u * n + v];
                                    if c != 0 && (s >> u & 1) != (s >> v & 1) {
                                        c = 3 - c;
                                    }
                                    r[p[u] * n + p[v]] = c;
                                }
                            }
                            best = best.min(encode(&r));
                        }
                    }
                    reps.insert(best);
                }
                let mode = if signed { IsoMode::Signed } else { IsoMode::Sp };
                assert_eq!(enumerate_targets(n, mode).unwrap().len(), reps.len(), "order {n} signed {signed}");
            }
        }
        assert_eq!(enumerate_targets_with(4, IsoMode::Signed, TargetScope::Complete, None).unwrap().len(), 3);
    }
}
