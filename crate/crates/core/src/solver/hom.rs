use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::sgcore::{double_switching, Mapping, SignedGraph, VertexSet};

/// Knobs shared by the homomorphism searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Assign source vertices in id order so the first witness is the
    /// lexicographically least one. Otherwise a degeneracy order is used.
    pub deterministic: bool,
    /// Wall-clock limit; exceeding it yields [`Error::BudgetExceeded`].
    pub time_budget: Option<Duration>,
    /// Worker count for root splitting and catalog scans (1 = sequential).
    pub parallel: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { deterministic: false, time_budget: None, parallel: 1 }
    }
}

impl SearchOptions {
    /// Defaults with the worker count taken from `SG_THREADS` when set.
    pub fn from_env() -> Self {
        let parallel = std::env::var("SG_THREADS").ok().and_then(|s| s.parse().ok()).filter(|&p| p > 0).unwrap_or(1);
        SearchOptions { parallel, ..Default::default() }
    }

    pub fn lex_least() -> Self {
        SearchOptions { deterministic: true, ..Default::default() }
    }

    pub(crate) fn deadline(&self) -> Option<Instant> {
        self.time_budget.map(|b| Instant::now() + b)
    }
}

/// Source vertices by decreasing core number (degeneracy order reversed), least id first among ties.
fn degeneracy_order(g: &SignedGraph) -> Vec<usize> {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut peel = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], std::cmp::Reverse(v))).unwrap();
        removed[v] = true;
        peel.push(v);
        for w in g.neighbor_bits(v).iter() {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    peel.reverse();
    peel
}

struct Backtrack<'a> {
    source: &'a SignedGraph,
    target: &'a SignedGraph,
    order: Vec<usize>,
    deadline: Option<Instant>,
    nodes: u64,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfTime,
}

impl Backtrack<'_> {
    fn rec(&mut self, depth: usize, cands: &mut [Bits], image: &mut [usize], placed: &mut [bool]) -> Outcome {
        if depth == self.order.len() {
            return Outcome::Found;
        }
        self.nodes += 1;
        if self.nodes % 1024 == 0 && self.deadline.is_some_and(|d| Instant::now() > d) {
            return Outcome::OutOfTime;
        }
        let v = self.order[depth];
        let options: Vec<usize> = cands[v].iter().collect();
        placed[v] = true;
        for x in options {
            let mut trail: Vec<(usize, Bits)> = Vec::new();
            let mut ok = true;
            for s in crate::sgcore::Sign::BOTH {
                for u in self.source.neighbors_with(v, s).iter() {
                    if placed[u] {
                        continue;
                    }
                    let narrowed = cands[u].intersection(self.target.neighbors_with(x, s));
                    let empty = narrowed.is_empty();
                    trail.push((u, std::mem::replace(&mut cands[u], narrowed)));
                    if empty {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    break;
                }
            }
            if ok {
                image[v] = x;
                match self.rec(depth + 1, cands, image, placed) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            for (u, old) in trail.into_iter().rev() {
                cands[u] = old;
            }
        }
        placed[v] = false;
        Outcome::Exhausted
    }
}

/// Core search: sp-homomorphism from `source` to `target` with per-vertex
/// initial candidate sets.
pub(crate) fn sp_hom_with_candidates(
    source: &SignedGraph,
    target: &SignedGraph,
    cands: Vec<Bits>,
    opts: &SearchOptions,
) -> Result<Option<Vec<usize>>> {
    let n = source.order();
    if n == 0 {
        return Ok(Some(vec![]));
    }
    if cands.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }
    let order = if opts.deterministic { (0..n).collect() } else { degeneracy_order(source) };
    let deadline = opts.deadline();
    let run_from = |root: Option<usize>| -> Result<Option<Vec<usize>>> {
        let mut c = cands.clone();
        if let Some(x) = root {
            c[order[0]] = Bits::from_iter(target.order(), [x]);
        }
        let mut bt = Backtrack { source, target, order: order.clone(), deadline, nodes: 0 };
        let mut image = vec![usize::MAX; n];
        let mut placed = vec![false; n];
        match bt.rec(0, &mut c, &mut image, &mut placed) {
            Outcome::Found => Ok(Some(image)),
            Outcome::Exhausted => Ok(None),
            Outcome::OutOfTime => Err(Error::BudgetExceeded),
        }
    };
    if opts.parallel <= 1 || cands[order[0]].count() <= 1 {
        return run_from(None);
    }
    let roots: Vec<usize> = cands[order[0]].iter().collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.parallel).build().expect("thread pool");
    pool.install(|| {
        roots
            .par_iter()
            .find_map_first(|&x| match run_from(Some(x)) {
                Ok(None) => None,
                other => Some(other),
            })
            .unwrap_or(Ok(None))
    })
}

/// Sign-preserving homomorphism `source → target`, if one exists.
pub fn sp_hom(source: &SignedGraph, target: &SignedGraph, opts: &SearchOptions) -> Result<Option<Mapping>> {
    let cands = vec![Bits::full(target.order()); source.order()];
    Ok(sp_hom_with_candidates(source, target, cands, opts)?.map(Mapping::new))
}

/// Sign-preserving homomorphism `source → target` extending the partial map
/// `pins` (pairs `(source vertex, target vertex)`).
pub fn sp_hom_extending(
    source: &SignedGraph,
    target: &SignedGraph,
    pins: &[(usize, usize)],
    opts: &SearchOptions,
) -> Result<Option<Mapping>> {
    let mut cands = vec![Bits::full(target.order()); source.order()];
    for &(v, x) in pins {
        source.check_vertex(v)?;
        target.check_vertex(x)?;
        cands[v] = cands[v].intersection(&Bits::from_iter(target.order(), [x]));
    }
    Ok(sp_hom_with_candidates(source, target, cands, opts)?.map(Mapping::new))
}

/// Homomorphism up to switching: an sp-homomorphism into the double switching
/// graph of `target`, folded back onto `target`.
///
/// The returned mapping carries the set of source vertices to switch.
pub fn hom(source: &SignedGraph, target: &SignedGraph, opts: &SearchOptions) -> Result<Option<Mapping>> {
    let (n, m) = (source.order(), target.order());
    let hat = double_switching(target);
    let mut cands = vec![Bits::full(2 * m); n];
    // switching a whole component moves its images between twins, so each
    // component's least vertex may be sent to an original vertex
    for comp in source.components() {
        cands[comp[0]] = Bits::from_iter(2 * m, 0..m);
    }
    let Some(image) = sp_hom_with_candidates(source, &hat, cands, opts)? else { return Ok(None) };
    let witness = VertexSet::new(n, (0..n).filter(|&v| image[v] >= m))?;
    Ok(Some(Mapping::with_witness(image.iter().map(|&x| x % m).collect(), witness)))
}

pub const ORACLE_MAX_ORDER: usize = 12;

// Plain id-order backtracking for exact sign-preserving maps.
fn naive_sp_hom(source: &SignedGraph, target: &SignedGraph, image: &mut Vec<usize>) -> bool {
    let v = image.len();
    if v == source.order() {
        return true;
    }
    for x in 0..target.order() {
        if (0..v).all(|u| match source.sign(u, v) {
            Some(s) => target.sign(image[u], x) == Some(s),
            None => true,
        }) {
            image.push(x);
            if naive_sp_hom(source, target, image) {
                return true;
            }
            image.pop();
        }
    }
    false
}

/// Reference decision for [`hom`]: tries every switching of `source` (the
/// least vertex of each component held fixed) against a naive sp search.
pub fn hom_oracle(source: &SignedGraph, target: &SignedGraph) -> Result<bool> {
    let n = source.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::SizeCap { what: "hom_oracle source order", cap: ORACLE_MAX_ORDER, got: n });
    }
    let roots: Vec<usize> = source.components().iter().map(|c| c[0]).collect();
    let free: Vec<usize> = (0..n).filter(|v| !roots.contains(v)).collect();
    for mask in 0u32..1 << free.len() {
        let mut g = source.clone();
        for (u, v, s) in source.edges() {
            let su = free.iter().position(|&f| f == u).is_some_and(|i| mask >> i & 1 == 1);
            let sv = free.iter().position(|&f| f == v).is_some_and(|i| mask >> i & 1 == 1);
            if su != sv {
                g.set(u, v, Some(-s));
            }
        }
        if naive_sp_hom(&g, target, &mut Vec::new()) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete_with_negative, named_graph, paley, paley_plus};
    use crate::sgcore::Sign::*;

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn identity_is_the_lex_least_self_map() {
        let g = paley(5).unwrap();
        let m = sp_hom(&g, &g, &SearchOptions::lex_least()).unwrap().unwrap();
        assert_eq!(m.image, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn positive_k4_is_not_sp_mappable_to_sp5_plus() {
        let k4 = complete_with_negative(4, &[]);
        let t = paley_plus(5).unwrap();
        assert_eq!(sp_hom(&k4, &t, &opts()).unwrap(), None);
        // oracle: all 6^4 maps
        let mut any = false;
        for code in 0..6usize.pow(4) {
            let f: Vec<usize> = (0..4).map(|i| code / 6usize.pow(i) % 6).collect();
            any |= Mapping::new(f).is_sp_hom(&k4, &t);
        }
        assert!(!any);
    }

    #[test]
    fn p5m_maps_to_sp5() {
        let p = named_graph("P5_M").unwrap().into_graph();
        let m = sp_hom(&p, &paley(5).unwrap(), &opts()).unwrap().unwrap();
        assert!(m.is_sp_hom(&p, &paley(5).unwrap()));
    }

    #[test]
    fn switching_homs() {
        let t = paley_plus(5).unwrap();
        let one_neg = complete_with_negative(4, &[(0, 1)]);
        let m = hom(&one_neg, &t, &opts()).unwrap().unwrap();
        assert!(m.is_hom(&one_neg, &t));
        assert_eq!(hom(&complete_with_negative(4, &[]), &t, &opts()).unwrap(), None);
        let neg_tri = complete_with_negative(3, &[(0, 1)]);
        let pos_tri = complete_with_negative(3, &[]);
        assert_eq!(hom(&neg_tri, &pos_tri, &opts()).unwrap(), None);
        assert!(hom_oracle(&neg_tri, &paley(5).unwrap()).unwrap());
        let k2 = SignedGraph::new(2, &[(0, 1, Positive)]).unwrap();
        assert!(!hom_oracle(&k2, &SignedGraph::empty(1)).unwrap());
        assert!(hom_oracle(&SignedGraph::empty(13), &k2).is_err());
    }

    #[test]
    fn pinned_extension_matches_filtered_brute_force() {
        let t = paley(5).unwrap();
        let path = SignedGraph::new(4, &[(0, 1, Positive), (1, 2, Negative), (2, 3, Positive)]).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let found = sp_hom_extending(&path, &t, &[(0, i), (3, j)], &opts()).unwrap();
                let brute = (0..25).any(|c| Mapping::new(vec![i, c % 5, c / 5, j]).is_sp_hom(&path, &t));
                assert_eq!(found.is_some(), brute, "{i} {j}");
                if let Some(m) = found {
                    assert!(m.is_sp_hom(&path, &t) && m.image[0] == i && m.image[3] == j);
                }
            }
        }
        assert_eq!(sp_hom_extending(&path, &t, &[(0, 1), (0, 2)], &opts()).unwrap(), None);
        assert!(sp_hom_extending(&path, &t, &[(4, 0)], &opts()).is_err());
    }

    #[test]
    fn budget_is_reported() {
        // a large source against a target it cannot map to, with a zero budget
        let g = crate::gen::build_tower(5).unwrap();
        let t = complete_with_negative(3, &[]);
        let o = SearchOptions { time_budget: Some(Duration::ZERO), ..opts() };
        let r = hom(&g, &t, &o);
        assert!(matches!(r, Err(Error::BudgetExceeded) | Ok(None)));
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        let t = paley_plus(5).unwrap();
        for neg in [vec![], vec![(0, 1)], vec![(0, 1), (2, 3)]] {
            let g = complete_with_negative(4, &neg);
            let a = hom(&g, &t, &SearchOptions { parallel: 4, ..opts() }).unwrap();
            let b = hom(&g, &t, &opts()).unwrap();
            assert_eq!(a.is_some(), b.is_some());
            let c = hom(&g, &t, &SearchOptions { parallel: 4, deterministic: true, ..opts() }).unwrap();
            let d = hom(&g, &t, &SearchOptions::lex_least()).unwrap();
            assert_eq!(c, d);
        }
    }
}
