use rayon::prelude::*;

use super::hom::{hom, sp_hom, SearchOptions};
use crate::error::{Error, Result};
use crate::gen::{enumerate_targets_with, TargetScope};
use crate::sgcore::{IsoMode, Mapping, SignedGraph, VertexSet};

/// Minimum target order together with a re-checkable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub value: usize,
    pub witness_target: SignedGraph,
    pub witness_map: Mapping,
}

impl ChromaticResult {
    /// Re-validates the witness edge by edge.
    pub fn verify(&self, g: &SignedGraph, mode: IsoMode) -> bool {
        self.witness_target.order() == self.value
            && match mode {
                IsoMode::Sp => self.witness_map.is_sp_hom(g, &self.witness_target),
                IsoMode::Signed => self.witness_map.is_hom(g, &self.witness_target),
            }
    }
}

/// Which catalogs a chromatic search scans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiOptions {
    /// Complete targets suffice: adding edges to a target keeps every homomorphism.
    pub scope: TargetScope,
    pub search: SearchOptions,
    /// Overrides the catalog order cap.
    pub catalog_cap: Option<usize>,
}

impl Default for ChiOptions {
    fn default() -> Self {
        ChiOptions { scope: TargetScope::Complete, search: SearchOptions::default(), catalog_cap: None }
    }
}

fn chi(g: &SignedGraph, cap: usize, mode: IsoMode, opts: &ChiOptions) -> Result<ChromaticResult> {
    let n = g.order();
    let deadline = opts.search.deadline();
    let inner = SearchOptions { parallel: 1, ..opts.search.clone() };
    let try_target = |t: &SignedGraph| -> Result<Option<Mapping>> {
        let mut o = inner.clone();
        if let Some(d) = deadline {
            o.time_budget = Some(d.saturating_duration_since(std::time::Instant::now()));
        }
        match mode {
            IsoMode::Sp => sp_hom(g, t, &o),
            IsoMode::Signed => hom(g, t, &o),
        }
    };
    // a graph always maps to itself, so only smaller orders need catalogs
    for k in 0..n.min(cap + 1) {
        let cat = enumerate_targets_with(k, mode, opts.scope, opts.catalog_cap)?;
        let found = if opts.search.parallel > 1 {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.search.parallel).build().expect("thread pool");
            pool.install(|| {
                cat.graphs.par_iter().find_map_first(|t| match try_target(t) {
                    Ok(None) => None,
                    other => Some(other.map(|m| (t.clone(), m.unwrap()))),
                })
            })
        } else {
            cat.iter().find_map(|t| match try_target(t) {
                Ok(None) => None,
                other => Some(other.map(|m| (t.clone(), m.unwrap()))),
            })
        };
        if let Some(r) = found {
            let (witness_target, witness_map) = r?;
            return Ok(ChromaticResult { value: k, witness_target, witness_map });
        }
    }
    if n <= cap {
        let identity = (0..n).collect();
        let witness_map = match mode {
            IsoMode::Sp => Mapping::new(identity),
            IsoMode::Signed => Mapping::with_witness(identity, VertexSet::empty(n)),
        };
        return Ok(ChromaticResult { value: n, witness_target: g.clone(), witness_map });
    }
    Err(Error::CapExhausted { cap })
}

/// Least order of a signed graph admitting an sp-homomorphism from `g`, searched up to `cap`.
pub fn chi_sp(g: &SignedGraph, cap: usize) -> Result<ChromaticResult> {
    chi(g, cap, IsoMode::Sp, &ChiOptions::default())
}

/// Least order of a signed graph admitting a homomorphism from `g`, searched up to `cap`.
pub fn chi_s(g: &SignedGraph, cap: usize) -> Result<ChromaticResult> {
    chi(g, cap, IsoMode::Signed, &ChiOptions::default())
}

pub fn chi_sp_with(g: &SignedGraph, cap: usize, opts: &ChiOptions) -> Result<ChromaticResult> {
    chi(g, cap, IsoMode::Sp, opts)
}

pub fn chi_s_with(g: &SignedGraph, cap: usize, opts: &ChiOptions) -> Result<ChromaticResult> {
    chi(g, cap, IsoMode::Signed, opts)
}

/// Whether `chi_s(g) <= chi_sp(g) <= 2 chi_s(g)`.
pub fn sandwich_check(g: &SignedGraph, cap: usize) -> Result<bool> {
    let s = chi_s(g, cap)?.value;
    let sp = chi_sp(g, cap)?.value;
    Ok(s <= sp && sp <= 2 * s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete_with_negative, named_graph};
    use crate::sgcore::Sign::*;

    #[test]
    fn p5m_needs_four() {
        let p = named_graph("P5_M").unwrap().into_graph();
        let r = chi_sp(&p, 6).unwrap();
        assert_eq!(r.value, 4);
        assert!(r.verify(&p, IsoMode::Sp));
        assert!(sandwich_check(&p, 6).unwrap());
    }

    #[test]
    fn classical_cases() {
        let k3 = complete_with_negative(3, &[]);
        assert_eq!(chi_sp(&k3, 5).unwrap().value, 3);
        assert_eq!(chi_s(&k3, 5).unwrap().value, 3);
        assert_eq!(chi_sp(&SignedGraph::empty(1), 3).unwrap().value, 1);
        let path = SignedGraph::new(4, &[(0, 1, Positive), (1, 2, Positive), (2, 3, Positive)]).unwrap();
        assert_eq!(chi_s(&path, 4).unwrap().value, 2);
        let neg_tri = complete_with_negative(3, &[(0, 1)]);
        let r = chi_s(&neg_tri, 4).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.verify(&neg_tri, IsoMode::Signed));
    }

    #[test]
    fn good_k4_needs_four() {
        let g = complete_with_negative(4, &[(0, 1)]);
        assert_eq!(chi_s(&g, 4).unwrap().value, 4);
    }

    #[test]
    fn cap_is_reported() {
        let k4 = complete_with_negative(4, &[]);
        assert_eq!(chi_sp(&k4, 3), Err(Error::CapExhausted { cap: 3 }));
    }

    #[test]
    fn complete_and_all_scopes_agree() {
        let all = ChiOptions { scope: TargetScope::All, ..Default::default() };
        let graphs = [
            named_graph("P5_M").unwrap().into_graph(),
            complete_with_negative(3, &[(0, 1)]),
            SignedGraph::new(5, &[(0, 1, Negative), (1, 2, Positive), (2, 3, Negative), (3, 4, Positive), (4, 0, Positive)])
                .unwrap(),
        ];
        for g in &graphs {
            assert_eq!(chi_sp_with(g, 6, &all).unwrap().value, chi_sp(g, 6).unwrap().value);
            assert_eq!(chi_s_with(g, 6, &all).unwrap().value, chi_s(g, 6).unwrap().value);
        }
    }
}
