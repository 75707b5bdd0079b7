//! The registered verification checks, grouped into suites.

use std::path::Path;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use sghom::gen::{enumerate_targets_with, TargetScope};
use sghom::sgcore::IsoMode;
use sghom::{Sign, SignedGraph};

use sghom::solver::SearchOptions;
use sghom::Error;

use crate::report::{CheckRecord, Status, VerificationReport};

mod acyclic;
mod cubic;
mod equivalence;
mod gadget;
mod k4;
mod paley;
mod sp9;
mod splitters;
mod star;

/// Parameters shared by every check.
#[derive(Debug, Clone)]
pub struct Ctx {
    pub seed: u64,
    /// Upper bound on the graph orders a check enumerates; each check has its own default.
    pub max_n: Option<usize>,
    /// Wall-clock allowance for open-ended searches.
    pub budget: Duration,
    pub threads: usize,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx { seed: 0, max_n: None, budget: Duration::from_secs(10), threads: 1 }
    }
}

impl Ctx {
    pub(crate) fn limit(&self, default: usize) -> usize {
        self.max_n.map_or(default, |m| m.min(default))
    }

    pub(crate) fn search(&self) -> SearchOptions {
        SearchOptions::default()
    }

    /// Generator for one check, derived from the run seed and a per-check salt.
    pub(crate) fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

/// Random signed graph on `n` vertices: each pair is an edge with probability
/// `density`, and each edge is negative with probability one half.
pub(crate) fn random_signed_graph(rng: &mut impl Rng, n: usize, density: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v, if rng.gen_bool(0.5) { Sign::Negative } else { Sign::Positive }));
            }
        }
    }
    SignedGraph::new(n, &edges).expect("simple")
}

/// All graphs on `n` vertices up to isomorphism, all edges positive.
pub(crate) fn underlying_graphs(n: usize) -> sghom::Result<Vec<SignedGraph>> {
    let cat = enumerate_targets_with(n, IsoMode::Sp, TargetScope::All, None)?;
    Ok(cat.iter().filter(|g| g.negative_edge_count() == 0).cloned().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub detail: String,
    pub counterexample: Option<String>,
}

impl Outcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        Outcome { status: Status::Pass, detail: detail.into(), counterexample: None }
    }

    pub fn fail(detail: impl Into<String>, counterexample: impl Into<String>) -> Self {
        Outcome { status: Status::Fail, detail: detail.into(), counterexample: Some(counterexample.into()) }
    }

    pub fn skipped(detail: impl Into<String>) -> Self {
        Outcome { status: Status::SkippedByCap, detail: detail.into(), counterexample: None }
    }

    /// Caps and budgets skip; anything else is a failure.
    pub fn from_error(e: Error) -> Self {
        match e {
            Error::CapExhausted { .. } | Error::SizeCap { .. } | Error::BudgetExceeded => {
                Outcome::skipped(e.to_string())
            }
            other => Outcome::fail(format!("error: {other}"), other.to_string()),
        }
    }
}

/// Collapses a fallible check body into an outcome.
pub(crate) fn run_fallible(f: impl FnOnce() -> sghom::Result<Outcome>) -> Outcome {
    f().unwrap_or_else(Outcome::from_error)
}

pub struct Check {
    pub name: &'static str,
    pub suite: &'static str,
    /// What the check reproduces, recorded at the front of the report detail.
    pub anchor: &'static str,
    pub run: fn(&Ctx) -> Outcome,
}

pub const SUITES: [&str; 10] =
    ["all", "paley", "k4", "gadget-cases", "sp9", "equivalences", "star", "cubic", "splitters", "acyclic"];

pub fn registry() -> Vec<Check> {
    let mut v = Vec::new();
    v.extend(paley::checks());
    v.extend(k4::checks());
    v.extend(gadget::checks());
    v.extend(sp9::checks());
    v.extend(equivalence::checks());
    v.extend(star::checks());
    v.extend(cubic::checks());
    v.extend(splitters::checks());
    v.extend(acyclic::checks());
    v
}

/// Checks belonging to any of `suites` (`all` selects everything), in registry order.
pub fn select(suites: &[&str]) -> Result<Vec<Check>, String> {
    if let Some(bad) = suites.iter().find(|s| !SUITES.contains(s)) {
        return Err(format!("unknown suite {bad:?}; expected one of {}", SUITES.join(", ")));
    }
    Ok(registry().into_iter().filter(|c| suites.contains(&"all") || suites.contains(&c.suite)).collect())
}

pub fn find(name: &str) -> Option<Check> {
    registry().into_iter().find(|c| c.name == name)
}

pub fn run_check(check: &Check, ctx: &Ctx) -> CheckRecord {
    let start = Instant::now();
    let outcome = (check.run)(ctx);
    CheckRecord {
        name: check.name.to_string(),
        status: outcome.status,
        detail: format!("[{}] {}", check.anchor, outcome.detail),
        counterexample: outcome.counterexample,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// Runs the selected suites on `ctx.threads` workers and merges results in
/// registry order. Writes the JSON report when `report_path` is given.
pub fn run_suite(suites: &[&str], ctx: &Ctx, report_path: Option<&Path>) -> std::io::Result<VerificationReport> {
    let checks = select(suites).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidInput, e))?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(ctx.threads.max(1)).build().expect("thread pool");
    let records = pool.install(|| checks.par_iter().map(|c| run_check(c, ctx)).collect());
    let report = VerificationReport { seed: ctx.seed, max_n: ctx.max_n, checks: records };
    if let Some(p) = report_path {
        report.write(p)?;
    }
    Ok(report)
}
