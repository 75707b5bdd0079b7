use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;

use sghom::gen::{
    enumerate_cubic_graphs, enumerate_signatures_mod_switching, enumerate_targets_with, find_configuration,
    paley_plus, ConfigPattern, TargetScope,
};
use sghom::sgcore::{is_switch_equivalent, IsoMode};
use sghom::solver::{hom, hom_oracle, SearchOptions, ORACLE_MAX_ORDER};
use sghom::{Error, Sign, SignedGraph};

use super::k4::k4_signature;
use super::{run_fallible, Check, Ctx, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check { name: "cubic.map-to-sp5-plus", suite: "cubic", anchor: "subcubic graphs map to SP5+ except bad K4", run: map_to_sp5_plus },
        Check { name: "cubic.configurations", suite: "cubic", anchor: "every cubic graph contains a reducible configuration", run: configurations },
        Check { name: "cubic.lower-bound-search", suite: "cubic", anchor: "a subcubic graph needing six colours", run: lower_bound_search },
    ]
}

fn map_to_sp5_plus(ctx: &Ctx) -> Outcome {
    run_fallible(|| {
        let t = paley_plus(5)?;
        let (pos, neg) = (k4_signature(0), k4_signature(63));
        let mut classes = 0;
        for n in (4..=ctx.limit(8)).step_by(2) {
            for g in enumerate_cubic_graphs(n)? {
                for s in enumerate_signatures_mod_switching(&g) {
                    classes += 1;
                    let bad = n == 4 && (is_switch_equivalent(&s, &pos)? || is_switch_equivalent(&s, &neg)?);
                    let m = hom(&s, &t, &ctx.search())?;
                    let cx = || format!("{:?}", s.edges());
                    match &m {
                        Some(m) if !m.is_hom(&s, &t) => return Ok(Outcome::fail("invalid witness", cx())),
                        None if n <= 6 && hom_oracle(&s, &t)? => return Ok(Outcome::fail("oracle finds a map", cx())),
                        _ => {}
                    }
                    if m.is_some() == bad {
                        return Ok(Outcome::fail(format!("maps: {}, bad K4: {bad}", m.is_some()), cx()));
                    }
                }
            }
        }
        Ok(Outcome::pass(format!(
            "{classes} signature classes of connected cubic graphs on <= {} vertices; only the two bad K4 classes fail",
            ctx.limit(8)
        )))
    })
}

// Independent validation of a claimed occurrence.
fn occurrence_ok(g: &SignedGraph, p: &ConfigPattern, image: &[usize]) -> bool {
    let n = p.graph.order();
    let blacks: Vec<usize> = (0..n).filter(|&v| p.black[v]).collect();
    for &b in &blacks {
        if (0..n).any(|v| v != b && image[v] == image[b]) {
            return false;
        }
        let mut want: Vec<usize> = (0..n).filter(|&w| p.graph.is_adjacent(b, w)).map(|w| image[w]).collect();
        want.sort_unstable();
        want.dedup();
        let have: Vec<usize> = (0..g.order()).filter(|&w| g.is_adjacent(image[b], w)).collect();
        if want != have {
            return false;
        }
    }
    p.graph.edges().iter().all(|&(u, v, _)| g.is_adjacent(image[u], image[v]))
}

fn configurations(ctx: &Ctx) -> Outcome {
    run_fallible(|| {
        let patterns = ConfigPattern::all_cubic();
        let mut counts = Vec::new();
        for n in (6..=ctx.limit(12)).step_by(2) {
            let graphs = enumerate_cubic_graphs(n)?;
            for (i, g) in graphs.iter().enumerate() {
                let hit = patterns.iter().find_map(|p| find_configuration(g, p).map(|im| (p, im)));
                match hit {
                    Some((p, im)) if occurrence_ok(g, p, &im) => {}
                    Some((p, _)) => return Ok(Outcome::fail(format!("bad occurrence of ({})", p.name), format!("order {n} graph {i}"))),
                    None => return Ok(Outcome::fail("no configuration", format!("order {n} graph {i}: {:?}", g.edges()))),
                }
            }
            counts.push(format!("{n}:{}", graphs.len()));
        }
        Ok(Outcome::pass(format!("every connected cubic graph contains (a)-(d); graphs per order {}", counts.join(" "))))
    })
}

/// Random graph with maximum degree 3, built by adding random admissible edges.
fn random_subcubic(rng: &mut impl Rng, n: usize) -> SignedGraph {
    let mut deg = vec![0; n];
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u] < 3 && deg[v] < 3 {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v, if rng.gen_bool(0.5) { Sign::Negative } else { Sign::Positive }));
        }
    }
    SignedGraph::new(n, &edges).expect("simple")
}

// A graph needs more than five colours iff it maps to no complete signed graph of order five.
fn needs_six(g: &SignedGraph, targets: &[SignedGraph], deadline: Instant) -> sghom::Result<bool> {
    for t in targets {
        let left = deadline.saturating_duration_since(Instant::now());
        let o = SearchOptions { time_budget: Some(left), ..SearchOptions::default() };
        if hom(g, t, &o)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn lower_bound_search(ctx: &Ctx) -> Outcome {
    let deadline = Instant::now() + ctx.budget;
    let max_n = ctx.max_n.unwrap_or(12).max(4);
    let result = (|| -> sghom::Result<SignedGraph> {
        let targets: Vec<SignedGraph> =
            enumerate_targets_with(5, IsoMode::Signed, TargetScope::Complete, None)?.iter().cloned().collect();
        // every signature class of every cubic graph, smallest first
        for n in (4..=max_n.min(12)).step_by(2) {
            for g in enumerate_cubic_graphs(n)? {
                for s in enumerate_signatures_mod_switching(&g) {
                    if Instant::now() > deadline {
                        return Err(Error::BudgetExceeded);
                    }
                    if needs_six(&s, &targets, deadline)? {
                        return Ok(s);
                    }
                }
            }
        }
        let mut rng = ctx.rng(15);
        while Instant::now() < deadline {
            let n = rng.gen_range(4..=max_n);
            let g = random_subcubic(&mut rng, n);
            if needs_six(&g, &targets, deadline)? {
                return Ok(g);
            }
        }
        Err(Error::BudgetExceeded)
    })();
    // confirm a find against the naive oracle on every order-5 target
    let result = result.and_then(|g| {
        if g.order() <= ORACLE_MAX_ORDER {
            for t in enumerate_targets_with(5, IsoMode::Signed, TargetScope::Complete, None)?.iter() {
                if hom_oracle(&g, t)? {
                    return Ok(None);
                }
            }
        }
        Ok(Some(g))
    });
    match result {
        Ok(None) => Outcome::fail("search and oracle disagree on a candidate", "lower-bound candidate"),
        Ok(Some(g)) => Outcome {
            counterexample: Some(crate::format::serialize_graph(&g)),
            ..Outcome::pass(format!("found a subcubic graph of order {} with chi_s > 5", g.order()))
        },
        // the amount searched depends on machine speed, so it stays out of the report
        Err(Error::BudgetExceeded) => Outcome::skipped(format!(
            "not found within budget of {}s among subcubic graphs of order <= {max_n}",
            ctx.budget.as_secs_f64()
        )),
        Err(e) => Outcome::from_error(e),
    }
}
