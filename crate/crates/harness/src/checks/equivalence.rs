use rand::Rng;

use sghom::gen::{enumerate_signatures_mod_switching, enumerate_targets_with, named_graph, paley, paley_plus, TargetScope, NAMES};
use sghom::sgcore::{is_switch_equivalent, switch, switching_witness, IsoMode};
use sghom::solver::{chi_s, chi_sp, hom, hom_oracle, kn_lower_bound_formulas};
use sghom::{Sign, SignedGraph, VertexSet};

use super::{random_signed_graph, run_fallible, underlying_graphs, Check, Ctx, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check { name: "equiv.hom-vs-oracle", suite: "equivalences", anchor: "homomorphism equals switching then sp-homomorphism", run: hom_vs_oracle },
        Check { name: "equiv.switching-brute-force", suite: "equivalences", anchor: "switching equivalence via balanced cycles", run: switching_brute_force },
        Check { name: "equiv.formulas", suite: "equivalences", anchor: "complete-graph family lower bounds", run: formulas },
        Check { name: "equiv.sandwich", suite: "equivalences", anchor: "chi_s <= chi_sp <= 2 chi_s", run: sandwich },
    ]
}

fn compare(s: &SignedGraph, t: &SignedGraph, ctx: &Ctx) -> sghom::Result<Option<Outcome>> {
    let fast = hom(s, t, &ctx.search())?;
    let slow = hom_oracle(s, t)?;
    if fast.as_ref().is_some_and(|m| !m.is_hom(s, t)) || fast.is_some() != slow {
        let cx = format!("source {:?} target {:?}", s.edges(), t.edges());
        return Ok(Some(Outcome::fail(format!("hom says {}, oracle says {slow}", fast.is_some()), cx)));
    }
    Ok(None)
}

fn hom_vs_oracle(ctx: &Ctx) -> Outcome {
    run_fallible(|| {
        let max_source = ctx.limit(5);
        let max_target = ctx.limit(4);
        let mut targets = Vec::new();
        for k in 1..=max_target {
            targets.extend(enumerate_targets_with(k, IsoMode::Signed, TargetScope::All, None)?.iter().cloned());
        }
        let mut sources = Vec::new();
        for n in 1..=max_source {
            for g in underlying_graphs(n)? {
                sources.extend(enumerate_signatures_mod_switching(&g));
            }
        }
        let mut pairs = 0;
        for s in &sources {
            for t in &targets {
                if let Some(fail) = compare(s, t, ctx)? {
                    return Ok(fail);
                }
                pairs += 1;
            }
        }
        let mut rng = ctx.rng(5);
        for _ in 0..500 {
            let (n, d) = (rng.gen_range(1..=ctx.limit(8)), rng.gen_range(0.2..0.8));
            let s = random_signed_graph(&mut rng, n, d);
            let (m, e) = (rng.gen_range(1..=ctx.limit(5)), rng.gen_range(0.3..1.0));
            let t = random_signed_graph(&mut rng, m, e);
            if let Some(fail) = compare(&s, &t, ctx)? {
                return Ok(fail);
            }
        }
        Ok(Outcome::pass(format!(
            "{} source classes (order <= {max_source}) x {} targets (order <= {max_target}) = {pairs} pairs, plus 500 random pairs; no discrepancy",
            sources.len(),
            targets.len()
        )))
    })
}

fn random_signature(rng: &mut impl Rng, g: &SignedGraph) -> SignedGraph {
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .map(|(u, v, _)| (u, v, if rng.gen_bool(0.5) { Sign::Negative } else { Sign::Positive }))
        .collect();
    SignedGraph::new(g.order(), &edges).expect("simple")
}

fn switching_brute_force(ctx: &Ctx) -> Outcome {
    run_fallible(|| {
        let mut rng = ctx.rng(6);
        let (mut graphs, mut equal) = (0, 0);
        for n in 1..=ctx.limit(5) {
            let subsets: Vec<VertexSet> =
                (0u32..1 << n).map(|m| VertexSet::new(n, (0..n).filter(|&v| m >> v & 1 == 1)).unwrap()).collect();
            for g in underlying_graphs(n)? {
                graphs += 1;
                for k in 0..1000 {
                    let a = random_signature(&mut rng, &g);
                    let b = if k % 2 == 0 {
                        switch(&a, &subsets[rng.gen_range(0..subsets.len())])?
                    } else {
                        random_signature(&mut rng, &g)
                    };
                    let brute = subsets.iter().any(|s| switch(&a, s).unwrap() == b);
                    let fast = is_switch_equivalent(&a, &b)?;
                    let witness = switching_witness(&a, &b)?;
                    let witness_ok = witness.as_ref().is_none_or(|s| switch(&a, s).unwrap() == b);
                    if fast != brute || witness.is_some() != brute || !witness_ok {
                        let cx = format!("{:?} vs {:?}", a.edges(), b.edges());
                        return Ok(Outcome::fail(format!("equivalence {fast}, brute force {brute}"), cx));
                    }
                    equal += brute as usize;
                }
            }
        }
        Ok(Outcome::pass(format!("{graphs} graphs x 1000 signature pairs ({equal} equivalent); no discrepancy")))
    })
}

fn formulas(_: &Ctx) -> Outcome {
    run_fallible(|| {
        let want: [(usize, u64, u64); 4] = [(2, 1, 1), (3, 4, 2), (4, 9, 5), (5, 20, 10)];
        for (n, sp, s) in want {
            let (a, b) = kn_lower_bound_formulas(n)?;
            if a != sp.into() || b != s.into() {
                return Ok(Outcome::fail(format!("n={n}: got ({a},{b}), want ({sp},{s})"), format!("n={n}")));
            }
        }
        Ok(Outcome::pass("(1,1), (4,2), (9,5), (20,10) for n = 2..5"))
    })
}

/// Named graphs, SP5, SP5+ and every signature class of every graph on at most four vertices.
pub(crate) fn corpus() -> sghom::Result<Vec<(String, SignedGraph)>> {
    let mut out = Vec::new();
    for name in NAMES {
        out.push((name.to_string(), named_graph(name)?.into_graph()));
    }
    out.push(("SP5".into(), paley(5)?));
    out.push(("SP5+".into(), paley_plus(5)?));
    for n in 1..=4 {
        for (i, g) in underlying_graphs(n)?.iter().enumerate() {
            for (j, s) in enumerate_signatures_mod_switching(g).enumerate() {
                out.push((format!("order{n}-graph{i}-class{j}"), s));
            }
        }
    }
    Ok(out)
}

fn sandwich(_: &Ctx) -> Outcome {
    run_fallible(|| {
        let corpus = corpus()?;
        for (name, g) in &corpus {
            let cap = g.order();
            let s = chi_s(g, cap)?;
            let sp = chi_sp(g, cap)?;
            if !s.verify(g, IsoMode::Signed) || !sp.verify(g, IsoMode::Sp) {
                return Ok(Outcome::fail("witness does not verify", name.clone()));
            }
            if !(s.value <= sp.value && sp.value <= 2 * s.value) {
                return Ok(Outcome::fail(format!("chi_s = {}, chi_sp = {}", s.value, sp.value), name.clone()));
            }
        }
        Ok(Outcome::pass(format!("holds on all {} corpus graphs with verified witnesses", corpus.len())))
    })
}
