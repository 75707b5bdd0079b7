use sghom::gen::{complete_with_negative, enumerate_targets_with, named_graph, star_construction, TargetScope};
use sghom::sgcore::IsoMode;
use sghom::solver::{chi_sp, sp_hom};
use sghom::{Sign, SignedGraph};

use super::{run_fallible, Check, Ctx, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check { name: "star.p5-matching", suite: "star", anchor: "sp-chromatic number of the alternating path", run: p5_matching },
        Check { name: "star.doubling", suite: "star", anchor: "star construction doubles plus one", run: doubling },
    ]
}

fn p5_matching(ctx: &Ctx) -> Outcome {
    run_fallible(|| {
        let g = named_graph("P5_M")?.into_graph();
        let r = chi_sp(&g, 4)?;
        if r.value != 4 || !r.verify(&g, IsoMode::Sp) {
            return Ok(Outcome::fail(format!("value {}", r.value), format!("{:?}", r.witness_map.image)));
        }
        // no target of order 3 at all, complete or not
        for k in 1..=3 {
            for t in enumerate_targets_with(k, IsoMode::Sp, TargetScope::All, None)?.iter() {
                if sp_hom(&g, t, &ctx.search())?.is_some() {
                    return Ok(Outcome::fail("maps to a smaller target", format!("{:?}", t.edges())));
                }
            }
        }
        Ok(Outcome::pass(format!("value 4 with witness target {:?}; no target of order <= 3", r.witness_target.edges())))
    })
}

fn doubling(_: &Ctx) -> Outcome {
    run_fallible(|| {
        let bases: [(&str, SignedGraph); 4] = [
            ("K1", SignedGraph::empty(1)),
            ("positive K2", SignedGraph::new(2, &[(0, 1, Sign::Positive)])?),
            ("negative K2", SignedGraph::new(2, &[(0, 1, Sign::Negative)])?),
            ("negative triangle", complete_with_negative(3, &[(0, 1), (0, 2), (1, 2)])),
        ];
        let mut values = Vec::new();
        for (name, g) in &bases {
            let base = chi_sp(g, g.order())?;
            let st = star_construction(g);
            let doubled = chi_sp(&st, st.order())?;
            if !doubled.verify(&st, IsoMode::Sp) || doubled.value != 2 * base.value + 1 {
                return Ok(Outcome::fail(format!("{name}: {} -> {}", base.value, doubled.value), *name));
            }
            values.push(format!("{name} {}->{}", base.value, doubled.value));
        }
        Ok(Outcome::pass(values.join(", ")))
    })
}
