use rand::Rng;

use sghom::solver::{acyclic_chromatic_number, chi_s, chi_sp};
use sghom::Error;

use super::{random_signed_graph, run_fallible, Check, Ctx, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![Check { name: "acyclic.bounds", suite: "acyclic", anchor: "bounds from acyclic colourings", run: bounds }]
}

fn bounds(ctx: &Ctx) -> Outcome {
    run_fallible(|| {
        let mut rng = ctx.rng(17);
        let (mut checked, mut skipped) = (0, 0);
        for i in 0..200 {
            let n = rng.gen_range(1..=ctx.limit(8));
            let density = rng.gen_range(0.2..0.9);
            let g = random_signed_graph(&mut rng, n, density);
            // k = 1 only for edgeless graphs, where k 2^(k-2) would round below 1
            let k = acyclic_chromatic_number(&g)?.max(2);
            let (bound_s, bound_sp) = (k << (k - 2), k << (k - 1));
            let values = chi_s(&g, bound_s.min(n)).and_then(|s| Ok((s.value, chi_sp(&g, bound_sp.min(n))?.value)));
            match values {
                Ok((s, sp)) if s <= bound_s && sp <= bound_sp => checked += 1,
                Ok((s, sp)) => {
                    return Ok(Outcome::fail(
                        format!("graph {i}: k={k}, chi_s={s} (bound {bound_s}), chi_sp={sp} (bound {bound_sp})"),
                        format!("{:?}", g.edges()),
                    ))
                }
                Err(Error::CapExhausted { .. } | Error::SizeCap { .. }) => skipped += 1,
                Err(e) => return Err(e),
            }
        }
        if checked == 0 {
            return Ok(Outcome::skipped("every graph exceeded the search caps"));
        }
        Ok(Outcome::pass(format!("{checked} random signed graphs satisfy both bounds, {skipped} skipped by cap")))
    })
}
