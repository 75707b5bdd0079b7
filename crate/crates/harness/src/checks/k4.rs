use sghom::gen::paley_plus;
use sghom::sgcore::is_switch_equivalent;
use sghom::solver::{hom, hom_oracle};
use sghom::{Sign, SignedGraph};

use super::{run_fallible, Check, Ctx, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![Check { name: "k4.bad-classes", suite: "k4", anchor: "K4 maps to SP5+ unless bad", run: bad_classes }]
}

pub(crate) const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub(crate) fn k4_signature(mask: u32) -> SignedGraph {
    let edges: Vec<_> = K4_EDGES
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| (u, v, if mask >> i & 1 == 1 { Sign::Negative } else { Sign::Positive }))
        .collect();
    SignedGraph::new(4, &edges).expect("simple")
}

// A K4 signature is bad iff every triangle has the same sign: all positive
// (switching class of the all-positive K4) or all negative (all-negative K4).
fn bad_by_triangles(g: &SignedGraph) -> bool {
    let tri = |a: usize, b: usize, c: usize| g.sign(a, b).unwrap() * g.sign(b, c).unwrap() * g.sign(a, c).unwrap();
    let signs = [tri(0, 1, 2), tri(0, 1, 3), tri(0, 2, 3), tri(1, 2, 3)];
    signs.iter().all(|&s| s == signs[0])
}

fn bad_classes(ctx: &Ctx) -> Outcome {
    run_fallible(|| {
        let t = paley_plus(5)?;
        let pos = k4_signature(0);
        let neg = k4_signature(63);
        let mut bad = 0;
        for mask in 0..64 {
            let g = k4_signature(mask);
            let is_bad = is_switch_equivalent(&g, &pos)? || is_switch_equivalent(&g, &neg)?;
            if is_bad != bad_by_triangles(&g) {
                return Ok(Outcome::fail("switching classification disagrees with triangle signs", format!("mask {mask}")));
            }
            bad += is_bad as usize;
            let found = hom(&g, &t, &ctx.search())?;
            if let Some(m) = &found {
                if !m.is_hom(&g, &t) {
                    return Ok(Outcome::fail("invalid witness", format!("mask {mask}")));
                }
            }
            if found.is_some() == is_bad || hom_oracle(&g, &t)? == is_bad {
                return Ok(Outcome::fail(
                    format!("hom existence {} but bad = {is_bad}", found.is_some()),
                    format!("mask {mask}"),
                ));
            }
        }
        if bad != 16 {
            return Ok(Outcome::fail(format!("{bad} bad signatures, expected 16"), "count"));
        }
        Ok(Outcome::pass("of 64 K4 signatures exactly the 16 bad ones fail to map to SP5+; oracle agrees"))
    })
}
