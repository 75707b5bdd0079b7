use sghom::analysis::induced_signed_subgraph;
use sghom::gen::{named_graph, paley};
use sghom::sgcore::{neighbors, sp_isomorphic};
use sghom::{Sign, VertexSet};

use super::{run_fallible, Check, Ctx, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![Check { name: "sp9.neighbourhoods", suite: "sp9", anchor: "signed neighbourhoods in SP9 induce K4 with a matching or 4-cycle", run: neighbourhoods }]
}

fn neighbourhoods(_: &Ctx) -> Outcome {
    run_fallible(|| {
        let t = paley(9)?;
        let mplus = named_graph("K4_Mplus")?.into_graph();
        let mminus = named_graph("K4_Mminus")?.into_graph();
        let mut hoods = [Vec::new(), Vec::new()];
        for v in 0..9 {
            for (k, (s, model)) in [(Sign::Positive, &mplus), (Sign::Negative, &mminus)].into_iter().enumerate() {
                let n = neighbors(&t, v, Some(s))?;
                if n.len() != 4 || sp_isomorphic(&induced_signed_subgraph(&t, &n)?, model).is_none() {
                    return Ok(Outcome::fail("neighbourhood has the wrong type", format!("N{s}({v})")));
                }
                hoods[k].push(n.to_vec());
            }
        }
        let (mut found_plus, mut found_minus) = (0, 0);
        for mask in 0u32..1 << 9 {
            if mask.count_ones() != 4 {
                continue;
            }
            let s: Vec<usize> = (0..9).filter(|&v| mask >> v & 1 == 1).collect();
            let sub = induced_signed_subgraph(&t, &VertexSet::new(9, s.iter().copied())?)?;
            for (k, model) in [&mplus, &mminus].into_iter().enumerate() {
                if sp_isomorphic(&sub, model).is_some() {
                    if !hoods[k].contains(&s) {
                        return Ok(Outcome::fail("induced copy is not a neighbourhood", format!("{s:?}")));
                    }
                    if k == 0 {
                        found_plus += 1;
                    } else {
                        found_minus += 1;
                    }
                }
            }
        }
        if found_plus != 9 || found_minus != 9 {
            return Ok(Outcome::fail("wrong number of induced copies", format!("{found_plus} + {found_minus}")));
        }
        Ok(Outcome::pass(
            "every N+(v) induces K4 with a negative 4-cycle, every N-(v) K4 with a negative matching; \
             of the 126 4-sets exactly these 18 do",
        ))
    })
}
