use std::collections::BTreeMap;

use rand::Rng;

use sghom::analysis::{splitters, SplitterRecord};
use sghom::gen::{named_graph, paley_plus};
use sghom::sgcore::switch;
use sghom::{SignedGraph, VertexSet};

use super::{run_fallible, Check, Ctx, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![Check { name: "splitters.teams", suite: "splitters", anchor: "splitters and their teams on order-6 targets", run: teams }]
}

// Pairs agreeing on exactly two of the other four vertices, straight from the definition.
fn brute(t: &SignedGraph) -> Vec<SplitterRecord> {
    let mut out = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            let rest: Vec<usize> = (0..6).filter(|&w| w != a && w != b).collect();
            let agree: Vec<usize> = rest.iter().copied().filter(|&w| t.sign(a, w) == t.sign(b, w)).collect();
            let disagree: Vec<usize> = rest.iter().copied().filter(|&w| t.sign(a, w) != t.sign(b, w)).collect();
            if agree.len() == 2 {
                let mut teams = [(agree[0], agree[1]), (disagree[0], disagree[1])];
                teams.sort();
                out.push(SplitterRecord { pair: (a, b), teams });
            }
        }
    }
    out
}

fn per_vertex(records: &[SplitterRecord]) -> BTreeMap<usize, usize> {
    let mut m: BTreeMap<usize, usize> = (0..6).map(|v| (v, 0)).collect();
    for r in records {
        *m.get_mut(&r.pair.0).unwrap() += 1;
        *m.get_mut(&r.pair.1).unwrap() += 1;
    }
    m
}

fn teams(ctx: &Ctx) -> Outcome {
    run_fallible(|| {
        let mut rng = ctx.rng(13);
        let cases = [
            ("SP5+", paley_plus(5)?.without_labels(), 15, 5),
            ("K6_M", named_graph("K6_M")?.into_graph(), 12, 4),
            ("K6_Mbar", named_graph("K6_Mbar")?.into_graph(), 12, 4),
        ];
        for (name, t, pairs, each) in cases {
            let recs = splitters(&t)?;
            if recs != brute(&t) {
                return Ok(Outcome::fail("splitters differ from the definition", name));
            }
            if recs.len() != pairs || per_vertex(&recs).values().any(|&c| c != each) {
                return Ok(Outcome::fail(format!("{} splitters, per vertex {:?}", recs.len(), per_vertex(&recs)), name));
            }
            for _ in 0..50 {
                let s = VertexSet::new(6, (0..6).filter(|_| rng.gen_bool(0.5)))?;
                if splitters(&switch(&t, &s)?)? != recs {
                    return Ok(Outcome::fail("splitters change under switching", format!("{name} at {:?}", s.to_vec())));
                }
            }
        }
        Ok(Outcome::pass(
            "SP5+: all 15 pairs, 5 per vertex; K6 with a matching or its complement: one non-splitter partner per vertex; \
             unchanged under 50 random switchings each",
        ))
    })
}
