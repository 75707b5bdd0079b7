use sghom::analysis::{has_property_p, has_property_phat, transitivity, TransitivityKind};
use sghom::gen::{paley, paley_plus};
use sghom::sgcore::{switch, IsoMode};
use sghom::{Sign, SignedGraph, VertexSet};

use super::{run_fallible, Check, Ctx, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check { name: "paley.structure", suite: "paley", anchor: "Paley graph SP5 and its dominating vertex", run: structure },
        Check { name: "paley.field-oracle", suite: "paley", anchor: "Paley signs are quadratic residues", run: field_oracle },
        Check { name: "paley.extension-grid", suite: "paley", anchor: "extension properties of SP5, SP9, SP13 and plus graphs", run: extension_grid },
        Check { name: "paley.transitivity", suite: "paley", anchor: "symmetry of SP5, SP9 and plus graphs", run: symmetry },
        Check { name: "paley.automorphism-oracle", suite: "paley", anchor: "symmetry by exhaustive permutation", run: automorphism_oracle },
    ]
}

fn structure(_: &Ctx) -> Outcome {
    run_fallible(|| {
        let g = paley(5)?;
        for i in 0..5 {
            for d in 1..5usize {
                let j = (i + d) % 5;
                // consecutive vertices form the positive cycle, distance two the negative one
                let want = if d == 1 || d == 4 { Sign::Positive } else { Sign::Negative };
                if g.sign(i, j) != Some(want) {
                    return Ok(Outcome::fail("SP5 edge sign differs from the two 5-cycles", format!("{i}{j}")));
                }
            }
        }
        let p = paley_plus(5)?;
        let inf = 5;
        let (dp, dn) = (p.signed_degree(inf, Sign::Positive), p.signed_degree(inf, Sign::Negative));
        if p.order() != 6 || dp != 5 || dn != 0 || p.label(inf) != "inf" {
            return Ok(Outcome::fail("SP5+ dominating vertex", format!("d+={dp} d-={dn}")));
        }
        Ok(Outcome::pass("SP5 is the positive cycle 01234 plus the complementary negative cycle; d+(inf)=5"))
    })
}

// Elements as pairs (a, b) meaning a + b i: plain residues mod q, or for
// q = 9 the Gaussian integers mod 3.
fn residue_graph(q: usize) -> SignedGraph {
    let p = if q == 9 { 3 } else { q };
    let elems: Vec<(usize, usize)> = (0..q).map(|i| (i % p, i / p)).collect();
    let square = |(a, b): (usize, usize)| ((a * a + (p - 1) * b * b) % p, 2 * a * b % p);
    let squares: Vec<(usize, usize)> = elems[1..].iter().map(|&e| square(e)).collect();
    let mut edges = Vec::new();
    for u in 0..q {
        for v in u + 1..q {
            let d = ((elems[u].0 + p - elems[v].0) % p, (elems[u].1 + p - elems[v].1) % p);
            edges.push((u, v, if squares.contains(&d) { Sign::Positive } else { Sign::Negative }));
        }
    }
    SignedGraph::new(q, &edges).expect("simple")
}

fn field_oracle(_: &Ctx) -> Outcome {
    run_fallible(|| {
        for q in [5, 9, 13, 17, 29] {
            let g = paley(q)?.without_labels();
            let r = residue_graph(q);
            if g != r {
                return Ok(Outcome::fail(format!("SP{q} differs from the residue oracle"), format!("q={q}")));
            }
        }
        Ok(Outcome::pass("SP5, SP9, SP13, SP17, SP29 equal the independently built residue graphs"))
    })
}

// Oracle for the extension properties: ordered tuples of distinct vertices.
fn brute_property(t: &SignedGraph, k: usize, l: usize, hat: bool) -> bool {
    fn rec(t: &SignedGraph, k: usize, l: usize, hat: bool, tuple: &mut Vec<usize>) -> bool {
        if tuple.len() == k {
            return (0u32..1 << k).all(|mask| {
                let sign = |i: usize, flip: bool| {
                    let s = if mask >> i & 1 == 1 { Sign::Negative } else { Sign::Positive };
                    if flip { -s } else { s }
                };
                let count = (0..t.order())
                    .filter(|&w| {
                        let all = |flip| tuple.iter().enumerate().all(|(i, &v)| t.sign(v, w) == Some(sign(i, flip)));
                        all(false) || (hat && all(true))
                    })
                    .count();
                count >= l
            });
        }
        (0..t.order()).all(|v| {
            if tuple.contains(&v) {
                return true;
            }
            tuple.push(v);
            let ok = rec(t, k, l, hat, tuple);
            tuple.pop();
            ok
        })
    }
    rec(t, k, l, hat, &mut Vec::new())
}

fn extension_grid(_: &Ctx) -> Outcome {
    run_fallible(|| {
        let sp5 = paley(5)?;
        let sp9 = paley(9)?;
        let sp13 = paley(13)?;
        let sp5p = paley_plus(5)?;
        let sp9p = paley_plus(9)?;
        let cases: [(&str, &SignedGraph, bool, usize, usize, bool); 13] = [
            ("SP5", &sp5, false, 1, 2, true),
            ("SP5", &sp5, false, 2, 0, true),
            ("SP5", &sp5, false, 1, 3, false),
            ("SP9", &sp9, false, 1, 4, true),
            ("SP9", &sp9, false, 2, 1, true),
            ("SP13", &sp13, false, 1, 6, true),
            ("SP13", &sp13, false, 2, 2, true),
            ("SP5+", &sp5p, true, 1, 5, true),
            ("SP5+", &sp5p, true, 2, 2, true),
            ("SP9+", &sp9p, true, 1, 9, true),
            ("SP9+", &sp9p, true, 2, 4, true),
            ("SP9+", &sp9p, true, 3, 1, true),
            ("SP9+", &sp9p, true, 2, 5, false),
        ];
        for (name, t, hat, k, l, want) in cases {
            let got = if hat { has_property_phat(t, k, l)? } else { has_property_p(t, k, l)? };
            let oracle = brute_property(t, k, l, hat);
            let prop = format!("{}_{{{k},{l}}} on {name}", if hat { "Phat" } else { "P" });
            if got != want || oracle != want {
                return Ok(Outcome::fail(format!("{prop}: got {got}, oracle {oracle}, expected {want}"), prop));
            }
        }
        // the hatted property is switching invariant
        let s = switch(&sp9p, &VertexSet::new(10, [0, 3, 9])?)?;
        if !has_property_phat(&s, 3, 1)? {
            return Ok(Outcome::fail("Phat_{3,1} lost under switching", "SP9+ switched at {0,3,inf}"));
        }
        Ok(Outcome::pass("all 11 stated properties hold; SP5 lacks P_{1,3}, SP9+ lacks Phat_{2,5}; oracle agrees"))
    })
}

fn symmetry(_: &Ctx) -> Outcome {
    run_fallible(|| {
        use TransitivityKind::*;
        let cases = [
            ("SP5", paley(5)?, SpVertex, true),
            ("SP5", paley(5)?, SpEdge, true),
            ("SP9", paley(9)?, SpVertex, true),
            ("SP9", paley(9)?, SpEdge, true),
            ("SP5+", paley_plus(5)?, Vertex, true),
            ("SP5+", paley_plus(5)?, Edge, true),
            ("SP9+", paley_plus(9)?, Vertex, true),
            ("SP9+", paley_plus(9)?, Edge, true),
            ("SP5+", paley_plus(5)?, SpVertex, false),
        ];
        for (name, g, kind, want) in cases {
            if transitivity(&g, kind) != want {
                return Ok(Outcome::fail(format!("{kind:?} on {name} should be {want}"), name));
            }
        }
        Ok(Outcome::pass("SP5, SP9 sp-vertex/sp-edge transitive; SP5+, SP9+ vertex/edge transitive; SP5+ not sp-vertex transitive"))
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

// Automorphism group by brute force: permutations, optionally after every switching.
fn brute_automorphisms(g: &SignedGraph, mode: IsoMode) -> Vec<Vec<usize>> {
    let n = g.order();
    let switchings: Vec<SignedGraph> = match mode {
        IsoMode::Sp => vec![g.clone()],
        IsoMode::Signed => (0u32..1 << n)
            .map(|m| switch(g, &VertexSet::new(n, (0..n).filter(|&v| m >> v & 1 == 1)).unwrap()).unwrap())
            .collect(),
    };
    permutations(n)
        .into_iter()
        .filter(|p| {
            switchings.iter().any(|s| s.edges().iter().all(|&(u, v, sg)| g.sign(p[u], p[v]) == Some(sg)))
        })
        .collect()
}

fn automorphism_oracle(_: &Ctx) -> Outcome {
    run_fallible(|| {
        for (name, g, mode) in [("SP5", paley(5)?, IsoMode::Sp), ("SP5+", paley_plus(5)?, IsoMode::Signed)] {
            let auts = brute_automorphisms(&g, mode);
            let n = g.order();
            let vertex = (0..n).all(|v| auts.iter().any(|p| p[0] == v));
            let edges = g.edges();
            let edge = edges.iter().all(|&(u, v, s)| {
                edges.iter().filter(|e| mode == IsoMode::Signed || e.2 == s).all(|&(x, y, _)| {
                    auts.iter().any(|p| p[u] == x && p[v] == y) && auts.iter().any(|p| p[u] == y && p[v] == x)
                })
            });
            if !(vertex && edge) {
                return Ok(Outcome::fail(format!("{name}: brute-force group is not arc transitive"), name));
            }
            let kinds = match mode {
                IsoMode::Sp => [TransitivityKind::SpVertex, TransitivityKind::SpEdge],
                IsoMode::Signed => [TransitivityKind::Vertex, TransitivityKind::Edge],
            };
            if !kinds.iter().all(|&k| transitivity(&g, k)) {
                return Ok(Outcome::fail(format!("{name}: solver disagrees with brute force"), name));
            }
        }
        Ok(Outcome::pass("exhaustive permutation search confirms transitivity of SP5 and SP5+"))
    })
}
