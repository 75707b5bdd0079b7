use std::collections::BTreeSet;

use sghom::analysis::{alpha_neighborhood, SignVector};
use sghom::gen::{h_gadget, paley, paley_plus};
use sghom::sgcore::{forced_distinct_pairs, switch_at};
use sghom::solver::sp_hom_extending;
use sghom::{Mapping, Sign, SignedGraph};

use super::{run_fallible, Check, Ctx, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check { name: "gadget.path-extension", suite: "gadget-cases", anchor: "signed 3-path extends into SP5", run: path_extension },
        Check { name: "gadget.cross-neighbourhoods", suite: "gadget-cases", anchor: "mixed neighbourhoods in SP5 meet", run: cross_neighbourhoods },
        Check { name: "gadget.x-cases", suite: "gadget-cases", anchor: "triangle with pendant into SP5+, cases a to f", run: x_cases },
        Check { name: "gadget.y-extension", suite: "gadget-cases", anchor: "triangle with pendant path extends into SP5+", run: y_extension },
        Check { name: "gadget.forced-pairs", suite: "gadget-cases", anchor: "gadget ports have distinct images", run: forced_pairs },
    ]
}

fn sign_of(bit: u32) -> Sign {
    if bit & 1 == 1 {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

// Every sp-extension of `pins` by exhaustive assignment of the remaining vertices.
fn brute_extensions(g: &SignedGraph, t: &SignedGraph, pins: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let (n, m) = (g.order(), t.order());
    let free: Vec<usize> = (0..n).filter(|v| pins.iter().all(|p| p.0 != *v)).collect();
    let mut out = Vec::new();
    for code in 0..m.pow(free.len() as u32) {
        let mut image = vec![0; n];
        for &(v, x) in pins {
            image[v] = x;
        }
        for (i, &v) in free.iter().enumerate() {
            image[v] = code / m.pow(i as u32) % m;
        }
        if Mapping::new(image.clone()).is_sp_hom(g, t) {
            out.push(image);
        }
    }
    out
}

fn extends(g: &SignedGraph, t: &SignedGraph, pins: &[(usize, usize)]) -> sghom::Result<bool> {
    let fast = sp_hom_extending(g, t, pins, &Default::default())?;
    if let Some(m) = &fast {
        assert!(m.is_sp_hom(g, t) && pins.iter().all(|&(v, x)| m.image[v] == x));
    }
    Ok(fast.is_some())
}

fn path_extension(_: &Ctx) -> Outcome {
    run_fallible(|| {
        let t = paley(5)?;
        for mask in 0..8u32 {
            let s = [sign_of(mask), sign_of(mask >> 1), sign_of(mask >> 2)];
            let path = SignedGraph::new(4, &[(0, 1, s[0]), (1, 2, s[1]), (2, 3, s[2])])?;
            for i in 0..5 {
                for j in 0..5 {
                    let pins = [(0, i), (3, j)];
                    let want = !(s[0] == s[1] && s[1] == s[2] && i == j);
                    let got = extends(&path, &t, &pins)?;
                    let brute = !brute_extensions(&path, &t, &pins).is_empty();
                    if got != want || brute != want {
                        let cx = format!("signs {}{}{} ends {i},{j}", s[0], s[1], s[2]);
                        return Ok(Outcome::fail(format!("extension {got}, oracle {brute}, expected {want}"), cx));
                    }
                }
            }
        }
        Ok(Outcome::pass("200 cases: the path fails to extend exactly when its three signs agree and both ends coincide"))
    })
}

fn cross_neighbourhoods(_: &Ctx) -> Outcome {
    run_fallible(|| {
        let t = paley(5)?;
        for i in 0..5 {
            for j in (0..5).filter(|&j| j != i) {
                for (a, b) in [(Sign::Positive, Sign::Negative), (Sign::Negative, Sign::Positive)] {
                    let n = alpha_neighborhood(&t, &[i, j], &SignVector::new(vec![a, b])?)?;
                    let brute = (0..5).any(|w| t.sign(i, w) == Some(a) && t.sign(j, w) == Some(b));
                    if n.is_empty() || !brute {
                        return Ok(Outcome::fail("empty mixed neighbourhood", format!("{i}{a} {j}{b}")));
                    }
                }
            }
        }
        Ok(Outcome::pass("all 40 mixed neighbourhood intersections in SP5 are nonempty"))
    })
}

const INF: usize = 5;

/// Triangle `u v w` (ids 0..3) made positive, pendant `x` (id 3) at `w`, and
/// optionally `y` (id 4) hanging positively from `x`. Bits of `mask` give the
/// signs of `uw`, `vw`, `wx`.
fn x_graph(mask: u32, with_y: bool) -> SignedGraph {
    let (uw, vw, wx) = (sign_of(mask), sign_of(mask >> 1), sign_of(mask >> 2));
    let mut edges = vec![(0, 1, uw * vw), (0, 2, uw), (1, 2, vw), (2, 3, wx)];
    if with_y {
        edges.push((3, 4, Sign::Positive));
    }
    SignedGraph::new(if with_y { 5 } else { 4 }, &edges).expect("simple")
}

/// The clause governing endpoint images `(a, b)` and the images `x` must avoid.
/// The flag is false only when `{a, b} = {i, i+2}` with `a = i+2`.
fn clause(a: usize, b: usize, same: bool) -> (char, BTreeSet<usize>, bool) {
    let m = |k: usize| k % 5;
    if a == INF || b == INF {
        let i = a.min(b);
        let (c, f) = if same { ('a', [m(i + 4), m(i + 1)].into()) } else { ('b', [INF, i].into()) };
        return (c, f, true);
    }
    let diff = (b + 5 - a) % 5;
    if diff == 1 || diff == 4 {
        let i = if diff == 1 { a } else { b };
        let (c, f) = if same { ('c', [INF].into()) } else { ('d', [i, m(i + 1), m(i + 3)].into()) };
        (c, f, true)
    } else {
        let i = if diff == 2 { a } else { b };
        let (c, f) = if same { ('e', [m(i + 2), m(i + 4)].into()) } else { ('f', [i, m(i + 3)].into()) };
        (c, f, diff == 2)
    }
}

fn x_cases(_: &Ctx) -> Outcome {
    run_fallible(|| {
        let t = paley_plus(5)?;
        let all: BTreeSet<usize> = (0..6).collect();
        let mut seen = BTreeSet::new();
        let mut reversed_exact = 0;
        let mut reversed_total = 0;
        for mask in 0..8u32 {
            let phi = x_graph(mask, false);
            let phi_prime = switch_at(&phi, &[2])?;
            let same = phi.sign(2, 3) == phi.sign(0, 2);
            for a in 0..6 {
                for b in (0..6).filter(|&b| b != a && t.sign(a, b) == phi.sign(0, 1)) {
                    let mut reach = BTreeSet::new();
                    for g in [&phi, &phi_prime] {
                        for c in 0..6 {
                            let pins = [(0, a), (1, b), (3, c)];
                            let got = extends(g, &t, &pins)?;
                            if got != !brute_extensions(g, &t, &pins).is_empty() {
                                return Ok(Outcome::fail("solver disagrees with brute force", format!("{pins:?}")));
                            }
                            if got {
                                reach.insert(c);
                            }
                        }
                    }
                    let (case, forbidden, listed) = clause(a, b, same);
                    seen.insert(case);
                    let allowed: BTreeSet<usize> = all.difference(&forbidden).copied().collect();
                    let cx = format!("case {case} signature {mask} u->{a} v->{b} reachable {reach:?}");
                    if reach.is_disjoint(&allowed) {
                        return Ok(Outcome::fail("no extension avoids the forbidden images", cx));
                    }
                    if listed && reach != allowed {
                        return Ok(Outcome::fail("reachable images differ from the complement of the clause", cx));
                    }
                    if !listed {
                        reversed_total += 1;
                        reversed_exact += (reach == allowed) as usize;
                    }
                }
            }
        }
        if seen.len() != 6 {
            return Ok(Outcome::fail("not every clause was exercised", format!("{seen:?}")));
        }
        Ok(Outcome::pass(format!(
            "all six clauses hold with reachable images exactly the allowed set when u takes the first listed image; \
             with u on i+2 an avoiding extension still exists ({reversed_exact}/{reversed_total} exact)"
        )))
    })
}

fn y_extension(_: &Ctx) -> Outcome {
    run_fallible(|| {
        let t = paley_plus(5)?;
        let mut cases = 0;
        for mask in 0..8u32 {
            let phi = x_graph(mask, true);
            let phi_prime = switch_at(&phi, &[2])?;
            for a in 0..6 {
                for b in (0..6).filter(|&b| b != a && t.sign(a, b) == phi.sign(0, 1)) {
                    for c in 0..6 {
                        let pins = [(0, a), (1, b), (4, c)];
                        let ok = extends(&phi, &t, &pins)? || extends(&phi_prime, &t, &pins)?;
                        let brute = [&phi, &phi_prime].iter().any(|g| !brute_extensions(g, &t, &pins).is_empty());
                        if !ok || !brute {
                            return Ok(Outcome::fail("no extension", format!("signature {mask} pins {pins:?}")));
                        }
                        cases += 1;
                    }
                }
            }
        }
        Ok(Outcome::pass(format!("{cases} pinned cases all extend through one of the two switchings")))
    })
}

// Two vertices can share an image only if they are non-adjacent and, after
// possibly switching one of them, agree on every common neighbour.
fn merge_is_blocked(g: &SignedGraph, u: usize, v: usize) -> bool {
    g.is_adjacent(u, v)
        || (0..g.order()).any(|w| matches!((g.sign(u, w), g.sign(v, w)), (Some(s), Some(r)) if s != r))
            && (0..g.order()).any(|w| matches!((g.sign(u, w), g.sign(v, w)), (Some(s), Some(r)) if s == r))
}

fn forced_pairs(_: &Ctx) -> Outcome {
    let h = h_gadget().graph;
    let ports: Vec<usize> =
        ["x", "y", "a1", "a2", "d1", "d2"].iter().map(|l| h.vertex_by_label(l).expect("label")).collect();
    let forced = forced_distinct_pairs(&h);
    for (i, &u) in ports.iter().enumerate() {
        for &v in &ports[i + 1..] {
            let key = (u.min(v), u.max(v));
            if !forced.contains(&key) || !merge_is_blocked(&h, u, v) {
                return Outcome::fail("pair not forced distinct", format!("{}-{}", h.label(u), h.label(v)));
            }
        }
    }
    Outcome::pass("all 15 pairs among x, y, a1, a2, d1, d2 are forced distinct")
}
