use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::sgcore::{Sign, SignedGraph};
use Sign::{Negative as N, Positive as P};

/// A signed graph with named distinguished vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetTemplate {
    pub graph: SignedGraph,
    ports: Vec<(String, usize)>,
}

impl GadgetTemplate {
    pub fn new(graph: SignedGraph, ports: Vec<(String, usize)>) -> Result<Self> {
        for (i, (name, v)) in ports.iter().enumerate() {
            graph.check_vertex(*v)?;
            if ports[..i].iter().any(|(n, w)| n == name || w == v) {
                return Err(Error::InvalidBinding(format!("port {name:?} repeated")));
            }
        }
        Ok(GadgetTemplate { graph, ports })
    }

    pub fn ports(&self) -> &[(String, usize)] {
        &self.ports
    }

    pub fn port(&self, name: &str) -> Result<usize> {
        self.ports
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, v)| v)
            .ok_or_else(|| Error::UnknownPort(name.to_string()))
    }
}

/// Result of [`named_graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedGraph {
    Graph(SignedGraph),
    Template(GadgetTemplate),
}

impl NamedGraph {
    pub fn graph(&self) -> &SignedGraph {
        match self {
            NamedGraph::Graph(g) => g,
            NamedGraph::Template(t) => &t.graph,
        }
    }

    pub fn into_graph(self) -> SignedGraph {
        match self {
            NamedGraph::Graph(g) => g,
            NamedGraph::Template(t) => t.graph,
        }
    }

    pub fn template(&self) -> Option<&GadgetTemplate> {
        match self {
            NamedGraph::Template(t) => Some(t),
            NamedGraph::Graph(_) => None,
        }
    }
}

pub const NAMES: [&str; 12] = [
    "K4_bad_positive",
    "K4_bad_negative",
    "K4_Mminus",
    "K4_Mplus",
    "K6_M",
    "K6_Mbar",
    "P5_M",
    "H_gadget",
    "X_phi",
    "X_phi_prime",
    "Y_phi",
    "Y_phi_prime",
];

/// Complete graph of order `n` whose negative edges are exactly `neg` (pairs in either order).
pub fn complete_with_negative(n: usize, neg: &[(usize, usize)]) -> SignedGraph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let s = if neg.contains(&(u, v)) || neg.contains(&(v, u)) { N } else { P };
            e.push((u, v, s));
        }
    }
    SignedGraph::new(n, &e).expect("complete graph is simple")
}

fn labeled(order: usize, names: &[&str], edges: &[(usize, usize, Sign)]) -> SignedGraph {
    SignedGraph::new(order, edges)
        .and_then(|g| g.with_labels(names.iter().map(|s| s.to_string()).collect()))
        .expect("static graph is valid")
}

fn template(g: SignedGraph, ports: &[&str]) -> NamedGraph {
    let ports = ports.iter().map(|&p| (p.to_string(), g.vertex_by_label(p).expect("port label exists"))).collect();
    NamedGraph::Template(GadgetTemplate::new(g, ports).expect("static ports are valid"))
}

/// The main gadget: vertices `x y a1 a a2 d1 d d2` (ids 0..8), ports `x`, `y`.
pub fn h_gadget() -> GadgetTemplate {
    let (x, y, a1, a, a2, d1, d, d2) = (0, 1, 2, 3, 4, 5, 6, 7);
    let g = labeled(
        8,
        &["x", "y", "a1", "a", "a2", "d1", "d", "d2"],
        &[
            (x, a1, P),
            (a1, a, P),
            (x, a2, P),
            (a2, y, P),
            (a1, y, P),
            (x, d1, P),
            (d1, d, P),
            (x, d2, P),
            (a, a2, N),
            (d, d2, N),
            (d2, y, N),
            (y, d1, N),
        ],
    );
    GadgetTemplate::new(g, vec![("x".into(), x), ("y".into(), y)]).unwrap()
}

// Triangle uvw (positive cycle) with a pendant x at w; `prime` switches w.
fn x_graph(prime: bool, with_y: bool) -> NamedGraph {
    let w = if prime { N } else { P };
    let mut edges = vec![(0, 1, P), (1, 2, w), (0, 2, w), (2, 3, w)];
    let mut names = vec!["u", "v", "w", "x"];
    if with_y {
        edges.push((3, 4, P));
        names.push("y");
    }
    let g = labeled(names.len(), &names, &edges);
    template(g, &names)
}

/// Looks up one of the fixed small graphs and gadgets by name (see [`NAMES`]).
pub fn named_graph(name: &str) -> Result<NamedGraph> {
    let k4 = ["0", "1", "2", "3"];
    let relabel = |g: SignedGraph, names: &[&str]| g.with_labels(names.iter().map(|s| s.to_string()).collect()).unwrap();
    Ok(match name {
        "K4_bad_positive" => NamedGraph::Graph(complete_with_negative(4, &[])),
        "K4_bad_negative" => {
            NamedGraph::Graph(complete_with_negative(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))
        }
        "K4_Mminus" => NamedGraph::Graph(relabel(complete_with_negative(4, &[(0, 1), (2, 3)]), &k4)),
        "K4_Mplus" => NamedGraph::Graph(relabel(complete_with_negative(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]), &k4)),
        "K6_M" => NamedGraph::Graph(complete_with_negative(6, &[(0, 1), (2, 3), (4, 5)])),
        "K6_Mbar" => {
            let m = [(0, 1), (2, 3), (4, 5)];
            let rest: Vec<_> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).filter(|e| !m.contains(e)).collect();
            NamedGraph::Graph(complete_with_negative(6, &rest))
        }
        "P5_M" => NamedGraph::Graph(
            SignedGraph::new(6, &[(0, 1, N), (1, 2, P), (2, 3, N), (3, 4, P), (4, 5, N)]).unwrap(),
        ),
        "H_gadget" => NamedGraph::Template(h_gadget()),
        "X_phi" => x_graph(false, false),
        "X_phi_prime" => x_graph(true, false),
        "Y_phi" => x_graph(false, true),
        "Y_phi_prime" => x_graph(true, true),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

/// Pins `template` onto `g`: disjoint union, then each port in `binding` is
/// identified with the given vertex of `g`.
///
/// Fresh vertices are labelled `t^{b1,b2,...}` where `t` is the template label
/// and `b1, b2, ...` are the labels of the bound vertices in port order.
pub fn pin(g: &SignedGraph, template: &GadgetTemplate, binding: &BTreeMap<String, usize>) -> Result<SignedGraph> {
    let t = &template.graph;
    let mut image = vec![usize::MAX; t.order()];
    let mut bound: Vec<usize> = Vec::new();
    for (name, port) in template.ports() {
        if let Some(&v) = binding.get(name) {
            g.check_vertex(v)?;
            if bound.contains(&v) {
                return Err(Error::InvalidBinding(format!("vertex {v} bound twice")));
            }
            image[*port] = v;
            bound.push(v);
        }
    }
    if let Some(name) = binding.keys().find(|k| template.ports().iter().all(|(p, _)| p != *k)) {
        return Err(Error::UnknownPort(name.clone()));
    }
    let n = g.order();
    let mut next = n;
    for slot in image.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut out = SignedGraph::empty(next);
    for (u, v, s) in g.edges() {
        out.set(u, v, Some(s));
    }
    for (u, v, s) in t.edges() {
        let (a, b) = (image[u], image[v]);
        match out.sign(a, b) {
            Some(old) if old != s => {
                return Err(Error::InvalidBinding(format!("edge {a}-{b} would carry both signs")));
            }
            _ => out.set(a, b, Some(s)),
        }
    }
    let superscript = bound.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(",");
    let mut labels: Vec<String> = (0..n).map(|v| g.label(v)).collect();
    labels.resize(next, String::new());
    for u in 0..t.order() {
        if image[u] >= n {
            let mut l = format!("{}^{{{}}}", t.label(u), superscript);
            while labels.contains(&l) {
                l.push('\'');
            }
            labels[image[u]] = l;
        }
    }
    out.set_labels_unchecked(Some(labels));
    Ok(out)
}

fn bind(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn pin_on(g: &SignedGraph, h: &GadgetTemplate, u: &str, v: &str) -> SignedGraph {
    let (u, v) = (g.vertex_by_label(u).unwrap(), g.vertex_by_label(v).unwrap());
    pin(g, h, &bind(&[("x", u), ("y", v)])).expect("distinct existing vertices")
}

// A copy of `piece` (port x) glued at every vertex of `base`.
fn glue_everywhere(base: &SignedGraph, piece: &SignedGraph) -> SignedGraph {
    let t = GadgetTemplate::new(piece.clone(), vec![("x".into(), piece.vertex_by_label("x").unwrap())]).unwrap();
    let mut g = base.clone();
    for v in 0..base.order() {
        g = pin(&g, &t, &bind(&[("x", v)])).expect("existing vertex");
    }
    g
}

/// The tower H₀..H₅ of planar triangle-free gadgets.
pub fn build_tower(level: usize) -> Result<SignedGraph> {
    let h = h_gadget();
    let h0 = h.graph.clone();
    let h1 = || pin_on(&h0, &h, "x", "a");
    let h3 = || {
        let mut g = h0.clone();
        for (u, v) in [("x", "a"), ("x", "d"), ("y", "a"), ("y", "d")] {
            g = pin_on(&g, &h, u, v);
        }
        g
    };
    let h4 = || {
        let mut g = h3();
        for sup in ["x,a", "x,d", "y,a", "y,d"] {
            for (p, q) in [("a1", "a2"), ("d1", "d2")] {
                g = pin_on(&g, &h, &format!("{p}^{{{sup}}}"), &format!("{q}^{{{sup}}}"));
            }
        }
        g
    };
    Ok(match level {
        0 => h0,
        1 => h1(),
        2 => glue_everywhere(&h0, &h1()),
        3 => h3(),
        4 => h4(),
        5 => glue_everywhere(&h0, &h4()),
        _ => return Err(Error::TowerLevel(level)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgcore::{forced_distinct_pairs, girth, switch_at};

    #[test]
    fn k4_matchings() {
        let g = named_graph("K4_Mminus").unwrap().into_graph();
        assert_eq!(g.edge_count(), 6);
        let neg: Vec<_> = g.edges().into_iter().filter(|e| e.2 == N).collect();
        assert_eq!(neg.len(), 2);
        assert!(neg[0].0 != neg[1].0 && neg[0].1 != neg[1].1 && neg[0].0 != neg[1].1 && neg[0].1 != neg[1].0);
        let plus = named_graph("K4_Mplus").unwrap().into_graph();
        assert_eq!(plus.negative_edge_count(), 4);
        assert!((0..4).all(|v| plus.signed_degree(v, N) == 2));
    }

    #[test]
    fn k6_matchings_are_complementary() {
        let m = named_graph("K6_M").unwrap().into_graph();
        let mbar = named_graph("K6_Mbar").unwrap().into_graph();
        assert_eq!(m.negative_edge_count(), 3);
        assert_eq!(mbar.negative_edge_count(), 12);
        for (u, v, s) in m.edges() {
            assert_eq!(mbar.sign(u, v), Some(-s));
        }
    }

    #[test]
    fn p5m_pattern() {
        let g = named_graph("P5_M").unwrap().into_graph();
        let signs: Vec<Sign> = (0..5).map(|i| g.sign(i, i + 1).unwrap()).collect();
        assert_eq!(signs, vec![N, P, N, P, N]);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn gadget_edges_and_agreement() {
        let h = h_gadget();
        let g = &h.graph;
        assert_eq!(g.order(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.negative_edge_count(), 4);
        let (x, y) = (h.port("x").unwrap(), h.port("y").unwrap());
        let v = |l: &str| g.vertex_by_label(l).unwrap();
        for w in ["a1", "a2"] {
            assert_eq!(g.sign(x, v(w)), g.sign(y, v(w)));
        }
        for w in ["d1", "d2"] {
            assert_ne!(g.sign(x, v(w)), g.sign(y, v(w)));
        }
        assert!(!g.is_adjacent(x, y));
        assert_eq!(girth(g), Some(4));
    }

    #[test]
    fn gadget_clique_pairs() {
        let h = h_gadget();
        let forced = forced_distinct_pairs(&h.graph);
        let key: Vec<usize> = ["x", "y", "a1", "a2", "d1", "d2"].iter().map(|l| h.graph.vertex_by_label(l).unwrap()).collect();
        for (i, &u) in key.iter().enumerate() {
            for &v in &key[i + 1..] {
                assert!(forced.contains(&(u.min(v), u.max(v))));
            }
        }
    }

    #[test]
    fn x_family() {
        let x = named_graph("X_phi").unwrap();
        let t = x.template().unwrap();
        assert_eq!(t.ports().len(), 4);
        let xp = named_graph("X_phi_prime").unwrap().into_graph();
        assert_eq!(switch_at(x.graph(), &[2]).unwrap(), xp);
        let y = named_graph("Y_phi").unwrap();
        let yg = y.graph();
        assert_eq!(yg.sign(3, 4), Some(P));
        assert_eq!(y.template().unwrap().port("y"), Ok(4));
        assert!(matches!(named_graph("nope"), Err(Error::UnknownName(_))));
        for name in NAMES {
            assert!(named_graph(name).is_ok());
        }
    }

    #[test]
    fn pin_sizes_and_labels() {
        let h = h_gadget();
        let single = pin(&SignedGraph::empty(1), &h, &bind(&[("x", 0)])).unwrap();
        assert_eq!(single.order(), 8);
        assert_eq!(single.label(1), "y^{0}");
        let h1 = build_tower(1).unwrap();
        assert_eq!(h1.order(), 14);
        assert!(h1.vertex_by_label("a1^{x,a}").is_some());
        assert!(pin(&h.graph, &h, &bind(&[("x", 0), ("y", 0)])).is_err());
        assert!(pin(&h.graph, &h, &bind(&[("x", 0), ("y", 99)])).is_err());
        assert!(matches!(pin(&h.graph, &h, &bind(&[("z", 0)])), Err(Error::UnknownPort(_))));
    }

    #[test]
    fn tower_orders_and_planarity_bound() {
        let expect = [8, 14, 112, 32, 80, 640];
        for (level, &n) in expect.iter().enumerate() {
            let g = build_tower(level).unwrap();
            assert_eq!(g.order(), n, "level {level}");
            assert!(g.is_connected());
            assert_eq!(girth(&g), Some(4));
            // triangle-free planar graphs satisfy |E| <= 2|V| - 4
            assert!(g.edge_count() <= 2 * g.order() - 4);
            let labels = g.labels().unwrap();
            let mut sorted = labels.to_vec();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), n);
        }
        assert_eq!(build_tower(6), Err(Error::TowerLevel(6)));
    }
}
