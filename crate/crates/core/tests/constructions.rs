use sghom::gen::{
    attach_edge_gadgets, attach_vertex_gadgets, build_tower, complete_with_negative, enumerate_cubic_graphs,
    enumerate_signatures_mod_switching, find_configuration, named_graph, star_construction, ConfigPattern,
};
use sghom::sgcore::{forced_distinct_pairs, girth, is_switch_equivalent};
use sghom::solver::{chi_sp, has_clique_minor};
use sghom::{Sign, SignedGraph};

fn corpus() -> Vec<SignedGraph> {
    vec![
        SignedGraph::empty(1),
        SignedGraph::new(2, &[(0, 1, Sign::Positive)]).unwrap(),
        SignedGraph::new(2, &[(0, 1, Sign::Negative)]).unwrap(),
        complete_with_negative(3, &[(0, 1)]),
        SignedGraph::new(3, &[(0, 1, Sign::Positive), (1, 2, Sign::Negative)]).unwrap(),
        SignedGraph::empty(3),
    ]
}

#[test]
fn star_doubles_sp_chromatic_number() {
    for g in corpus() {
        let base = chi_sp(&g, 6).unwrap().value;
        if base > 2 {
            continue;
        }
        let s = star_construction(&g);
        assert_eq!(chi_sp(&s, 7).unwrap().value, 2 * base + 1, "{g:?}");
    }
}

#[test]
fn star_contains_two_induced_copies() {
    for g in corpus() {
        let n = g.order();
        let s = star_construction(&g);
        assert_eq!(s.order(), 2 * n + 1);
        assert_eq!(s.edge_count(), 2 * g.edge_count() + 2 * n);
        assert_eq!(s.degree(2 * n), 2 * n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    assert_eq!(s.sign(u, v), g.sign(u, v));
                    assert_eq!(s.sign(u + n, v + n), g.sign(u, v));
                    assert!(!s.is_adjacent(u, v + n));
                }
            }
        }
    }
}

#[test]
fn star_keeps_minor_freeness_one_level_up() {
    for g in corpus() {
        for t in 1..=3 {
            if !has_clique_minor(&g, t + 1).unwrap() {
                assert!(!has_clique_minor(&star_construction(&g).underlying(), t + 2).unwrap());
            }
        }
    }
}

#[test]
fn attachment_counts() {
    let p = named_graph("P5_M").unwrap().into_graph();
    let k3 = complete_with_negative(3, &[]);
    let v = attach_vertex_gadgets(&k3, &p);
    assert_eq!(v.order(), 3 * (1 + 2 * 6));
    let e = attach_edge_gadgets(&k3, &p);
    assert_eq!(e.order(), 3 + 4 * 3 * 6);
    assert_eq!(e.edge_count(), 3 + 12 * (5 + 2 * 6));
}

#[test]
fn tower_gadget_pairs_are_forced_apart() {
    let h0 = build_tower(0).unwrap();
    let forced = forced_distinct_pairs(&h0);
    let key: Vec<usize> = ["x", "y", "a1", "a2", "d1", "d2"].iter().map(|l| h0.vertex_by_label(l).unwrap()).collect();
    let mut count = 0;
    for (i, &u) in key.iter().enumerate() {
        for &v in &key[i + 1..] {
            assert!(forced.contains(&(u.min(v), u.max(v))));
            count += 1;
        }
    }
    assert_eq!(count, 15);
    for level in 0..=5 {
        assert_eq!(girth(&build_tower(level).unwrap()), Some(4));
    }
}

#[test]
fn signature_classes_of_small_cubic_graphs() {
    for g in enumerate_cubic_graphs(6).unwrap() {
        let reps: Vec<_> = enumerate_signatures_mod_switching(&g).collect();
        assert_eq!(reps.len(), 1 << (9 - 6 + 1));
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!is_switch_equivalent(a, b).unwrap());
            }
        }
    }
}

#[test]
fn small_cubic_graphs_contain_a_configuration() {
    let patterns = ConfigPattern::all_cubic();
    for n in [6, 8, 10] {
        for g in enumerate_cubic_graphs(n).unwrap() {
            assert!(patterns.iter().any(|p| find_configuration(&g, p).is_some()));
        }
    }
}
