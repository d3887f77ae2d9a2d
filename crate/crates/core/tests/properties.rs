mod common;

use std::collections::BTreeSet;

use lexidis::autosearch::{
    automorphism_group, canonical_form, enumerate_automorphisms, find_preserving,
    find_preserving_edges, ColoredGraph,
};
use lexidis::catalog::connected_graphs;
use lexidis::constructions::spider_dnum_k2;
use lexidis::distinguishing::{
    distinguishing_index_exact, distinguishing_number_exact, is_distinguishing,
    is_distinguishing_edges,
};
use lexidis::io::{parse_graph, write_graph, GraphFormat};
use lexidis::lexprod::{lex_product, product_edge_count, ProductIndexer};
use lexidis::permgroup::{closure, sij_generators, wreath_generators};
use lexidis::{EdgeLabeling, GeneratorSet, Graph, Permutation, VertexLabeling};
use num_bigint::BigUint;
use proptest::prelude::*;

use common::*;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_colored(max_n: usize, max_colors: u64) -> impl Strategy<Value = (Graph, Vec<u64>)> {
    arb_graph(1, max_n).prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(1..=max_colors, n))
    })
}

fn arb_edge_labeled(max_n: usize, max_labels: u32) -> impl Strategy<Value = (Graph, Vec<u32>)> {
    arb_graph(1, max_n).prop_flat_map(move |g| {
        let m = g.edge_count();
        (Just(g), proptest::collection::vec(1..=max_labels, m))
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(0, 9)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
    }

    #[test]
    fn product_formulas(g in arb_graph(1, 6), h in arb_graph(1, 6)) {
        let p = lex_product(&g, &h).unwrap();
        prop_assert_eq!(p.n(), g.n() * h.n());
        prop_assert_eq!(p.edge_count(), product_edge_count(&g, &h));
        let idx = ProductIndexer::new(g.n(), h.n()).unwrap();
        for v in 0..p.n() {
            let (a, x) = idx.decode(v);
            prop_assert_eq!(p.degree(v), h.degree(x) + h.n() * g.degree(a));
        }
    }

    #[test]
    fn product_is_associative(g in arb_graph(1, 3), h in arb_graph(1, 3), k in arb_graph(1, 3)) {
        let left = lex_product(&lex_product(&g, &h).unwrap(), &k).unwrap();
        let right = lex_product(&g, &lex_product(&h, &k).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        // canonical forms visit every leaf, so only small products
        if left.n() <= 8 {
            prop_assert_eq!(canonical_form(&left), canonical_form(&right));
        }
    }

    #[test]
    fn canonical_form_is_invariant((g, perm) in arb_graph(1, 7).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_perm(n))
    })) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn vertex_search_matches_brute_force((g, colors) in arb_colored(7, 3)) {
        let auts = naive_automorphisms(&g);
        let c = ColoredGraph::new(&g, colors.clone()).unwrap();
        let (found, stats) = find_preserving(&c, true);
        prop_assert_eq!(found.is_some(), naive_has_vertex_preserving(&auts, &colors));
        prop_assert_eq!(found.is_some(), stats.found);
        if let Some(s) = found {
            prop_assert!(!s.is_identity());
            prop_assert!(is_automorphism(&g, s.image()));
            prop_assert!(preserves_vertex_colors(s.image(), &colors));
        }
    }

    #[test]
    fn edge_search_matches_brute_force((g, labels) in arb_edge_labeled(6, 3)) {
        let auts = naive_automorphisms(&g);
        let l = EdgeLabeling::from_edge_order(&g, &labels).unwrap();
        let found = find_preserving_edges(&g, &l, true).unwrap();
        prop_assert_eq!(found.is_some(), naive_has_edge_preserving(&g, &auts, &labels));
        if let Some(s) = found {
            prop_assert!(is_automorphism(&g, s.image()));
            prop_assert!(moves_an_edge(&g, s.image()));
            prop_assert!(preserves_edge_labels(&g, s.image(), &labels));
        }
    }

    #[test]
    fn enumeration_is_the_whole_group(g in arb_graph(0, 7)) {
        let naive: BTreeSet<Vec<usize>> = naive_automorphisms(&g).into_iter().collect();
        let found = enumerate_automorphisms(&g, 10_000).within().unwrap();
        let set: BTreeSet<Vec<usize>> = found.iter().map(|p| p.image().to_vec()).collect();
        prop_assert_eq!(set.len(), found.len());
        prop_assert_eq!(&set, &naive);
        for a in found.iter().take(8) {
            prop_assert!(set.contains(a.inverse().image()));
            for b in found.iter().take(8) {
                prop_assert!(set.contains(a.compose(b).unwrap().image()));
            }
        }
    }

    #[test]
    fn group_order_matches_enumeration((g, colors) in arb_colored(7, 2)) {
        let c = ColoredGraph::new(&g, colors.clone()).unwrap();
        let grp = automorphism_group(&c);
        let count = naive_automorphisms(&g)
            .iter()
            .filter(|p| preserves_vertex_colors(p, &colors))
            .count();
        prop_assert_eq!(&grp.order, &BigUint::from(count));
        prop_assert_eq!(grp.generators.order(), grp.order);
    }

    #[test]
    fn closure_agrees_with_chain(gens in (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(arb_perm(n), 0..3).prop_map(move |v| (n, v))
    })) {
        let (n, images) = gens;
        let perms = images.into_iter().map(|p| Permutation::new(p).unwrap()).collect();
        let set = GeneratorSet::new(n, perms).unwrap();
        let elements = closure(&set, 1000).within().unwrap();
        prop_assert_eq!(set.order(), BigUint::from(elements.len()));
    }

    #[test]
    fn product_generators_are_automorphisms(g in arb_graph(1, 4), h in arb_graph(1, 4)) {
        let p = lex_product(&g, &h).unwrap();
        let ag = automorphism_group(&ColoredGraph::uniform(&g)).generators;
        let ah = automorphism_group(&ColoredGraph::uniform(&h)).generators;
        let w = wreath_generators(&ag, &ah, g.n(), h.n()).unwrap();
        for s in w.gens().iter().chain(sij_generators(&g, &h).gens()) {
            prop_assert!(s.is_automorphism(&p));
        }
    }

    #[test]
    fn formats_round_trip(g in arb_graph(0, 12)) {
        for f in [GraphFormat::EdgeList, GraphFormat::Graph6] {
            prop_assert_eq!(parse_graph(&write_graph(&g, f)).unwrap(), g.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn distinguishing_number_is_minimal(g in arb_graph(1, 6)) {
        let (d, w) = distinguishing_number_exact(&g).unwrap();
        prop_assert_eq!(d, brute_dnum(&g));
        prop_assert!(is_distinguishing(&g, &w).unwrap());
        prop_assert_eq!(w.max_label(), d);
        // refining a distinguishing labeling keeps it distinguishing
        let mut more = w.labels().to_vec();
        more[g.n() - 1] = d + 1;
        prop_assert!(is_distinguishing(&g, &VertexLabeling::new(more).unwrap()).unwrap());
    }

    #[test]
    fn distinguishing_index_is_minimal(g in arb_graph(2, 5).prop_filter("needs an edge", |g| g.edge_count() > 0)) {
        let (d, w) = distinguishing_index_exact(&g).unwrap();
        prop_assert_eq!(d, brute_dindex(&g));
        prop_assert!(is_distinguishing_edges(&g, &w).unwrap());
        let mut more = w.in_edge_order(&g).unwrap();
        let last = more.len() - 1;
        more[last] = d + 1;
        prop_assert!(is_distinguishing_edges(&g, &EdgeLabeling::from_edge_order(&g, &more).unwrap()).unwrap());
    }
}

#[test]
fn spider_closed_form_matches_least_r() {
    let mut r: u64 = 2;
    for n in 3..=1_000_000u64 {
        while (r * (r - 1) / 2).pow(2) < n {
            r += 1;
        }
        assert_eq!(u64::from(spider_dnum_k2(n).unwrap()), r, "n = {n}");
    }
}

#[test]
fn trivial_group_iff_distinguishing_number_one() {
    for g in connected_graphs(6) {
        let trivial = enumerate_automorphisms(&g, 1).within().is_some();
        assert_eq!(distinguishing_number_exact(&g).unwrap().0 == 1, trivial);
    }
}
