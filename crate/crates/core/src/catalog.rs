//! Connected graphs on few vertices, one per isomorphism class.

use std::collections::BTreeMap;

use crate::autosearch::canonical_form;
use crate::graph::Graph;

fn sort_key(g: &Graph) -> (usize, usize, Vec<(usize, usize)>) {
    (g.n(), g.edge_count(), g.edges().collect())
}

/// All connected graphs with `1..=max_n` vertices up to isomorphism, each in
/// canonical form, ordered by vertex count, edge count, then edge list.
///
/// Every connected graph on `k + 1` vertices arises from one on `k` vertices
/// by adding a vertex adjacent to a nonempty set, since removing a leaf of a
/// spanning tree keeps it connected.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    if max_n == 0 {
        return Vec::new();
    }
    let mut all = vec![Graph::empty(1)];
    let mut layer = vec![Graph::empty(1)];
    for k in 1..max_n {
        let mut next = BTreeMap::new();
        for g in &layer {
            for mask in 1u32..(1 << k) {
                let mut edges: Vec<(usize, usize)> = g.edges().collect();
                edges.extend((0..k).filter(|&v| mask >> v & 1 == 1).map(|v| (v, k)));
                let h = canonical_form(&Graph::new(k + 1, edges).expect("valid edges"));
                next.entry(sort_key(&h)).or_insert(h);
            }
        }
        layer = next.into_values().collect();
        all.extend(layer.iter().cloned());
    }
    all
}
