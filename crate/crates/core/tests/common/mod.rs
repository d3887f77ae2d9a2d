//! Brute-force oracles and random graph generators shared by the
//! integration tests.
#![allow(dead_code)]

use lexidis::Graph;
use rand::Rng;

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

pub fn is_automorphism(g: &Graph, p: &[usize]) -> bool {
    g.edges().all(|(u, v)| g.has_edge(p[u], p[v]))
}

/// Aut(G) by testing every bijection.
pub fn naive_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    all_permutations(g.n())
        .into_iter()
        .filter(|p| is_automorphism(g, p))
        .collect()
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// Whether `p` sends some edge to a different edge.
pub fn moves_an_edge(g: &Graph, p: &[usize]) -> bool {
    g.edges().any(|(u, v)| {
        let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
        (a, b) != (u, v)
    })
}

pub fn preserves_vertex_colors<T: PartialEq>(p: &[usize], colors: &[T]) -> bool {
    (0..p.len()).all(|v| colors[p[v]] == colors[v])
}

/// `labels` in canonical edge order.
pub fn preserves_edge_labels(g: &Graph, p: &[usize], labels: &[u32]) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    edges.iter().zip(labels).all(|(&(u, v), &l)| {
        let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
        let k = edges.binary_search(&(a, b)).unwrap();
        labels[k] == l
    })
}

pub fn naive_has_vertex_preserving(auts: &[Vec<usize>], colors: &[u64]) -> bool {
    auts.iter()
        .any(|p| !is_identity(p) && preserves_vertex_colors(p, colors))
}

pub fn naive_has_edge_preserving(g: &Graph, auts: &[Vec<usize>], labels: &[u32]) -> bool {
    auts.iter()
        .any(|p| moves_an_edge(g, p) && preserves_edge_labels(g, p, labels))
}

/// Every word of length `len` over `1..=d`.
pub fn all_words(len: usize, d: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (d as u64).pow(len as u32);
    (0..total).map(move |mut w| {
        let mut out = vec![1; len];
        for slot in out.iter_mut().rev() {
            *slot = (w % d as u64) as u32 + 1;
            w /= d as u64;
        }
        out
    })
}

/// D(G) by exhausting all labelings.
pub fn brute_dnum(g: &Graph) -> u32 {
    let auts = naive_automorphisms(g);
    (1..=g.n().max(1) as u32)
        .find(|&d| {
            all_words(g.n(), d).any(|w| {
                let c: Vec<u64> = w.iter().map(|&x| x as u64).collect();
                !naive_has_vertex_preserving(&auts, &c)
            })
        })
        .unwrap()
}

/// D'(G) by exhausting all edge labelings.
pub fn brute_dindex(g: &Graph) -> u32 {
    let auts = naive_automorphisms(g);
    (1..=g.edge_count() as u32)
        .find(|&d| all_words(g.edge_count(), d).any(|w| !naive_has_edge_preserving(g, &auts, &w)))
        .unwrap()
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let bits: Vec<bool> = (0..n * n.saturating_sub(1) / 2).map(|_| rng.gen_bool(p)).collect();
    graph_from_bits(n, &bits)
}

/// A random spanning tree plus independent extra edges.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p = rng.gen_range(0.0..0.7);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}
