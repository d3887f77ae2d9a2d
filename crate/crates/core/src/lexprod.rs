//! Lexicographic products `G[H]` and right-nested powers `G[G[...]]`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Bijection `(g, h) <-> g * nh + h` between product pairs and vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductIndexer {
    ng: usize,
    nh: usize,
}

impl ProductIndexer {
    pub fn new(ng: usize, nh: usize) -> Result<Self> {
        ng.checked_mul(nh).ok_or(Error::SizeOverflow(ng, nh))?;
        Ok(ProductIndexer { ng, nh })
    }

    pub fn ng(&self) -> usize {
        self.ng
    }

    pub fn nh(&self) -> usize {
        self.nh
    }

    pub fn len(&self) -> usize {
        self.ng * self.nh
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn encode(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.ng && h < self.nh);
        g * self.nh + h
    }

    #[inline]
    pub fn decode(&self, v: usize) -> (usize, usize) {
        (v / self.nh, v % self.nh)
    }
}

/// `(a, x) ~ (b, y)` iff `ab ∈ E(G)`, or `a = b` and `xy ∈ E(H)`.
pub fn lex_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let idx = ProductIndexer::new(g.n(), h.n())?;
    let mut adj = vec![Vec::new(); idx.len()];
    for a in 0..g.n() {
        for x in 0..h.n() {
            let list = &mut adj[idx.encode(a, x)];
            list.reserve(h.degree(x) + g.degree(a) * h.n());
            for &y in h.adjacent(x) {
                list.push(idx.encode(a, y));
            }
            for &b in g.adjacent(a) {
                list.extend((0..h.n()).map(|y| idx.encode(b, y)));
            }
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// `G^1 = G`, `G^k = G[G^{k-1}]`.
pub fn lex_power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Precondition("lexicographic power needs k >= 1".into()));
    }
    let mut acc = g.clone();
    for _ in 1..k {
        acc = lex_product(g, &acc)?;
    }
    Ok(acc)
}

/// Degree of `(g, h)` in `G[H]`: `deg_H h + |V(H)| deg_G g`.
pub fn product_degree(g: &Graph, h: &Graph, gv: usize, hv: usize) -> Result<usize> {
    if gv >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: gv, n: g.n() });
    }
    if hv >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: hv, n: h.n() });
    }
    Ok(h.degree(hv) + h.n() * g.degree(gv))
}

/// `|V(G)||E(H)| + |E(G)||V(H)|^2`.
pub fn product_edge_count(g: &Graph, h: &Graph) -> usize {
    g.n() * h.edge_count() + g.edge_count() * h.n() * h.n()
}
