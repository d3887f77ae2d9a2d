//! Edge labelings of lexicographic products.

use std::collections::BTreeSet;

use crate::distinguishing::is_distinguishing_edges;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::EdgeLabeling;
use crate::lexprod::{lex_power, ProductIndexer};
use crate::permgroup::sabidussi_equal;

use super::{compress, star_root, t35_tuples};

fn require_distinguishing(g: &Graph, l: &EdgeLabeling, which: &'static str) -> Result<()> {
    if !is_distinguishing_edges(g, l)? {
        return Err(Error::NotDistinguishing(which));
    }
    Ok(())
}

fn require_sabidussi(g: &Graph, h: &Graph) -> Result<()> {
    if !sabidussi_equal(g, h) {
        return Err(Error::Precondition(
            "Aut(G[H]) is larger than the wreath product".into(),
        ));
    }
    Ok(())
}

fn require_connected(g: &Graph, name: &str) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Precondition(format!("{name} must be connected")));
    }
    Ok(())
}

fn is_k2(g: &Graph) -> bool {
    g.n() == 2 && g.edge_count() == 1
}

/// Copies of `H` keep `LH`; every edge between copies `a` and `b` takes
/// `LG(ab)`.
pub fn edge_label_thm31(
    g: &Graph,
    h: &Graph,
    lg: &EdgeLabeling,
    lh: &EdgeLabeling,
) -> Result<EdgeLabeling> {
    if is_k2(h) {
        return Err(Error::Precondition("H must not be K_2".into()));
    }
    // the swap of K_2 moves no edge, yet swapping two copies of H does
    if is_k2(g) {
        return Err(Error::Precondition("G must not be K_2".into()));
    }
    require_connected(g, "G")?;
    require_connected(h, "H")?;
    require_sabidussi(g, h)?;
    lg.check_graph(g)?;
    lh.check_graph(h)?;
    require_distinguishing(g, lg, "LG")?;
    require_distinguishing(h, lh, "LH")?;
    let idx = ProductIndexer::new(g.n(), h.n())?;
    let mut out = EdgeLabeling::default();
    for a in 0..g.n() {
        for ((x, y), l) in lh.iter() {
            out.insert(idx.encode(a, x), idx.encode(a, y), l);
        }
    }
    for ((a, b), l) in lg.iter() {
        for x in 0..h.n() {
            for y in 0..h.n() {
                out.insert(idx.encode(a, x), idx.encode(b, y), l);
            }
        }
    }
    Ok(out)
}

/// `K_2[H]`: copy 1 all 1, copy 2 all 2; from `(x_1, y_j)` the edges to
/// `(x_2, y_1), ..., (x_2, y_{j-1})` get 2 and the rest 1.
pub fn edge_label_k2h(h: &Graph) -> Result<EdgeLabeling> {
    if h.n() < 3 {
        return Err(Error::Precondition("H needs at least 3 vertices".into()));
    }
    require_connected(h, "H")?;
    let idx = ProductIndexer::new(2, h.n())?;
    let mut out = EdgeLabeling::default();
    for (x, y) in h.edges() {
        out.insert(idx.encode(0, x), idx.encode(0, y), 1);
        out.insert(idx.encode(1, x), idx.encode(1, y), 2);
    }
    for j in 0..h.n() {
        for k in 0..h.n() {
            out.insert(idx.encode(0, j), idx.encode(1, k), if k < j { 2 } else { 1 });
        }
    }
    Ok(out)
}

/// Columns of cross-edge labels, one per pendant copy of a star product,
/// optionally paired with a label for each pendant copy's own edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LMatrix {
    columns: Vec<Vec<u32>>,
    pendant_edge: Vec<u32>,
}

impl LMatrix {
    pub fn new(columns: Vec<Vec<u32>>) -> Result<Self> {
        Self::with_pendant_edges(columns, Vec::new())
    }

    /// Column `j` together with `pendant_edge[j]` must be distinct from
    /// every other such pair.
    pub fn with_pendant_edges(columns: Vec<Vec<u32>>, pendant_edge: Vec<u32>) -> Result<Self> {
        if let Some(first) = columns.first() {
            if columns.iter().any(|c| c.len() != first.len()) {
                return Err(Error::Precondition("columns differ in length".into()));
            }
        }
        if !pendant_edge.is_empty() && pendant_edge.len() != columns.len() {
            return Err(Error::Precondition("one pendant edge label per column".into()));
        }
        let keys: BTreeSet<(Option<&u32>, &Vec<u32>)> = columns
            .iter()
            .enumerate()
            .map(|(j, c)| (pendant_edge.get(j), c))
            .collect();
        if keys.len() != columns.len() {
            return Err(Error::Precondition("columns are not distinct".into()));
        }
        Ok(LMatrix {
            columns,
            pendant_edge,
        })
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Labels of the pendant copies' edge; empty when copies keep `LH`.
    pub fn pendant_edges(&self) -> &[u32] {
        &self.pendant_edge
    }

    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }
}

/// Swap of the pendant `P_2`: `(a, b, c, d) -> (b, a, d, c)`.
fn pendant_swap(c: &[u32; 4]) -> [u32; 4] {
    [c[1], c[0], c[3], c[2]]
}

/// Number of pendant copies `K_{1,n}[K_2]` can separate with `labels`
/// labels: pendant edge label times orbit of the column under the pendant
/// swap, excluding swap-fixed columns and one orbit reserved against the
/// center swap.
pub fn star_capacity_k2(labels: u32) -> u128 {
    let l = u128::from(labels);
    (l * (l.pow(4) - l.pow(2)) / 2).saturating_sub(1)
}

/// Columns for `K_{1,n}[H]` with `|V(H)| = m`.
///
/// For `m >= 3` the columns are the first `n` words of length `m^2` over
/// `1..=d`, `d = star_root(n, m)`. For `m = 2` the pendant copies can be
/// flipped, so each copy gets a distinct pair (edge label, flip orbit of
/// its column), starting from column `(1,1,1,2)`; flip-fixed columns and
/// the orbit of `(1,2,1,1)` are never used.
pub fn star_columns(n: usize, m: usize, min_labels: u32) -> Result<LMatrix> {
    if m >= 3 {
        let d = star_root(n as u64, m as u32).max(1);
        let len = m * m;
        let columns = (0..n)
            .map(|j| {
                let mut col = vec![1; len];
                let mut rest = j;
                for slot in col.iter_mut().rev() {
                    *slot = (rest % d as usize) as u32 + 1;
                    rest /= d as usize;
                }
                col
            })
            .collect();
        return LMatrix::new(columns);
    }
    if m != 2 {
        return Err(Error::Precondition("H needs at least 2 vertices".into()));
    }
    let mut labels = min_labels.max(2);
    while star_capacity_k2(labels) < n as u128 {
        labels += 1;
    }
    let mut columns = Vec::with_capacity(n);
    let mut edge = Vec::with_capacity(n);
    'outer: for e in 1..=labels {
        for w in 0..labels.pow(4) {
            let col = [
                w / labels.pow(3) + 1,
                w / labels.pow(2) % labels + 1,
                w / labels % labels + 1,
                w % labels + 1,
            ];
            let flipped = pendant_swap(&col);
            if flipped <= col || (e == 1 && col == [1, 2, 1, 1]) {
                continue;
            }
            columns.push(col.to_vec());
            edge.push(e);
            if columns.len() == n {
                break 'outer;
            }
        }
    }
    LMatrix::with_pendant_edges(columns, edge)
}

/// `K_{1,n}[H]`: every copy of `H` carries `LH`; the `m^2` edges between the
/// center copy and pendant copy `j` are labeled by column `j` of
/// [`star_columns`], row `p m + q` for the edge `(center, h_p)(j, h_q)`.
pub fn edge_label_star(n: usize, h: &Graph, lh: &EdgeLabeling) -> Result<EdgeLabeling> {
    if n < 2 {
        return Err(Error::Precondition("the star needs at least 2 leaves".into()));
    }
    let m = h.n();
    if m < 2 {
        return Err(Error::Precondition("H needs at least 2 vertices".into()));
    }
    require_connected(h, "H")?;
    lh.check_graph(h)?;
    require_distinguishing(h, lh, "LH")?;
    let matrix = star_columns(n, m, lh.max_label())?;
    let pendant_edge = matrix.pendant_edges();
    let idx = ProductIndexer::new(n + 1, m)?;
    let mut out = EdgeLabeling::default();
    for a in 0..=n {
        for ((x, y), l) in lh.iter() {
            let l = if a > 0 && !pendant_edge.is_empty() {
                pendant_edge[a - 1]
            } else {
                l
            };
            out.insert(idx.encode(a, x), idx.encode(a, y), l);
        }
    }
    for (j, col) in matrix.columns().iter().enumerate() {
        for p in 0..m {
            for q in 0..m {
                out.insert(idx.encode(0, p), idx.encode(j + 1, q), col[p * m + q]);
            }
        }
    }
    Ok(out)
}

/// `P_n[H]`: copy edges 1; from `(x_i, h_j)` into copy `i + 1` the first
/// `j - 1` edges get 2 and the rest 1, reversed on the last layer.
pub fn edge_label_path(n: usize, h: &Graph) -> Result<EdgeLabeling> {
    if n < 3 {
        return Err(Error::Precondition("the path needs at least 3 vertices".into()));
    }
    require_connected(h, "H")?;
    let m = h.n();
    let idx = ProductIndexer::new(n, m)?;
    let mut out = EdgeLabeling::default();
    for a in 0..n {
        for (x, y) in h.edges() {
            out.insert(idx.encode(a, x), idx.encode(a, y), 1);
        }
    }
    for a in 0..n - 1 {
        let last = a == n - 2;
        for x in 0..m {
            for y in 0..m {
                let head = y < x;
                let l = if head != last { 2 } else { 1 };
                out.insert(idx.encode(a, x), idx.encode(a + 1, y), l);
            }
        }
    }
    Ok(out)
}

/// The four edges between copies `gi < gj` of `P_2` in `G[P_2]`, ordered
/// `(gi,x1)(gj,x1), (gi,x1)(gj,x2), (gi,x2)(gj,x1), (gi,x2)(gj,x2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeBundle {
    pub edges: [(usize, usize); 4],
}

impl EdgeBundle {
    pub fn new(gi: usize, gj: usize) -> Result<Self> {
        if gi >= gj {
            return Err(Error::Precondition("bundle needs gi < gj".into()));
        }
        let v = |g: usize, x: usize| 2 * g + x;
        Ok(EdgeBundle {
            edges: [
                (v(gi, 0), v(gj, 0)),
                (v(gi, 0), v(gj, 1)),
                (v(gi, 1), v(gj, 0)),
                (v(gi, 1), v(gj, 1)),
            ],
        })
    }
}

/// `G[P_2]`: copy edges 1; the bundle of every edge in class `c` of `LG`
/// gets the `c`-th tuple of the tier order.
pub fn edge_label_gp2(g: &Graph, lg: &EdgeLabeling) -> Result<EdgeLabeling> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("G needs at least one edge".into()));
    }
    let p2 = Graph::path(2)?;
    require_sabidussi(g, &p2)?;
    require_connected(g, "G")?;
    let order = lg.in_edge_order(g)?;
    require_distinguishing(g, lg, "LG")?;
    let classes = compress(&order);
    let count = *classes.iter().max().unwrap() as usize;
    let mut tuples = Vec::with_capacity(count);
    let mut m = 2;
    while tuples.len() < count {
        tuples.extend(t35_tuples(m));
        m += 1;
    }
    let mut out = EdgeLabeling::default();
    for a in 0..g.n() {
        out.insert(2 * a, 2 * a + 1, 1);
    }
    for ((a, b), c) in g.edges().zip(classes) {
        let bundle = EdgeBundle::new(a, b)?;
        for (&(u, v), &l) in bundle.edges.iter().zip(&tuples[c as usize - 1]) {
            out.insert(u, v, l);
        }
    }
    Ok(out)
}

/// `G[H]` with `|V(G)| <= |E(H)| + 1`: copy `i` has its first `i - 1` edges
/// labeled 1 and the rest 2; for a `G`-edge `ab` with `a < b`, the edges
/// from `(a, h_p)` to the first `p - 1` vertices of copy `b` get 2, the rest 1.
pub fn edge_label_small_g(g: &Graph, h: &Graph) -> Result<EdgeLabeling> {
    require_connected(g, "G")?;
    require_connected(h, "H")?;
    require_sabidussi(g, h)?;
    if g.n() > h.edge_count() + 1 {
        return Err(Error::Precondition(format!(
            "|V(G)| = {} exceeds |E(H)| + 1 = {}",
            g.n(),
            h.edge_count() + 1
        )));
    }
    let idx = ProductIndexer::new(g.n(), h.n())?;
    let mut out = EdgeLabeling::default();
    for a in 0..g.n() {
        for (t, (x, y)) in h.edges().enumerate() {
            out.insert(idx.encode(a, x), idx.encode(a, y), if t < a { 1 } else { 2 });
        }
    }
    for (a, b) in g.edges() {
        for x in 0..h.n() {
            for y in 0..h.n() {
                out.insert(idx.encode(a, x), idx.encode(b, y), if y < x { 2 } else { 1 });
            }
        }
    }
    Ok(out)
}

/// Two labels for `G^k = G[G^{k-1}]`, by [`edge_label_small_g`] with
/// `H = G^{k-1}`.
pub fn edge_label_power(g: &Graph, k: usize) -> Result<EdgeLabeling> {
    if k < 2 {
        return Err(Error::Precondition("power k must be at least 2".into()));
    }
    require_sabidussi(g, g)?;
    let h = lex_power(g, k - 1)?;
    edge_label_small_g(g, &h)
}
