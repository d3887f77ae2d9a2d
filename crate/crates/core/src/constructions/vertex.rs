//! Vertex labelings of lexicographic products.

use crate::distinguishing::{distinguishing_number_exact, is_distinguishing};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::VertexLabeling;
use crate::lexprod::ProductIndexer;
use crate::permgroup::sabidussi_equal;

use super::{compress, power_bounds_from};

/// Renames `sources[i]` to `targets[i]` inside one copy of `H`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ReplacementPattern {
    pub sources: Vec<u32>,
    pub targets: Vec<u32>,
}

/// `k`-subsets of `items` in lexicographic order.
pub(crate) fn subsets(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

impl ReplacementPattern {
    pub fn identity() -> Self {
        ReplacementPattern {
            sources: Vec::new(),
            targets: Vec::new(),
        }
    }

    /// The patterns whose largest new label is `dh + m`, sorted by
    /// `(|sources|, sources, targets)`.
    pub fn tier(m: u32, dh: u32) -> Vec<Self> {
        if m == 0 {
            return vec![Self::identity()];
        }
        let originals: Vec<u32> = (1..=dh).collect();
        let optional: Vec<u32> = (dh + 1..dh + m).collect();
        let mut out = Vec::new();
        for size in 1..=(dh as usize).min(m as usize) {
            for sources in subsets(&originals, size) {
                for mut targets in subsets(&optional, size - 1) {
                    targets.push(dh + m);
                    out.push(ReplacementPattern {
                        sources: sources.clone(),
                        targets,
                    });
                }
            }
        }
        out
    }

    /// The first `count` patterns, tier by tier.
    pub fn first(count: usize, dh: u32) -> Vec<Self> {
        let mut out = Vec::with_capacity(count);
        let mut m = 0;
        while out.len() < count {
            out.extend(Self::tier(m, dh));
            m += 1;
        }
        out.truncate(count);
        out
    }

    pub fn apply(&self, label: u32) -> u32 {
        match self.sources.iter().position(|&s| s == label) {
            Some(i) => self.targets[i],
            None => label,
        }
    }
}

fn require_distinguishing(g: &Graph, l: &VertexLabeling, which: &'static str) -> Result<()> {
    if !is_distinguishing(g, l)? {
        return Err(Error::NotDistinguishing(which));
    }
    Ok(())
}

/// One disjoint block of labels per copy: copy `i` gets `LH + i * max(LH)`.
/// Uses `|V(G)| max(LH)` labels; see [`super::thm21_bound`] for the
/// `D(G) D(H)` bound itself.
pub fn label_product_upper(
    g: &Graph,
    h: &Graph,
    lg: &VertexLabeling,
    lh: &VertexLabeling,
) -> Result<VertexLabeling> {
    require_distinguishing(g, lg, "LG")?;
    require_distinguishing(h, lh, "LH")?;
    let idx = ProductIndexer::new(g.n(), h.n())?;
    let block = lh.max_label();
    let labels = (0..idx.len())
        .map(|v| {
            let (a, x) = idx.decode(v);
            lh.get(x) + a as u32 * block
        })
        .collect();
    VertexLabeling::new(labels)
}

/// Copies of `H` whose `G`-vertices share a label of `LG` share a labeling;
/// the `c`-th class receives `LH` rewritten by the `c`-th replacement
/// pattern. Needs `Aut(G[H])` to be the wreath product.
pub fn label_thm22(
    g: &Graph,
    h: &Graph,
    lg: &VertexLabeling,
    lh: &VertexLabeling,
) -> Result<VertexLabeling> {
    if !sabidussi_equal(g, h) {
        return Err(Error::Precondition(
            "Aut(G[H]) is larger than the wreath product".into(),
        ));
    }
    require_distinguishing(g, lg, "LG")?;
    require_distinguishing(h, lh, "LH")?;
    let classes = compress(lg.labels());
    let base = compress(lh.labels());
    let dg = classes.iter().copied().max().unwrap_or(0);
    let dh = base.iter().copied().max().unwrap_or(0);
    let patterns = ReplacementPattern::first(dg as usize, dh);
    let idx = ProductIndexer::new(g.n(), h.n())?;
    let labels = (0..idx.len())
        .map(|v| {
            let (a, x) = idx.decode(v);
            patterns[classes[a] as usize - 1].apply(base[x])
        })
        .collect();
    VertexLabeling::new(labels)
}

/// A distinguishing labeling of `spider(n)` with `ceil(sqrt(n))` labels:
/// branch `j` carries the `j`-th ordered pair of labels.
pub fn spider_labeling(n: usize) -> Result<VertexLabeling> {
    let g = Graph::spider(n)?;
    let r = n.isqrt();
    let s = if r * r == n { r } else { r + 1 };
    let mut labels = vec![1; g.n()];
    for j in 0..n {
        labels[2 * j + 1] = (j / s) as u32 + 1;
        labels[2 * j + 2] = (j % s) as u32 + 1;
    }
    VertexLabeling::new(labels)
}

/// `(lower, upper)` bounds on `D(G^k)`, with `D(G)` computed exactly.
pub fn power_dnum_bounds(g: &Graph, k: u32) -> Result<(u32, u32)> {
    if k == 0 {
        return Err(Error::Precondition("power k must be at least 1".into()));
    }
    if !sabidussi_equal(g, g) {
        return Err(Error::Precondition(
            "Aut(G[G]) is larger than the wreath product".into(),
        ));
    }
    let (dg, _) = distinguishing_number_exact(g)?;
    Ok(power_bounds_from(dg, k))
}
