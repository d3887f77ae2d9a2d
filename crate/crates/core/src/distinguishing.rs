//! Exact distinguishing numbers and indices by minimal-d search.
//!
//! Labelings are enumerated as restricted-growth sequences: label `k + 1`
//! may appear only after label `k`. A partial labeling is abandoned as soon
//! as some nontrivial automorphism preserves it while fixing every unlabeled
//! item, since that automorphism then preserves every completion.

use crate::autosearch::{find_preserving, find_preserving_edges, ColoredGraph, Subdivision};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{EdgeLabeling, VertexLabeling};

/// Result of a search bounded by `d_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<L> {
    Found { d: u32, witness: L },
    /// No distinguishing labeling with at most `d_max` labels.
    NotFound { d_max: u32 },
}

impl<L> Outcome<L> {
    pub fn value(&self) -> Option<u32> {
        match self {
            Outcome::Found { d, .. } => Some(*d),
            Outcome::NotFound { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&L> {
        match self {
            Outcome::Found { witness, .. } => Some(witness),
            Outcome::NotFound { .. } => None,
        }
    }
}

pub fn is_distinguishing(g: &Graph, l: &VertexLabeling) -> Result<bool> {
    l.check_graph(g)?;
    let colors = l.labels().iter().map(|&x| u64::from(x)).collect();
    let c = ColoredGraph::new(g, colors)?;
    Ok(find_preserving(&c, true).0.is_none())
}

pub fn is_distinguishing_edges(g: &Graph, l: &EdgeLabeling) -> Result<bool> {
    Ok(find_preserving_edges(g, l, true)?.is_none())
}

/// Depth-first search over restricted-growth sequences of length `len`
/// using exactly `d` labels, in lexicographic order.
struct RgsSearch<'a> {
    len: usize,
    d: u32,
    labels: Vec<u32>,
    /// True when the prefix (unlabeled items fixed) has a preserving
    /// nontrivial automorphism.
    preserved: &'a mut dyn FnMut(&[u64]) -> bool,
}

impl RgsSearch<'_> {
    fn colors(&self) -> Vec<u64> {
        let d = u64::from(self.d);
        (0..self.len)
            .map(|i| match self.labels.get(i) {
                Some(&l) => u64::from(l),
                None => d + 1 + i as u64,
            })
            .collect()
    }

    fn run(&mut self, used: u32) -> bool {
        let k = self.labels.len();
        if (self.len - k) < (self.d - used) as usize {
            return false;
        }
        if k > 0 {
            let colors = self.colors();
            if (self.preserved)(&colors) {
                return false;
            }
        }
        if k == self.len {
            return used == self.d;
        }
        for l in 1..=(used + 1).min(self.d) {
            self.labels.push(l);
            if self.run(used.max(l)) {
                return true;
            }
            self.labels.pop();
        }
        false
    }
}

fn minimal_search(
    len: usize,
    d_max: u32,
    preserved: &mut dyn FnMut(&[u64]) -> bool,
) -> Option<(u32, Vec<u32>)> {
    for d in 1..=d_max {
        if len == 0 {
            return (d == 1 && !preserved(&[])).then(|| (1, Vec::new()));
        }
        let mut s = RgsSearch {
            len,
            d,
            labels: Vec::with_capacity(len),
            preserved: &mut *preserved,
        };
        if s.run(0) {
            return Some((d, s.labels));
        }
    }
    None
}

/// Least `d <= d_max` with a distinguishing vertex labeling by `d` labels,
/// with the lexicographically least witness.
pub fn distinguishing_number(g: &Graph, d_max: u32) -> Result<Outcome<VertexLabeling>> {
    if d_max == 0 {
        return Err(Error::Precondition("d_max must be at least 1".into()));
    }
    let mut preserved = |colors: &[u64]| {
        let c = ColoredGraph::new(g, colors.to_vec()).expect("colors sized to graph");
        find_preserving(&c, true).0.is_some()
    };
    Ok(match minimal_search(g.n(), d_max, &mut preserved) {
        Some((d, labels)) => Outcome::Found {
            d,
            witness: VertexLabeling::new(labels)?,
        },
        None => Outcome::NotFound { d_max },
    })
}

/// Least `d <= d_max` with a distinguishing edge labeling by `d` labels.
/// Automorphisms that fix every edge count as trivial, so `D'(K_2) = 1`.
pub fn distinguishing_index(g: &Graph, d_max: u32) -> Result<Outcome<EdgeLabeling>> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition(
            "distinguishing index needs at least one edge".into(),
        ));
    }
    if d_max == 0 {
        return Err(Error::Precondition("d_max must be at least 1".into()));
    }
    let sub = Subdivision::new(g);
    let mut preserved = |colors: &[u64]| sub.find(colors).0.is_some();
    Ok(match minimal_search(g.edge_count(), d_max, &mut preserved) {
        Some((d, labels)) => Outcome::Found {
            d,
            witness: EdgeLabeling::from_edge_order(g, &labels)?,
        },
        None => Outcome::NotFound { d_max },
    })
}

/// `D(G)` with the always sufficient cap `|V(G)|`.
pub fn distinguishing_number_exact(g: &Graph) -> Result<(u32, VertexLabeling)> {
    match distinguishing_number(g, (g.n() as u32).max(1))? {
        Outcome::Found { d, witness } => Ok((d, witness)),
        Outcome::NotFound { .. } => unreachable!("distinct labels always distinguish"),
    }
}

/// `D'(G)` with the always sufficient cap `|E(G)|`.
pub fn distinguishing_index_exact(g: &Graph) -> Result<(u32, EdgeLabeling)> {
    match distinguishing_index(g, g.edge_count() as u32)? {
        Outcome::Found { d, witness } => Ok((d, witness)),
        Outcome::NotFound { .. } => unreachable!("distinct labels always distinguish"),
    }
}
