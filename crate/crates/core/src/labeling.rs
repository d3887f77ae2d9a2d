//! Vertex and edge labelings with positive integer labels.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One positive label per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabeling {
    labels: Vec<u32>,
}

impl VertexLabeling {
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::ZeroLabel);
        }
        Ok(VertexLabeling { labels })
    }

    pub fn constant(n: usize) -> Self {
        VertexLabeling { labels: vec![1; n] }
    }

    /// Labels `1..=n` in vertex order.
    pub fn all_distinct(n: usize) -> Self {
        VertexLabeling {
            labels: (1..=n as u32).collect(),
        }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.labels[v]
    }

    /// Largest label in use, 0 for the empty labeling.
    pub fn max_label(&self) -> u32 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub fn distinct_labels(&self) -> usize {
        self.labels.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.labels.len() != g.n() {
            return Err(Error::LabelingLength {
                expected: g.n(),
                got: self.labels.len(),
            });
        }
        Ok(())
    }
}

/// One positive label per edge, keyed by `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeLabeling {
    labels: BTreeMap<(usize, usize), u32>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl EdgeLabeling {
    pub fn new(entries: impl IntoIterator<Item = ((usize, usize), u32)>) -> Result<Self> {
        let mut labels = BTreeMap::new();
        for ((u, v), l) in entries {
            if l == 0 {
                return Err(Error::ZeroLabel);
            }
            if labels.insert(key(u, v), l).is_some() {
                return Err(Error::EdgeLabelingDomain(format!(
                    "edge {{{u}, {v}}} labeled twice"
                )));
            }
        }
        Ok(EdgeLabeling { labels })
    }

    /// Labels given in the graph's canonical edge order.
    pub fn from_edge_order(g: &Graph, labels: &[u32]) -> Result<Self> {
        if labels.len() != g.edge_count() {
            return Err(Error::EdgeLabelingDomain(format!(
                "{} labels for {} edges",
                labels.len(),
                g.edge_count()
            )));
        }
        Self::new(g.edges().zip(labels.iter().copied()))
    }

    pub fn constant(g: &Graph) -> Self {
        EdgeLabeling {
            labels: g.edges().map(|e| (e, 1)).collect(),
        }
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.labels.get(&key(u, v)).copied()
    }

    pub fn insert(&mut self, u: usize, v: usize, label: u32) {
        debug_assert!(label > 0);
        self.labels.insert(key(u, v), label);
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.labels.iter().map(|(&e, &l)| (e, l))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn max_label(&self) -> u32 {
        self.labels.values().copied().max().unwrap_or(0)
    }

    pub fn distinct_labels(&self) -> usize {
        self.labels.values().collect::<BTreeSet<_>>().len()
    }

    /// Labels listed in the graph's canonical edge order.
    pub fn in_edge_order(&self, g: &Graph) -> Result<Vec<u32>> {
        self.check_graph(g)?;
        Ok(g.edges().map(|(u, v)| self.labels[&(u, v)]).collect())
    }

    /// The domain must be exactly the edge set of `g`.
    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if let Some((u, v)) = g.edges().find(|e| !self.labels.contains_key(e)) {
            return Err(Error::EdgeLabelingDomain(format!("edge {{{u}, {v}}} unlabeled")));
        }
        if self.labels.len() != g.edge_count() {
            let (u, v) = self
                .labels
                .keys()
                .find(|&&(u, v)| v >= g.n() || !g.has_edge(u, v))
                .copied()
                .unwrap_or((0, 0));
            return Err(Error::EdgeLabelingDomain(format!("{{{u}, {v}}} is not an edge")));
        }
        Ok(())
    }
}
