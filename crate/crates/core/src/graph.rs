//! Simple undirected graphs on `0..n`.
//!
//! Adjacency is kept twice: sorted neighbor lists for iteration and packed
//! bit rows for constant-time adjacency tests and neighborhood comparisons.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A fixed-width row of bits, one per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(n: usize) -> Self {
        BitRow {
            words: vec![0; n.div_ceil(64)],
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}

/// A simple undirected graph with vertices `0..n`.
///
/// Values are immutable once built. Two graphs are equal when they have the
/// same vertex count and the same edge set.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<BitRow>,
    m: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![Vec::new(); n])
    }

    /// Callers guarantee symmetric, loop-free, in-range lists.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let mut rows = Vec::with_capacity(n);
        let mut m2 = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
            let mut row = BitRow::new(n);
            for &u in list.iter() {
                row.insert(u);
            }
            rows.push(row);
        }
        Graph {
            adj,
            rows,
            m: m2 / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list; panics on an out-of-range vertex.
    pub fn adjacent(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn row(&self, v: usize) -> &BitRow {
        &self.rows[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order. This order is the
    /// canonical edge order used by edge labelings and constructions.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check(v)?;
        Ok(self.adj[v].clone())
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check(v)?;
        let mut out = self.adj[v].clone();
        let at = out.partition_point(|&u| u < v);
        out.insert(at, v);
        Ok(out)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Classes of the relation "equal open neighborhoods".
    pub fn relation_r(&self) -> VertexPartition {
        self.group_by_row(|v| self.rows[v].clone())
    }

    /// Classes of the relation "equal closed neighborhoods".
    pub fn relation_s(&self) -> VertexPartition {
        self.group_by_row(|v| {
            let mut row = self.rows[v].clone();
            row.insert(v);
            row
        })
    }

    fn group_by_row(&self, key: impl Fn(usize) -> BitRow) -> VertexPartition {
        let mut groups: BTreeMap<BitRow, Vec<usize>> = BTreeMap::new();
        for v in 0..self.n() {
            groups.entry(key(v)).or_default().push(v);
        }
        VertexPartition::from_classes(groups.into_values().collect())
    }

    /// Applies `perm` to the vertex set: edge `{u, v}` becomes `{perm[u], perm[v]}`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]].push(perm[v]);
            adj[perm[v]].push(perm[u]);
        }
        Graph::from_adjacency(adj)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        min_param("path", n, 1)?;
        Graph::new(n, (1..n).map(|v| (v - 1, v)))
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Graph> {
        min_param("cycle", n, 3)?;
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        min_param("complete", n, 1)?;
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Star `K_{1,n}`: center 0, leaves `1..=n`.
    pub fn star(n: usize) -> Result<Graph> {
        min_param("star", n, 1)?;
        Graph::new(n + 1, (1..=n).map(|v| (0, v)))
    }

    /// Spider `G_n`: the star `K_{1,n}` with every edge subdivided once.
    ///
    /// Center is 0; branch `j` (1-based) has subdivision vertex `2j - 1`
    /// adjacent to the center and pendant vertex `2j`.
    pub fn spider(n: usize) -> Result<Graph> {
        min_param("spider", n, 3)?;
        Graph::new(
            2 * n + 1,
            (1..=n).flat_map(|j| [(0, 2 * j - 1), (2 * j - 1, 2 * j)]),
        )
    }
}

fn min_param(family: &'static str, param: usize, min: usize) -> Result<()> {
    if param < min {
        Err(Error::FamilyParameter { family, param, min })
    } else {
        Ok(())
    }
}

/// A partition of `0..n` into non-empty classes.
///
/// Classes are sorted internally and ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    classes: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub(crate) fn from_classes(mut classes: Vec<Vec<usize>>) -> Self {
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.retain(|c| !c.is_empty());
        classes.sort_unstable_by_key(|c| c[0]);
        VertexPartition { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// True when every class is a singleton (the identity relation).
    pub fn is_discrete(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    /// All unordered pairs `(a, b)`, `a < b`, lying in a common class.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in &self.classes {
            for (i, &a) in c.iter().enumerate() {
                for &b in &c[i + 1..] {
                    out.push((a, b));
                }
            }
        }
        out
    }
}
