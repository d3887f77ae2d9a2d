//! Color-preserving automorphism search by partition refinement and
//! individualization.

mod partition;

use std::collections::VecDeque;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::EdgeLabeling;
use crate::permgroup::{Capped, GeneratorSet, Permutation};

use partition::{Partition, Scratch, Trace};

/// A graph with one positive color per vertex.
#[derive(Debug, Clone)]
pub struct ColoredGraph<'g> {
    graph: &'g Graph,
    color: Vec<u64>,
}

impl<'g> ColoredGraph<'g> {
    pub fn new(graph: &'g Graph, color: Vec<u64>) -> Result<Self> {
        if color.len() != graph.n() {
            return Err(Error::LabelingLength {
                expected: graph.n(),
                got: color.len(),
            });
        }
        if color.contains(&0) {
            return Err(Error::ZeroLabel);
        }
        Ok(ColoredGraph { graph, color })
    }

    pub fn uniform(graph: &'g Graph) -> Self {
        ColoredGraph {
            graph,
            color: vec![1; graph.n()],
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn color(&self) -> &[u64] {
        &self.color
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub refinements: u64,
    pub found: bool,
}

struct Searcher<'a> {
    g: &'a Graph,
    colors: &'a [u64],
    scratch: Scratch,
    stats: SearchStats,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, colors: &'a [u64]) -> Self {
        Searcher {
            g,
            colors,
            scratch: Scratch::default(),
            stats: SearchStats::default(),
        }
    }

    fn root(&mut self) -> Partition {
        let mut p = Partition::from_colors(self.colors);
        let starts: Vec<usize> = p.cell_starts().collect();
        self.stats.refinements += 1;
        p.refine(self.g, starts, &mut self.scratch);
        p
    }

    fn child(&mut self, p: &Partition, v: usize) -> (Partition, Trace) {
        let mut q = p.clone();
        let s = q.individualize(v);
        self.stats.refinements += 1;
        let t = q.refine(self.g, [s], &mut self.scratch);
        (q, t)
    }

    /// Position-wise map between two discrete partitions, if it is a
    /// color-preserving automorphism.
    fn leaf_map(&self, l: &Partition, r: &Partition) -> Option<Permutation> {
        let mut image = vec![0; l.n()];
        for (&a, &b) in l.lab().iter().zip(r.lab()) {
            image[a] = b;
        }
        let ok = (0..image.len()).all(|v| self.colors[image[v]] == self.colors[v])
            && self.g.edges().all(|(u, v)| self.g.has_edge(image[u], image[v]));
        ok.then(|| Permutation::from_image_unchecked(image))
    }

    fn sorted_cell(p: &Partition, start: usize) -> Vec<usize> {
        let mut c = p.cell(start).to_vec();
        c.sort_unstable();
        c
    }

    /// First automorphism mapping `l` onto `r`, both refined with equal traces.
    fn iso(&mut self, l: &Partition, r: &Partition) -> Option<Permutation> {
        self.stats.nodes_visited += 1;
        if l.is_discrete() {
            return self.leaf_map(l, r);
        }
        let c = l.target_cell(|_| true)?;
        let x = Self::sorted_cell(l, c)[0];
        let (lc, lt) = self.child(l, x);
        for y in Self::sorted_cell(r, c) {
            let (rc, rt) = self.child(r, y);
            if lt == rt {
                if let Some(s) = self.iso(&lc, &rc) {
                    return Some(s);
                }
            }
        }
        None
    }

    /// Collects every automorphism mapping `l` onto `r`; false once `cap` is passed.
    fn iso_all(&mut self, l: &Partition, r: &Partition, out: &mut Vec<Permutation>, cap: usize) -> bool {
        self.stats.nodes_visited += 1;
        if l.is_discrete() {
            if let Some(s) = self.leaf_map(l, r) {
                out.push(s);
            }
            return out.len() <= cap;
        }
        let Some(c) = l.target_cell(|_| true) else {
            return true;
        };
        let x = Self::sorted_cell(l, c)[0];
        let (lc, lt) = self.child(l, x);
        for y in Self::sorted_cell(r, c) {
            let (rc, rt) = self.child(r, y);
            if lt == rt && !self.iso_all(&lc, &rc, out, cap) {
                return false;
            }
        }
        true
    }

    /// A preserving automorphism of refined `p` moving some relevant vertex.
    /// Relevant vertices must form a union of color classes.
    fn nontrivial(&mut self, p: &Partition, relevant: &dyn Fn(usize) -> bool) -> Option<Permutation> {
        self.stats.nodes_visited += 1;
        let c = p.target_cell(|cell| relevant(cell[0]))?;
        let cell = Self::sorted_cell(p, c);
        let v = cell[0];
        let (left, lt) = self.child(p, v);
        for &w in &cell[1..] {
            let (right, rt) = self.child(p, w);
            if lt == rt {
                if let Some(s) = self.iso(&left, &right) {
                    return Some(s);
                }
            }
        }
        self.nontrivial(&left, relevant)
    }
}

fn search_nontrivial(
    g: &Graph,
    colors: &[u64],
    relevant: &dyn Fn(usize) -> bool,
) -> (Option<Permutation>, SearchStats) {
    let mut s = Searcher::new(g, colors);
    let root = s.root();
    let found = s.nontrivial(&root, relevant);
    s.stats.found = found.is_some();
    (found, s.stats)
}

/// A color-preserving automorphism, nontrivial when `exclude_identity`, or
/// `None` when the coloring is distinguishing.
pub fn find_preserving(c: &ColoredGraph, exclude_identity: bool) -> (Option<Permutation>, SearchStats) {
    if !exclude_identity {
        let stats = SearchStats {
            found: true,
            ..SearchStats::default()
        };
        return (Some(Permutation::identity(c.graph.n())), stats);
    }
    search_nontrivial(c.graph, &c.color, &|_| true)
}

/// Every automorphism of `g`, or the number reached once more than `cap` exist.
pub fn enumerate_automorphisms(g: &Graph, cap: usize) -> Capped<Vec<Permutation>> {
    let colors = vec![1; g.n()];
    let mut s = Searcher::new(g, &colors);
    let root = s.root();
    let mut out = Vec::new();
    if s.iso_all(&root, &root, &mut out, cap) {
        Capped::Within(out)
    } else {
        Capped::Exceeded { reached: out.len() }
    }
}

/// Order and a strong generating set of the color-preserving automorphism group.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    pub order: BigUint,
    pub generators: GeneratorSet,
    pub base: Vec<usize>,
}

fn orbit(v: usize, gens: &[Permutation], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Computes the group one base point at a time, deepest first, so the group
/// order is the product of the basic orbit lengths.
pub fn automorphism_group(c: &ColoredGraph) -> AutomorphismGroup {
    let n = c.graph.n();
    let mut s = Searcher::new(c.graph, &c.color);
    let mut path = vec![s.root()];
    let mut traces = Vec::new();
    let mut base = Vec::new();
    let mut cells = Vec::new();
    loop {
        let p = path.last().unwrap();
        let Some(cell) = p.target_cell(|_| true) else {
            break;
        };
        let v = Searcher::sorted_cell(p, cell)[0];
        let (q, t) = s.child(p, v);
        base.push(v);
        cells.push(cell);
        traces.push(t);
        path.push(q);
    }
    let mut gens: Vec<Permutation> = Vec::new();
    let mut order = BigUint::from(1u32);
    for i in (0..base.len()).rev() {
        let v = base[i];
        let mut orb = orbit(v, &gens, n);
        for w in Searcher::sorted_cell(&path[i], cells[i]) {
            if orb[w] {
                continue;
            }
            let (right, rt) = s.child(&path[i], w);
            if rt == traces[i] {
                if let Some(sigma) = s.iso(&path[i + 1], &right) {
                    gens.push(sigma);
                    orb = orbit(v, &gens, n);
                }
            }
        }
        order *= orb.iter().filter(|&&b| b).count();
    }
    AutomorphismGroup {
        order,
        generators: GeneratorSet::new(n, gens).expect("search yields degree-n permutations"),
        base,
    }
}

/// Relabels `g` into a form shared exactly by all graphs isomorphic to it.
/// Visits every leaf of the search tree, so only suited to small graphs.
pub fn canonical_form(g: &Graph) -> Graph {
    fn key(g: &Graph, lab: &[usize]) -> Vec<u64> {
        let n = lab.len();
        let mut words = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64)];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if g.has_edge(lab[i], lab[j]) {
                    words[bit / 64] |= 1 << (63 - bit % 64);
                }
                bit += 1;
            }
        }
        words
    }
    fn walk(s: &mut Searcher, p: &Partition, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
        let Some(c) = p.target_cell(|_| true) else {
            let k = key(s.g, p.lab());
            if best.as_ref().is_none_or(|(b, _)| k > *b) {
                *best = Some((k, p.lab().to_vec()));
            }
            return;
        };
        for v in Searcher::sorted_cell(p, c) {
            let (q, _) = s.child(p, v);
            walk(s, &q, best);
        }
    }
    let colors = vec![1; g.n()];
    let mut s = Searcher::new(g, &colors);
    let root = s.root();
    let mut best = None;
    walk(&mut s, &root, &mut best);
    let lab = best.map(|(_, lab)| lab).unwrap_or_default();
    let mut perm = vec![0; g.n()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    g.relabel(&perm)
}

/// The graph with every edge subdivided by a new vertex, edge vertices
/// numbered from `n` in canonical edge order.
pub(crate) struct Subdivision {
    n: usize,
    graph: Graph,
}

impl Subdivision {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![Vec::new(); n + g.edge_count()];
        for (k, (u, v)) in g.edges().enumerate() {
            adj[u].push(n + k);
            adj[v].push(n + k);
            adj[n + k] = vec![u, v];
        }
        Subdivision {
            n,
            graph: Graph::from_adjacency(adj),
        }
    }

    /// Automorphism of the original graph preserving `edge_colors` (given in
    /// canonical edge order) and moving at least one edge.
    pub(crate) fn find(&self, edge_colors: &[u64]) -> (Option<Permutation>, SearchStats) {
        debug_assert_eq!(edge_colors.len(), self.graph.n() - self.n);
        let mut colors = vec![0u64; self.n];
        colors.extend(edge_colors.iter().map(|&c| c.saturating_add(1)));
        let n = self.n;
        let (found, stats) = search_nontrivial(&self.graph, &colors, &|v| v >= n);
        let found = found.map(|s| Permutation::from_image_unchecked(s.image()[..n].to_vec()));
        (found, stats)
    }
}

/// An automorphism of `g` preserving every edge label, moving at least one
/// edge when `exclude_identity`. Automorphisms that fix every edge, such as
/// swaps of isolated vertices, count as trivial.
pub fn find_preserving_edges(
    g: &Graph,
    l: &EdgeLabeling,
    exclude_identity: bool,
) -> Result<Option<Permutation>> {
    let labels = l.in_edge_order(g)?;
    if !exclude_identity {
        return Ok(Some(Permutation::identity(g.n())));
    }
    let colors: Vec<u64> = labels.into_iter().map(u64::from).collect();
    Ok(Subdivision::new(g).find(&colors).0)
}
