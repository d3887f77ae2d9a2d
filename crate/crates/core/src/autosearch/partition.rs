//! Ordered partitions and equitable refinement.

use std::collections::VecDeque;

use crate::graph::Graph;

/// An ordered partition of `0..n`. Cells are contiguous runs of `lab` and are
/// identified by their start position, which never changes once created.
#[derive(Clone, Debug)]
pub(crate) struct Partition {
    lab: Vec<usize>,
    cell_of: Vec<usize>,
    /// Valid only at cell starts.
    cell_len: Vec<usize>,
    cells: usize,
}

/// Record of every refinement step; isomorphic inputs produce equal traces.
pub(crate) type Trace = Vec<u64>;

impl Partition {
    /// Cells ordered by color value.
    pub(crate) fn from_colors(colors: &[u64]) -> Self {
        let n = colors.len();
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by_key(|&v| (colors[v], v));
        let mut cell_of = vec![0; n];
        let mut cell_len = vec![0; n];
        let mut cells = 0;
        let mut start = 0;
        for p in 0..n {
            if p > 0 && colors[lab[p]] != colors[lab[p - 1]] {
                cell_len[start] = p - start;
                start = p;
            }
            if p == start {
                cells += 1;
            }
            cell_of[lab[p]] = start;
        }
        if n > 0 {
            cell_len[start] = n - start;
        }
        Partition {
            lab,
            cell_of,
            cell_len,
            cells,
        }
    }

    pub(crate) fn n(&self) -> usize {
        self.lab.len()
    }

    pub(crate) fn lab(&self) -> &[usize] {
        &self.lab
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.cells == self.n()
    }

    pub(crate) fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut p = 0;
        std::iter::from_fn(move || {
            if p >= self.n() {
                return None;
            }
            let s = p;
            p += self.cell_len[s];
            Some(s)
        })
    }

    pub(crate) fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..start + self.cell_len[start]]
    }

    /// Smallest non-singleton cell (lowest start on ties) satisfying `accept`.
    pub(crate) fn target_cell(&self, accept: impl Fn(&[usize]) -> bool) -> Option<usize> {
        self.cell_starts()
            .filter(|&s| self.cell_len[s] > 1 && accept(self.cell(s)))
            .min_by_key(|&s| (self.cell_len[s], s))
    }

    /// Splits `v` off the front of its cell; returns the singleton's start.
    pub(crate) fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell_of[v];
        let len = self.cell_len[s];
        debug_assert!(len > 1);
        let p = self.lab[s..s + len].iter().position(|&x| x == v).unwrap();
        self.lab[s..s + len].swap(0, p);
        self.cell_len[s] = 1;
        self.cell_len[s + 1] = len - 1;
        for &x in &self.lab[s + 1..s + len] {
            self.cell_of[x] = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition finer than `self`, using
    /// the cells starting at `splitters` as the initial work list.
    pub(crate) fn refine(
        &mut self,
        g: &Graph,
        splitters: impl IntoIterator<Item = usize>,
        scratch: &mut Scratch,
    ) -> Trace {
        let n = self.n();
        scratch.ensure(n);
        let mut trace = Trace::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        for s in splitters {
            if !scratch.queued[s] {
                scratch.queued[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            scratch.queued[s] = false;
            if self.is_discrete() {
                continue;
            }
            trace.push(s as u64);
            let splitter: Vec<usize> = self.cell(s).to_vec();
            let mut touched = Vec::new();
            for &u in &splitter {
                for &w in g.adjacent(u) {
                    if scratch.count[w] == 0 {
                        touched.push(w);
                    }
                    scratch.count[w] += 1;
                }
            }
            let mut cells: Vec<usize> = touched.iter().map(|&w| self.cell_of[w]).collect();
            cells.sort_unstable();
            cells.dedup();
            for c in cells {
                let len = self.cell_len[c];
                trace.push(c as u64);
                if len == 1 {
                    trace.push(scratch.count[self.lab[c]] as u64);
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = self.lab[c..c + len]
                    .iter()
                    .map(|&v| (scratch.count[v], v))
                    .collect();
                keyed.sort_unstable();
                if keyed[0].0 == keyed[len - 1].0 {
                    trace.push(keyed[0].0 as u64);
                    continue;
                }
                let mut start = c;
                for (i, &(cnt, v)) in keyed.iter().enumerate() {
                    let p = c + i;
                    self.lab[p] = v;
                    if i > 0 && cnt != keyed[i - 1].0 {
                        self.cell_len[start] = p - start;
                        trace.push((self.cell_len[start] as u64) << 32 | keyed[i - 1].0 as u64);
                        start = p;
                        self.cells += 1;
                        if !scratch.queued[start] {
                            scratch.queued[start] = true;
                            queue.push_back(start);
                        }
                    }
                    self.cell_of[v] = start;
                }
                self.cell_len[start] = c + len - start;
                trace.push((self.cell_len[start] as u64) << 32 | keyed[len - 1].0 as u64);
                if !scratch.queued[c] {
                    scratch.queued[c] = true;
                    queue.push_back(c);
                }
            }
            for w in touched {
                scratch.count[w] = 0;
            }
        }
        // cell structure closes the trace so equal traces mean equal shapes
        trace.push(u64::MAX);
        trace.extend(self.cell_starts().map(|s| self.cell_len[s] as u64));
        trace
    }
}

#[derive(Default)]
pub(crate) struct Scratch {
    count: Vec<u32>,
    queued: Vec<bool>,
}

impl Scratch {
    fn ensure(&mut self, n: usize) {
        if self.count.len() < n {
            self.count.resize(n, 0);
            self.queued.resize(n, false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn refined(g: &Graph, colors: &[u64]) -> Partition {
        let mut p = Partition::from_colors(colors);
        let starts: Vec<usize> = p.cell_starts().collect();
        p.refine(g, starts, &mut Scratch::default());
        p
    }

    #[test]
    fn path_refines_by_degree_then_distance() {
        let g = Graph::path(5).unwrap();
        let p = refined(&g, &[0; 5]);
        let cells: Vec<Vec<usize>> = p
            .cell_starts()
            .map(|s| {
                let mut c = p.cell(s).to_vec();
                c.sort();
                c
            })
            .collect();
        assert_eq!(cells, vec![vec![0, 4], vec![1, 3], vec![2]]);
    }

    #[test]
    fn regular_graph_stays_coarse() {
        let g = Graph::cycle(6).unwrap();
        let p = refined(&g, &[0; 6]);
        assert_eq!(p.cell_starts().count(), 1);
    }

    #[test]
    fn individualize_then_refine_discretizes_path() {
        let g = Graph::path(4).unwrap();
        let mut p = refined(&g, &[0; 4]);
        let s = p.individualize(0);
        p.refine(&g, [s], &mut Scratch::default());
        assert!(p.is_discrete());
        assert_eq!(p.lab()[0], 0);
    }

    #[test]
    fn equitable_after_refinement() {
        let g = Graph::spider(5).unwrap();
        let p = refined(&g, &[0; 11]);
        for s in p.cell_starts() {
            for t in p.cell_starts() {
                let counts: Vec<usize> = p
                    .cell(s)
                    .iter()
                    .map(|&v| p.cell(t).iter().filter(|&&w| g.has_edge(v, w)).count())
                    .collect();
                assert!(counts.windows(2).all(|w| w[0] == w[1]));
            }
        }
    }
}
