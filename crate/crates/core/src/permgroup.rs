//! Permutations, generated groups, and the generators of `Aut(G[H])`.
//!
//! Two routes to the order of a generated group are provided: [`closure`]
//! enumerates elements breadth-first up to a cap, and [`GeneratorSet::order`]
//! builds a stabilizer chain, which stays cheap for large groups of small
//! degree.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lexprod::ProductIndexer;

/// Default element cap for enumerations.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation { image }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        Permutation { image }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `(p ∘ q)(v) = p(q(v))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                got: q.degree(),
            });
        }
        Ok(self.compose_unchecked(q))
    }

    fn compose_unchecked(&self, q: &Permutation) -> Permutation {
        Permutation {
            image: q.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Permutation { image }
    }

    /// Points moved by the permutation, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.image[i] != i).collect()
    }

    /// Edge-preservation check against `g`.
    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.degree() == g.n()
            && g.edges()
                .all(|(u, v)| g.has_edge(self.image[u], self.image[v]))
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] || self.image[s] == s {
                continue;
            }
            let mut cyc = vec![s];
            seen[s] = true;
            let mut x = self.image[s];
            while x != s {
                seen[x] = true;
                cyc.push(x);
                x = self.image[x];
            }
            out.push(cyc);
        }
        out
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// Outcome of an enumeration with an element cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Capped<T> {
    Within(T),
    /// More than `cap` elements exist; `reached` were found before stopping.
    Exceeded { reached: usize },
}

impl<T> Capped<T> {
    pub fn within(self) -> Option<T> {
        match self {
            Capped::Within(t) => Some(t),
            Capped::Exceeded { .. } => None,
        }
    }
}

/// Generators of a permutation group of fixed degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    degree: usize,
    gens: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if let Some(p) = gens.iter().find(|p| p.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                got: p.degree(),
            });
        }
        Ok(GeneratorSet { degree, gens })
    }

    pub fn trivial(degree: usize) -> Self {
        GeneratorSet {
            degree,
            gens: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Union of two generator sets of equal degree.
    pub fn union(&self, other: &GeneratorSet) -> Result<GeneratorSet> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        GeneratorSet::new(self.degree, gens)
    }

    /// Exact group order from a stabilizer chain.
    pub fn order(&self) -> BigUint {
        StabilizerChain::build(self).order()
    }
}

/// All elements of the generated group, breadth-first from the identity,
/// multiplying by generators in list order.
pub fn closure(gens: &GeneratorSet, cap: usize) -> Capped<Vec<Permutation>> {
    let id = Permutation::identity(gens.degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut elems = vec![id];
    if cap == 0 {
        return Capped::Exceeded { reached: 1 };
    }
    let mut i = 0;
    while i < elems.len() {
        for g in &gens.gens {
            let y = g.compose_unchecked(&elems[i]);
            if seen.insert(y.clone()) {
                elems.push(y);
                if elems.len() > cap {
                    return Capped::Exceeded {
                        reached: elems.len(),
                    };
                }
            }
        }
        i += 1;
    }
    Capped::Within(elems)
}

struct Level {
    base: usize,
    /// Generators first introduced at this level.
    gens: Vec<Permutation>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Permutation>>,
}

/// Base and strong generating set built by the deterministic Schreier-Sims
/// procedure.
struct StabilizerChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    fn build(gens: &GeneratorSet) -> Self {
        let mut chain = StabilizerChain {
            n: gens.degree,
            levels: Vec::new(),
        };
        for g in &gens.gens {
            if let Some((res, lvl)) = chain.sift(g.clone(), 0) {
                chain.add(res, lvl);
            }
        }
        'restart: loop {
            for i in (0..chain.levels.len()).rev() {
                let level_gens: Vec<Permutation> = chain.levels[i..]
                    .iter()
                    .flat_map(|l| l.gens.iter().cloned())
                    .collect();
                let orbit: Vec<usize> = (0..chain.n)
                    .filter(|&p| chain.levels[i].transversal[p].is_some())
                    .collect();
                for &p in &orbit {
                    for s in &level_gens {
                        let q = s.apply(p);
                        let up = chain.levels[i].transversal[p].as_ref().unwrap();
                        let uq = chain.levels[i].transversal[q].as_ref().unwrap();
                        let schreier = uq.inverse().compose_unchecked(&s.compose_unchecked(up));
                        if let Some((res, lvl)) = chain.sift(schreier, i + 1) {
                            chain.add(res, lvl);
                            continue 'restart;
                        }
                    }
                }
            }
            break;
        }
        chain
    }

    /// Returns the non-identity residue and the level where sifting stopped.
    fn sift(&self, mut g: Permutation, from: usize) -> Option<(Permutation, usize)> {
        for j in from..self.levels.len() {
            let p = g.apply(self.levels[j].base);
            match &self.levels[j].transversal[p] {
                Some(u) => g = u.inverse().compose_unchecked(&g),
                None => return Some((g, j)),
            }
        }
        if g.is_identity() {
            None
        } else {
            Some((g, self.levels.len()))
        }
    }

    fn add(&mut self, g: Permutation, lvl: usize) {
        if lvl == self.levels.len() {
            let base = (0..self.n).find(|&p| g.apply(p) != p).expect("non-identity");
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal: Vec::new(),
            });
        }
        self.levels[lvl].gens.push(g);
        for i in 0..=lvl {
            self.rebuild_orbit(i);
        }
    }

    fn rebuild_orbit(&mut self, i: usize) {
        let gens: Vec<&Permutation> = self.levels[i..].iter().flat_map(|l| l.gens.iter()).collect();
        let base = self.levels[i].base;
        let mut tr: Vec<Option<Permutation>> = vec![None; self.n];
        tr[base] = Some(Permutation::identity(self.n));
        let mut queue = VecDeque::from([base]);
        while let Some(p) = queue.pop_front() {
            for s in &gens {
                let q = s.apply(p);
                if tr[q].is_none() {
                    tr[q] = Some(s.compose_unchecked(tr[p].as_ref().unwrap()));
                    queue.push_back(q);
                }
            }
        }
        self.levels[i].transversal = tr;
    }

    fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| {
            acc * BigUint::from(l.transversal.iter().filter(|t| t.is_some()).count())
        })
    }
}

/// Generators of the wreath product `Aut(G)[Aut(H)]` acting on `G[H]`:
/// each `α` moves whole copies `(g, h) -> (αg, h)`; each `β` acts inside a
/// single copy `g` and fixes every other vertex.
pub fn wreath_generators(
    aut_g: &GeneratorSet,
    aut_h: &GeneratorSet,
    ng: usize,
    nh: usize,
) -> Result<GeneratorSet> {
    for (set, want) in [(aut_g, ng), (aut_h, nh)] {
        if set.degree != want {
            return Err(Error::DegreeMismatch {
                expected: want,
                got: set.degree,
            });
        }
    }
    let idx = ProductIndexer::new(ng, nh)?;
    let mut gens = Vec::new();
    for alpha in &aut_g.gens {
        let image = (0..idx.len())
            .map(|v| {
                let (g, h) = idx.decode(v);
                idx.encode(alpha.apply(g), h)
            })
            .collect();
        gens.push(Permutation::from_image_unchecked(image));
    }
    for beta in &aut_h.gens {
        for copy in 0..ng {
            let mut image: Vec<usize> = (0..idx.len()).collect();
            for h in 0..nh {
                image[idx.encode(copy, h)] = idx.encode(copy, beta.apply(h));
            }
            gens.push(Permutation::from_image_unchecked(image));
        }
    }
    GeneratorSet::new(idx.len(), gens)
}

/// The extra generators `S(ij)` of `Aut(G[H])` beyond the wreath product.
///
/// For every pair `a < b` with `N_G[a] = N_G[b]` and every component `C` of
/// the complement of `H`: swap `(a, h) <-> (b, h)` for all `h ∉ C`, fix every
/// other vertex. Identity maps (when `C` is all of `V(H)`) are dropped.
pub fn sij_generators(g: &Graph, h: &Graph) -> GeneratorSet {
    let idx = ProductIndexer::new(g.n(), h.n()).expect("product of existing graphs");
    let comps = h.complement().components();
    let mut gens = Vec::new();
    for (a, b) in g.relation_s().pairs() {
        for comp in &comps {
            let mut image: Vec<usize> = (0..idx.len()).collect();
            let mut moved = false;
            for y in (0..h.n()).filter(|y| comp.binary_search(y).is_err()) {
                image.swap(idx.encode(a, y), idx.encode(b, y));
                moved = true;
            }
            if moved {
                gens.push(Permutation::from_image_unchecked(image));
            }
        }
    }
    GeneratorSet {
        degree: idx.len(),
        gens,
    }
}

/// Whether `Aut(G[H])` equals the wreath product `Aut(G)[Aut(H)]`: `H` must
/// be connected if some vertices of `G` share open neighborhoods, and the
/// complement of `H` must be connected if some share closed neighborhoods.
pub fn sabidussi_equal(g: &Graph, h: &Graph) -> bool {
    (g.relation_r().is_discrete() || h.is_connected())
        && (g.relation_s().is_discrete() || h.complement().is_connected())
}
