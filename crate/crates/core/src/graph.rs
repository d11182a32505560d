//! Undirected simple graphs with bitset adjacency, feasibility predicates and
//! the enumeration primitives the schemes are built from.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub type VertexSet = BitSet;

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInstance(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidInstance(format!("self-loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors_of(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vs: I) -> VertexSet {
        VertexSet::from_indices(self.n, vs)
    }

    /// Adjacency rows as 64-bit masks. Exact routines use this representation.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "mask representation needs n <= 64");
        self.adj.iter().map(|a| a.to_mask()).collect()
    }

    /// Subgraph induced by `s`, with vertices renumbered in increasing order.
    /// The second component maps new indices back to the original ones.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            index[old] = new;
        }
        let mut g = Graph::empty(map.len());
        for (new, &old) in map.iter().enumerate() {
            for w in self.adj[old].iter() {
                if index[w] != usize::MAX {
                    g.adj[new].insert(index[w]);
                }
            }
        }
        (g, map)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Every vertex is in `s` or has a neighbor in `s`.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        let dominated = s.union(&neighbors(self, s));
        dominated.len() == self.n
    }

    pub fn is_vertex_cover(&self, s: &VertexSet) -> bool {
        (0..self.n)
            .filter(|v| !s.contains(*v))
            .all(|v| self.adj[v].is_subset(s))
    }

    /// Edge and component counts of `g[s]`, plus its maximum degree.
    fn induced_shape(&self, s: &VertexSet) -> (usize, usize, usize) {
        let mut edges = 0;
        let mut max_deg = 0;
        for v in s.iter() {
            let d = self.adj[v].intersection_len(s);
            edges += d;
            max_deg = max_deg.max(d);
        }
        let mut seen = VertexSet::new(self.n);
        let mut components = 0;
        let mut stack = Vec::new();
        for start in s.iter() {
            if seen.contains(start) {
                continue;
            }
            components += 1;
            seen.insert(start);
            stack.push(start);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if s.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
        }
        (edges / 2, components, max_deg)
    }
}

/// `{ v : some u in s has uv in E }`.
pub fn neighbors(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut out = VertexSet::new(g.n);
    for u in s.iter() {
        out.union_with(&g.adj[u]);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Objective {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProblemKind {
    IndependentSet,
    IndependentDominatingSet,
    MinimalVertexCover,
    InducedPath,
    InducedTree,
    InducedForest,
}

impl ProblemKind {
    pub fn objective(self) -> Objective {
        match self {
            ProblemKind::IndependentDominatingSet => Objective::Min,
            _ => Objective::Max,
        }
    }
}

/// Checks whether `s` is a feasible solution of `problem` on `g`.
///
/// The empty set is not an induced path or tree; a single vertex is both.
pub fn is_feasible(g: &Graph, s: &VertexSet, problem: ProblemKind) -> bool {
    match problem {
        ProblemKind::IndependentSet => g.is_independent(s),
        ProblemKind::IndependentDominatingSet => g.is_independent(s) && g.is_dominating(s),
        ProblemKind::MinimalVertexCover => {
            g.is_vertex_cover(s) && s.iter().all(|u| !g.adj[u].is_subset(s))
        }
        ProblemKind::InducedPath => {
            let (edges, comps, max_deg) = g.induced_shape(s);
            !s.is_empty() && comps == 1 && edges + 1 == s.len() && max_deg <= 2
        }
        ProblemKind::InducedTree => {
            let (edges, comps, _) = g.induced_shape(s);
            !s.is_empty() && comps == 1 && edges + 1 == s.len()
        }
        ProblemKind::InducedForest => {
            let (edges, comps, _) = g.induced_shape(s);
            edges + comps == s.len()
        }
    }
}

/// Greedy maximal matching over edges in lexicographic order.
pub fn maximal_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut matched = vec![false; g.n];
    let mut m = Vec::new();
    for (u, v) in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            m.push((u, v));
        }
    }
    m
}

/// Maximal independent set built by scanning vertices in index order.
pub fn greedy_maximal_independent_set(g: &Graph) -> VertexSet {
    let mut s = VertexSet::new(g.n);
    let mut blocked = VertexSet::new(g.n);
    for v in 0..g.n {
        if !blocked.contains(v) {
            s.insert(v);
            blocked.insert(v);
            blocked.union_with(&g.adj[v]);
        }
    }
    s
}

/// Number of colors first-fit uses on `g` when vertices arrive in `order`,
/// together with the color (1-based) given to each vertex.
pub fn first_fit_coloring(g: &Graph, order: &[usize]) -> (usize, Vec<usize>) {
    let mut color = vec![0usize; g.n];
    let mut used = 0;
    let mut taken = Vec::new();
    for &v in order {
        taken.clear();
        taken.resize(used + 2, false);
        for w in g.adj[v].iter() {
            if color[w] > 0 {
                taken[color[w]] = true;
            }
        }
        let c = (1..).find(|&c| !taken[c]).unwrap();
        color[v] = c;
        used = used.max(c);
    }
    (used, color)
}

/// Every subset of `0..n` with at most `k` elements, ordered by size and then
/// by bitmask value.
pub fn enumerate_subsets(n: usize, k: usize) -> Subsets {
    Subsets {
        n,
        k: k.min(n),
        combo: Vec::new(),
        started: false,
        done: false,
    }
}

pub struct Subsets {
    n: usize,
    k: usize,
    combo: Vec<usize>,
    started: bool,
    done: bool,
}

impl Subsets {
    /// Advances `combo` to the next combination of the same size in colex
    /// order (numeric bitmask order). Returns false when exhausted.
    fn advance(&mut self) -> bool {
        let j = self.combo.len();
        for i in 0..j {
            let limit = if i + 1 < j { self.combo[i + 1] } else { self.n };
            if self.combo[i] + 1 < limit {
                self.combo[i] += 1;
                for (t, c) in self.combo[..i].iter_mut().enumerate() {
                    *c = t;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            let size = self.combo.len() + 1;
            if size > self.k {
                self.done = true;
                return None;
            }
            self.combo = (0..size).collect();
        }
        Some(VertexSet::from_indices(self.n, self.combo.iter().copied()))
    }
}

/// Subsets of `0..n` with exactly `k` elements, in bitmask order.
pub fn enumerate_subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    enumerate_subsets(n, k).skip_while(move |s| s.len() < k)
}

/// `Σ_{j ≤ k} C(n, j)`, saturating at `u64::MAX`.
pub fn subset_count(n: usize, k: usize) -> u64 {
    let mut total: u64 = 0;
    let mut binom: u128 = 1;
    for j in 0..=k.min(n) {
        if j > 0 {
            binom = binom * (n - j + 1) as u128 / j as u128;
        }
        total = total.saturating_add(u64::try_from(binom).unwrap_or(u64::MAX));
    }
    total
}

/// Every independent subset of `within` (including the empty set), each once.
///
/// Vertices are added in increasing index order; a branch never offers a
/// vertex adjacent to one already chosen.
pub fn enumerate_independent_subsets<'g>(
    g: &'g Graph,
    within: &VertexSet,
) -> IndependentSubsets<'g> {
    IndependentSubsets {
        g,
        stack: vec![(VertexSet::new(g.n), within.clone())],
    }
}

pub struct IndependentSubsets<'g> {
    g: &'g Graph,
    stack: Vec<(VertexSet, VertexSet)>,
}

impl Iterator for IndependentSubsets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let (current, candidates) = self.stack.pop()?;
        let cands: Vec<usize> = candidates.iter().collect();
        for (pos, &v) in cands.iter().enumerate().rev() {
            let mut child = current.clone();
            child.insert(v);
            let mut rest = VertexSet::from_indices(self.g.n, cands[pos + 1..].iter().copied());
            rest.difference_with(&self.g.adj[v]);
            self.stack.push((child, rest));
        }
        Some(current)
    }
}
