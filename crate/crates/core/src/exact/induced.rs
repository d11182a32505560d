use serde::{Deserialize, Serialize};

use super::{bit, check_cap, improves, low_mask, mask_iter, ExactSolution, OracleCaps};
use crate::error::Result;
use crate::graph::{Graph, ProblemKind, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InducedKind {
    Path,
    Tree,
    Forest,
}

impl InducedKind {
    pub fn problem(self) -> ProblemKind {
        match self {
            InducedKind::Path => ProblemKind::InducedPath,
            InducedKind::Tree => ProblemKind::InducedTree,
            InducedKind::Forest => ProblemKind::InducedForest,
        }
    }
}

/// Largest vertex set inducing a path, tree or forest.
///
/// Vertices are decided in index order. A vertex may join only if its chosen
/// neighbors lie in distinct components (no cycle), and for paths only if no
/// degree exceeds two. Connected kinds stop growing once a component has no
/// undecided neighbor left.
pub fn max_induced_exact(g: &Graph, kind: InducedKind, caps: &OracleCaps) -> Result<ExactSolution> {
    let cap = match kind {
        InducedKind::Path => caps.induced_path,
        _ => caps.induced,
    };
    check_cap("max induced subgraph", g.n(), cap)?;
    let n = g.n();
    let adj = g.adjacency_masks();
    let mut search = Search {
        adj: &adj,
        n,
        kind,
        best: (0, 0),
        nodes: 0,
    };
    let state = State {
        chosen: 0,
        comp: [u8::MAX; 64],
        deg: [0; 64],
    };
    search.run(0, state);
    Ok(ExactSolution {
        value: search.best.0 as usize,
        set: VertexSet::from_mask(n, search.best.1),
        nodes: search.nodes,
    })
}

#[derive(Clone, Copy)]
struct State {
    chosen: u64,
    comp: [u8; 64],
    deg: [u8; 64],
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    kind: InducedKind,
    best: (u32, u64),
    nodes: u64,
}

impl Search<'_> {
    fn connected_kind(&self) -> bool {
        self.kind != InducedKind::Forest
    }

    fn offer(&mut self, set: u64) {
        if self.connected_kind() && set == 0 {
            return;
        }
        if improves(set.count_ones(), set, self.best, true) {
            self.best = (set.count_ones(), set);
        }
    }

    /// Component masks of the chosen set.
    fn components(&self, st: &State) -> Vec<u64> {
        let mut comps: Vec<(u8, u64)> = Vec::new();
        for v in mask_iter(st.chosen) {
            match comps.iter_mut().find(|(c, _)| *c == st.comp[v]) {
                Some((_, m)) => *m |= bit(v),
                None => comps.push((st.comp[v], bit(v))),
            }
        }
        comps.into_iter().map(|(_, m)| m).collect()
    }

    fn run(&mut self, next: usize, st: State) {
        self.nodes += 1;
        let size = st.chosen.count_ones();
        let remaining = (self.n - next) as u32;
        if size + remaining < self.best.0 {
            return;
        }
        if self.connected_kind() && st.chosen != 0 {
            let undecided = low_mask(self.n) & !low_mask(next);
            let comps = self.components(&st);
            let closed = comps
                .iter()
                .any(|&c| mask_iter(c).fold(0, |acc, v| acc | self.adj[v]) & undecided == 0);
            if closed {
                if comps.len() == 1 {
                    self.offer(st.chosen);
                }
                return;
            }
        }
        if next == self.n {
            if !self.connected_kind() || self.components(&st).len() == 1 {
                self.offer(st.chosen);
            }
            return;
        }
        let v = next;
        if let Some(included) = self.include(&st, v) {
            self.run(next + 1, included);
        }
        self.run(next + 1, st);
    }

    fn include(&self, st: &State, v: usize) -> Option<State> {
        let nbrs = self.adj[v] & st.chosen;
        let mut seen: u64 = 0;
        for w in mask_iter(nbrs) {
            let c = st.comp[w];
            if seen & bit(c as usize) != 0 {
                return None;
            }
            seen |= bit(c as usize);
        }
        let mut next = *st;
        if self.kind == InducedKind::Path {
            if nbrs.count_ones() > 2 || mask_iter(nbrs).any(|w| st.deg[w] >= 2) {
                return None;
            }
            next.deg[v] = nbrs.count_ones() as u8;
            for w in mask_iter(nbrs) {
                next.deg[w] += 1;
            }
        }
        let label = v as u8;
        next.chosen |= bit(v);
        next.comp[v] = label;
        for u in mask_iter(st.chosen) {
            if seen & bit(st.comp[u] as usize) != 0 {
                next.comp[u] = label;
            }
        }
        Some(next)
    }
}
