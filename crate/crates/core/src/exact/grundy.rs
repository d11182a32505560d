use serde::{Deserialize, Serialize};

use super::{bit, check_cap, low_mask, mask_iter, OracleCaps};
use crate::error::Result;
use crate::graph::{first_fit_coloring, Graph, VertexSet};

/// Color classes `C_1, ..., C_k` of a first-fit coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrundyWitness {
    pub classes: Vec<VertexSet>,
}

impl GrundyWitness {
    pub fn colors(&self) -> usize {
        self.classes.len()
    }

    /// Class members in class order, each class by increasing index.
    pub fn ordering(&self) -> Vec<usize> {
        self.classes.iter().flat_map(|c| c.iter()).collect()
    }

    /// Classes are disjoint independent sets, the last one is nonempty, and
    /// every vertex of `C_i` has a neighbor in each earlier class.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new(g.n());
        for (i, class) in self.classes.iter().enumerate() {
            if !class.is_disjoint(&seen) || !g.is_independent(class) {
                return false;
            }
            let supported = class.iter().all(|v| {
                self.classes[..i]
                    .iter()
                    .all(|earlier| !g.neighbors_of(v).is_disjoint(earlier))
            });
            if !supported {
                return false;
            }
            seen.union_with(class);
        }
        self.classes.last().is_none_or(|c| !c.is_empty())
    }

    /// First-fit on `g` in [`ordering`](Self::ordering) reproduces the classes.
    pub fn replays_on(&self, g: &Graph) -> bool {
        first_fit_coloring(g, &self.ordering()).0 == self.colors()
    }
}

/// Grundy number Γ(g) with a witness coloring.
///
/// Uses Γ(S) = max over maximal independent sets M of g[S] of 1 + Γ(S ∖ M),
/// memoized over subsets. A branch stops early once it reaches the bound
/// Δ(g[S]) + 1.
pub fn grundy_exact(g: &Graph, caps: &OracleCaps) -> Result<(usize, GrundyWitness, u64)> {
    check_cap("grundy number", g.n(), caps.grundy.min(30))?;
    let n = g.n();
    let adj = g.adjacency_masks();
    let mut memo = Memo {
        adj: &adj,
        value: vec![u8::MAX; 1 << n],
        choice: vec![0u32; 1 << n],
        nodes: 0,
    };
    let full = low_mask(n);
    let k = memo.solve(full);
    let mut classes = Vec::with_capacity(k as usize);
    let mut rest = full;
    while rest != 0 {
        let m = memo.choice[rest as usize] as u64;
        classes.push(VertexSet::from_mask(n, m));
        rest &= !m;
    }
    Ok((k as usize, GrundyWitness { classes }, memo.nodes))
}

struct Memo<'a> {
    adj: &'a [u64],
    value: Vec<u8>,
    choice: Vec<u32>,
    nodes: u64,
}

impl Memo<'_> {
    fn solve(&mut self, s: u64) -> u8 {
        if s == 0 {
            return 0;
        }
        if self.value[s as usize] != u8::MAX {
            return self.value[s as usize];
        }
        self.nodes += 1;
        let bound = mask_iter(s)
            .map(|v| (self.adj[v] & s).count_ones())
            .max()
            .unwrap_or(0) as u8
            + 1;
        let mut maximal = Vec::new();
        maximal_independent_sets(self.adj, s, 0, s, 0, &mut maximal);
        let mut best = 0u8;
        let mut best_m = 0u64;
        for m in maximal {
            let k = 1 + self.solve(s & !m);
            if k > best {
                best = k;
                best_m = m;
                if best == bound {
                    break;
                }
            }
        }
        self.value[s as usize] = best;
        self.choice[s as usize] = best_m as u32;
        best
    }
}

/// Maximal independent sets of the subgraph induced by `within`, via
/// Bron–Kerbosch with pivoting on the complement.
fn maximal_independent_sets(
    adj: &[u64],
    within: u64,
    chosen: u64,
    mut candidates: u64,
    mut excluded: u64,
    out: &mut Vec<u64>,
) {
    if candidates == 0 {
        if excluded == 0 {
            out.push(chosen);
        }
        return;
    }
    let closed = |v: usize| (adj[v] | bit(v)) & within;
    let pivot = mask_iter(candidates | excluded)
        .min_by_key(|&u| (closed(u) & candidates).count_ones())
        .unwrap();
    for v in mask_iter(candidates & closed(pivot)) {
        maximal_independent_sets(
            adj,
            within,
            chosen | bit(v),
            candidates & !closed(v),
            excluded & !closed(v),
            out,
        );
        candidates &= !bit(v);
        excluded |= bit(v);
    }
}
