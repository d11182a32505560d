use super::{bit, check_cap, improves, low_mask, mask_iter, ExactSolution, OracleCaps};
use crate::error::Result;
use crate::graph::{is_feasible, Graph, ProblemKind, VertexSet};

/// Minimum independent dominating set.
///
/// Enumerates maximal independent sets (Bron–Kerbosch on the complement with
/// pivoting) and prunes branches that cannot beat the incumbent: each further
/// vertex dominates at most `Δ + 1` of the still undominated vertices.
pub fn min_ids_exact(g: &Graph, caps: &OracleCaps) -> Result<ExactSolution> {
    check_cap("min independent dominating set", g.n(), caps.ids)?;
    let n = g.n();
    let adj = g.adjacency_masks();
    let closed: Vec<u64> = adj.iter().enumerate().map(|(v, a)| a | bit(v)).collect();
    let max_closed = closed.iter().map(|c| c.count_ones()).max().unwrap_or(1);
    let mut search = Search {
        closed: &closed,
        all: low_mask(n),
        max_closed,
        best: (n as u32 + 1, u64::MAX),
        nodes: 0,
    };
    search.run(0, low_mask(n), 0);
    Ok(ExactSolution {
        value: search.best.0 as usize,
        set: VertexSet::from_mask(n, search.best.1),
        nodes: search.nodes,
    })
}

/// Maximum minimal vertex cover, obtained as the complement of a minimum
/// independent dominating set.
pub fn max_minimal_vc_exact(g: &Graph, caps: &OracleCaps) -> Result<ExactSolution> {
    let ids = min_ids_exact(g, caps)?;
    let cover = ids.set.complement();
    debug_assert!(is_feasible(g, &cover, ProblemKind::MinimalVertexCover));
    Ok(ExactSolution {
        value: g.n() - ids.value,
        set: cover,
        nodes: ids.nodes,
    })
}

struct Search<'a> {
    closed: &'a [u64],
    all: u64,
    max_closed: u32,
    best: (u32, u64),
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, chosen: u64, mut candidates: u64, mut excluded: u64) {
        self.nodes += 1;
        if candidates == 0 {
            if excluded == 0 && improves(chosen.count_ones(), chosen, self.best, false) {
                self.best = (chosen.count_ones(), chosen);
            }
            return;
        }
        let dominated = mask_iter(chosen).fold(0, |acc, v| acc | self.closed[v]);
        let undominated = (self.all & !dominated).count_ones();
        let need = undominated.div_ceil(self.max_closed);
        if chosen.count_ones() + need > self.best.0 {
            return;
        }
        // an excluded vertex no candidate can dominate blocks maximality
        if mask_iter(excluded).any(|x| self.closed[x] & candidates == 0) {
            return;
        }
        let pivot = mask_iter(candidates | excluded)
            .min_by_key(|&u| (self.closed[u] & candidates).count_ones())
            .unwrap();
        for v in mask_iter(candidates & self.closed[pivot]) {
            self.run(
                chosen | bit(v),
                candidates & !self.closed[v],
                excluded & !self.closed[v],
            );
            candidates &= !bit(v);
            excluded |= bit(v);
        }
    }
}
