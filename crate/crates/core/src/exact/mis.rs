use super::{bit, check_cap, improves, low_mask, mask_iter, ExactSolution, OracleCaps};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Maximum independent set by branch and bound on the highest-degree vertex.
pub fn max_independent_set_exact(g: &Graph, caps: &OracleCaps) -> Result<ExactSolution> {
    check_cap("max independent set", g.n(), caps.mis)?;
    let adj = g.adjacency_masks();
    let mut search = Search {
        adj: &adj,
        best: (0, 0),
        nodes: 0,
    };
    search.run(low_mask(g.n()), 0);
    Ok(ExactSolution {
        value: search.best.0 as usize,
        set: VertexSet::from_mask(g.n(), search.best.1),
        nodes: search.nodes,
    })
}

struct Search<'a> {
    adj: &'a [u64],
    best: (u32, u64),
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, candidates: u64, current: u64) {
        self.nodes += 1;
        let size = current.count_ones();
        if size + candidates.count_ones() < self.best.0 {
            return;
        }
        let mut pick = None;
        let mut pick_deg = 0;
        for v in mask_iter(candidates) {
            let d = (self.adj[v] & candidates).count_ones();
            if pick.is_none() || d > pick_deg {
                pick = Some(v);
                pick_deg = d;
            }
        }
        let Some(v) = pick else {
            self.offer(current);
            return;
        };
        if pick_deg == 0 {
            self.offer(current | candidates);
            return;
        }
        self.run(candidates & !self.adj[v] & !bit(v), current | bit(v));
        self.run(candidates & !bit(v), current);
    }

    fn offer(&mut self, set: u64) {
        if improves(set.count_ones(), set, self.best, true) {
            self.best = (set.count_ones(), set);
        }
    }
}
