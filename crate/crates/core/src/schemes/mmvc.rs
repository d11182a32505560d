use super::{RatioUsed, SolutionReport, Stopwatch};
use crate::error::{Error, Result};
use crate::graph::{enumerate_independent_subsets, maximal_matching, neighbors, Graph, VertexSet};

/// Minimal vertex cover disjoint from the independent set `independent`.
///
/// Starts from `V ∖ independent` and drops, in index order, each vertex whose
/// neighbors are all still in the cover. The result contains
/// `neighbors(g, independent)`.
pub fn extend_to_minimal_vc(g: &Graph, independent: &VertexSet) -> VertexSet {
    debug_assert!(g.is_independent(independent));
    let mut cover = independent.complement();
    for v in 0..g.n() {
        if cover.contains(v) && g.neighbors_of(v).is_subset(&cover) {
            cover.remove(v);
        }
    }
    cover
}

/// Max minimal vertex cover with ratio `rho` in time about `2^{n/rho²}`.
///
/// With a maximal matching `M` of size at least `n/rho` any minimal cover
/// already has `|M| ≥ opt/rho` vertices. Otherwise the matching edges are
/// dealt round-robin into `rho` groups; for each group's endpoint set `V_i`
/// and each independent `S ⊆ V_i`, the cover avoiding
/// `S ∪ (L ∖ N(S))` (with `L` the unmatched vertices) is built, and the
/// largest such cover is kept.
///
/// `rho` is clamped to `⌊√n⌋`.
pub fn mmvc_scheme(g: &Graph, rho: usize) -> Result<SolutionReport<VertexSet>> {
    if rho == 0 {
        return Err(Error::InvalidParameter("rho must be at least 1".into()));
    }
    let watch = Stopwatch::start();
    let n = g.n();
    let max_rho = n.isqrt().max(1);
    let ratio = RatioUsed {
        requested: rho as f64,
        used: rho.min(max_rho) as f64,
        clamped: rho > max_rho,
    };
    let rho = rho.min(max_rho);
    let matching = maximal_matching(g);
    let mut notes = Vec::new();

    if matching.len() * rho >= n {
        notes.push(format!(
            "matching of size {} >= n/rho; any minimal cover",
            matching.len()
        ));
        let cover = extend_to_minimal_vc(g, &VertexSet::new(n));
        return Ok(SolutionReport {
            value: cover.len() as u64,
            solution: cover,
            guarantee: rho as f64,
            nodes_enumerated: 0,
            wall_time_ms: watch.elapsed_ms(),
            ratio,
            notes,
        });
    }

    let mut groups = vec![VertexSet::new(n); rho];
    let mut matched = VertexSet::new(n);
    for (t, &(u, v)) in matching.iter().enumerate() {
        groups[t % rho].insert(u);
        groups[t % rho].insert(v);
        matched.insert(u);
        matched.insert(v);
    }
    let unmatched = matched.complement();

    let mut best: Option<VertexSet> = None;
    let mut nodes = 0u64;
    for group in &groups {
        for s in enumerate_independent_subsets(g, group) {
            nodes += 1;
            let extended = s.union(&unmatched.difference(&neighbors(g, &s)));
            let cover = extend_to_minimal_vc(g, &extended);
            if best.as_ref().is_none_or(|b| cover.len() > b.len()) {
                best = Some(cover);
            }
        }
    }
    let cover = best.expect("the empty set is always enumerated");
    Ok(SolutionReport {
        value: cover.len() as u64,
        solution: cover,
        guarantee: rho as f64,
        nodes_enumerated: nodes,
        wall_time_ms: watch.elapsed_ms(),
        ratio,
        notes,
    })
}
