use super::{RatioUsed, SolutionReport, Stopwatch};
use crate::error::{Error, Result};
use crate::graph::{
    enumerate_subsets, greedy_maximal_independent_set, is_feasible, Graph, Objective, ProblemKind,
    VertexSet,
};

/// Subset enumeration up to size `⌊n/r⌋` for a minimization problem.
///
/// Every subset in the budget is checked (the node count is exactly
/// `Σ_{j ≤ ⌊n/r⌋} C(n, j)`); the smallest feasible one wins. When none fits
/// the budget, every solution has more than `n/r` vertices and the
/// lexicographic greedy maximal independent set is returned instead.
pub fn generic_min_scheme(
    g: &Graph,
    problem: ProblemKind,
    r: f64,
) -> Result<SolutionReport<VertexSet>> {
    if problem != ProblemKind::IndependentDominatingSet {
        return Err(Error::InvalidParameter(format!(
            "{problem:?} is not supported by the minimization scheme"
        )));
    }
    let watch = Stopwatch::start();
    let ratio = RatioUsed::clamp(r, g.n())?;
    let k = ratio.budget(g.n());
    let mut best: Option<VertexSet> = None;
    let mut nodes = 0u64;
    for s in enumerate_subsets(g.n(), k) {
        nodes += 1;
        if best.is_none() && is_feasible(g, &s, problem) {
            best = Some(s);
        }
    }
    let mut notes = Vec::new();
    let solution = best.unwrap_or_else(|| {
        notes.push("no solution within budget; greedy maximal independent set".to_string());
        greedy_maximal_independent_set(g)
    });
    debug_assert!(is_feasible(g, &solution, problem));
    Ok(SolutionReport {
        value: solution.len() as u64,
        solution,
        guarantee: ratio.used,
        nodes_enumerated: nodes,
        wall_time_ms: watch.elapsed_ms(),
        ratio,
        notes,
    })
}

/// Subset enumeration up to size `⌊n/r⌋` for a weakly monotone maximization
/// problem; the value is exactly `min(opt, ⌊n/r⌋)`.
///
/// The reported guarantee is `n / ⌊n/r⌋`, which equals `r` when `n/r` is an
/// integer and is slightly larger otherwise (opt can reach `n`).
pub fn generic_max_scheme(
    g: &Graph,
    problem: ProblemKind,
    r: f64,
) -> Result<SolutionReport<VertexSet>> {
    match problem {
        ProblemKind::IndependentSet
        | ProblemKind::InducedPath
        | ProblemKind::InducedTree
        | ProblemKind::InducedForest => {}
        _ => {
            return Err(Error::InvalidParameter(format!(
                "{problem:?} is not weakly monotone"
            )))
        }
    }
    debug_assert_eq!(problem.objective(), Objective::Max);
    if g.n() == 0 {
        return Err(Error::NoFeasible);
    }
    let watch = Stopwatch::start();
    let ratio = RatioUsed::clamp(r, g.n())?;
    let k = ratio.budget(g.n());
    let mut best: Option<VertexSet> = None;
    let mut nodes = 0u64;
    for s in enumerate_subsets(g.n(), k) {
        nodes += 1;
        let larger = best.as_ref().is_none_or(|b| s.len() > b.len());
        if larger && is_feasible(g, &s, problem) {
            best = Some(s);
        }
    }
    let solution = best.ok_or(Error::NoFeasible)?;
    Ok(SolutionReport {
        value: solution.len() as u64,
        solution,
        guarantee: g.n() as f64 / k as f64,
        nodes_enumerated: nodes,
        wall_time_ms: watch.elapsed_ms(),
        ratio,
        notes: Vec::new(),
    })
}
