use serde::{Deserialize, Serialize};

use super::{RatioUsed, SolutionReport, Stopwatch};
use crate::error::Result;
use crate::exact::{check_cap, grundy_exact, GrundyWitness, OracleCaps};
use crate::graph::{enumerate_subsets_of_size, first_fit_coloring, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrundyOutcome {
    /// Vertex ordering whose first-fit coloring uses `value` colors.
    pub ordering: Vec<usize>,
    /// Best witness found among the enumerated subsets, in original indices.
    pub witness: GrundyWitness,
}

/// Colors the scheme is sure to find on an `n`-vertex graph with Grundy
/// number `gamma` when subsets of `k` vertices are searched.
///
/// Any set of classes of a Grundy witness is again a witness, and the `t`
/// smallest of `gamma` classes hold at most `⌊t·n/gamma⌋` vertices.
pub fn grundy_certified_colors(n: usize, k: usize, gamma: usize) -> usize {
    if gamma == 0 {
        return 0;
    }
    let t = (1..=gamma)
        .take_while(|&t| t * n / gamma <= k)
        .last()
        .unwrap_or(0);
    t.max(1)
}

/// Worst case of `gamma / grundy_certified_colors(n, k, gamma)` over
/// `1 ≤ gamma ≤ n`. Equals 1 when `k = n`.
pub fn grundy_guarantee(n: usize, k: usize) -> f64 {
    (1..=n)
        .map(|gamma| gamma as f64 / grundy_certified_colors(n, k, gamma) as f64)
        .fold(1.0, f64::max)
}

/// Grundy coloring with ratio `r`: exact Grundy numbers on every induced
/// subgraph of `⌊n/r⌋` vertices.
///
/// The best witness's classes are placed first (class by class), the rest of
/// the vertices follow by index, and first-fit runs on the whole graph in
/// that order. The reported guarantee is [`grundy_guarantee`], which is at
/// most about `r` but can exceed it when `Γ/r` is not an integer.
pub fn grundy_scheme(
    g: &Graph,
    r: f64,
    caps: &OracleCaps,
) -> Result<SolutionReport<GrundyOutcome>> {
    let watch = Stopwatch::start();
    let n = g.n();
    let ratio = RatioUsed::clamp(r, n)?;
    let k = ratio.budget(n).min(n);
    check_cap("grundy subset", k, caps.grundy)?;

    let mut best: Option<(usize, GrundyWitness)> = None;
    let mut nodes = 0u64;
    let mut consider = |subset: VertexSet| -> Result<()> {
        let (sub, map) = g.induced(&subset);
        let (value, witness, _) = grundy_exact(&sub, caps)?;
        nodes += 1;
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            let classes = witness
                .classes
                .iter()
                .map(|c| VertexSet::from_indices(n, c.iter().map(|v| map[v])))
                .collect();
            best = Some((value, GrundyWitness { classes }));
        }
        Ok(())
    };
    if k >= n {
        consider(g.vertices())?;
    } else {
        for subset in enumerate_subsets_of_size(n, k) {
            consider(subset)?;
        }
    }
    let witness = best.map(|(_, w)| w).unwrap_or(GrundyWitness {
        classes: Vec::new(),
    });
    let mut ordering = witness.ordering();
    let placed = VertexSet::from_indices(n, ordering.iter().copied());
    ordering.extend((0..n).filter(|v| !placed.contains(*v)));
    let (colors, _) = first_fit_coloring(g, &ordering);
    Ok(SolutionReport {
        value: colors as u64,
        solution: GrundyOutcome { ordering, witness },
        guarantee: grundy_guarantee(n, k),
        nodes_enumerated: nodes,
        wall_time_ms: watch.elapsed_ms(),
        ratio,
        notes: Vec::new(),
    })
}
