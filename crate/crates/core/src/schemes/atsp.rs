use serde::{Deserialize, Serialize};

use super::{min_cost_assignment, RatioUsed, SolutionReport, Stopwatch};
use crate::error::{Error, Result};
use crate::exact::{held_karp, OracleCaps, Tour};
use crate::metric::Metric;

/// Vertex-disjoint circuits covering every city.
///
/// Each circuit starts at its lowest-index city and follows the successor
/// order; circuits are sorted by their first city.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCover {
    pub circuits: Vec<Vec<usize>>,
    pub cost: u64,
}

/// Minimum-cost cycle cover as an assignment problem between two copies of
/// the cities, with self-assignment forbidden.
pub fn min_weight_cycle_cover(metric: &Metric) -> Result<CycleCover> {
    let n = metric.n();
    if n < 2 {
        return Err(Error::InvalidInstance(
            "a cycle cover needs at least two cities".into(),
        ));
    }
    let cost: Vec<Vec<Option<u64>>> = (0..n)
        .map(|i| (0..n).map(|j| (i != j).then(|| metric.d(i, j))).collect())
        .collect();
    let (succ, total) = min_cost_assignment(&cost).expect("n >= 2 admits a derangement");
    let mut seen = vec![false; n];
    let mut circuits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut circuit = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            circuit.push(v);
            v = succ[v];
        }
        circuits.push(circuit);
    }
    Ok(CycleCover {
        circuits,
        cost: total,
    })
}

/// Certified ratio of [`atsp_scheme`]: `⌈log₂ r⌉ + 1`.
pub fn atsp_guarantee(r: f64) -> f64 {
    r.log2().ceil().max(0.0) + 1.0
}

/// ATSP with ratio `⌈log₂ r⌉ + 1`.
///
/// Repeatedly replaces each circuit of a minimum cycle cover by its
/// lowest-index city until at most `max(2, ⌈n/r⌉)` cities remain, solves that
/// core exactly, then splices the circuits back in: at each representative
/// the walk runs once around its circuit before moving on. Every level at
/// least halves the city count, and each spliced circuit costs at most what
/// its cover contributed.
pub fn atsp_scheme(metric: &Metric, r: f64, caps: &OracleCaps) -> Result<SolutionReport<Tour>> {
    let watch = Stopwatch::start();
    let n = metric.n();
    if n == 0 {
        return Err(Error::InvalidInstance(
            "a tour needs at least one city".into(),
        ));
    }
    let ratio = RatioUsed::clamp(r, n)?;
    if !metric.triangle_checked() {
        if let Some((i, j, k)) = metric.triangle_violation() {
            return Err(Error::TriangleViolated { i, j, k });
        }
    }
    let base = ((n as f64 / ratio.used).ceil() as usize).max(2);
    let mut ctx = Recursion {
        metric,
        base,
        cap: caps.held_karp,
        nodes: 0,
        depth: 0,
    };
    let cities: Vec<usize> = (0..n).collect();
    let order = ctx.solve(&cities, 0)?;
    let tour = Tour {
        cost: metric.tour_cost(&order),
        order,
    };
    Ok(SolutionReport {
        value: tour.cost,
        solution: tour,
        guarantee: atsp_guarantee(ratio.used),
        nodes_enumerated: ctx.nodes,
        wall_time_ms: watch.elapsed_ms(),
        ratio,
        notes: vec![format!(
            "base size {base}, cycle-cover levels {}",
            ctx.depth
        )],
    })
}

struct Recursion<'a> {
    metric: &'a Metric,
    base: usize,
    cap: usize,
    nodes: u64,
    depth: usize,
}

impl Recursion<'_> {
    /// Tour over `cities` (ascending global indices) as a global order.
    fn solve(&mut self, cities: &[usize], level: usize) -> Result<Vec<usize>> {
        let sub = self.metric.sub_metric(cities);
        if cities.len() <= self.base {
            let (tour, states) = held_karp(&sub, self.cap)?;
            self.nodes += states;
            return Ok(tour.order.iter().map(|&c| cities[c]).collect());
        }
        let cover = min_weight_cycle_cover(&sub)?;
        self.depth = self.depth.max(level + 1);
        if cover.circuits.len() == 1 {
            return Ok(cover.circuits[0].iter().map(|&c| cities[c]).collect());
        }
        let reps: Vec<usize> = cover.circuits.iter().map(|c| cities[c[0]]).collect();
        let rep_tour = self.solve(&reps, level + 1)?;
        let mut order = Vec::with_capacity(cities.len());
        for rep in rep_tour {
            let k = reps
                .binary_search(&rep)
                .expect("representative of a circuit");
            order.extend(cover.circuits[k].iter().map(|&c| cities[c]));
        }
        Ok(order)
    }
}
