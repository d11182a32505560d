//! Dispatch from problem names to schemes and exact oracles.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use tradeoff_core::exact::{
    grundy_exact, held_karp, max_independent_set_exact, max_induced_exact, max_minimal_vc_exact,
    min_ids_exact, set_cover_exact, InducedKind,
};
use tradeoff_core::graph::{first_fit_coloring, is_feasible, Objective};
use tradeoff_core::schemes::{
    atsp_scheme, generic_max_scheme, generic_min_scheme, grundy_guarantee, grundy_scheme,
    mmvc_scheme, partition_scheme_mis, setcover_mdelta, setcover_merge_approx, RatioUsed,
    SolutionReport,
};
use tradeoff_core::{Error, Graph, OracleCaps, ProblemKind, VertexSet};

use crate::generate::Instance;

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    /// Min independent dominating set (generic scheme).
    Mids,
    /// Max minimal vertex cover (matching scheme, rho = ⌈r⌉).
    Mmvc,
    /// Max induced path (generic scheme).
    Ipath,
    /// Max induced tree (generic scheme).
    Itree,
    /// Max induced forest (generic scheme).
    Iforest,
    /// Max independent set (partition scheme, ⌊r⌋ blocks).
    Mis,
    /// Asymmetric TSP (cycle-cover scheme).
    Atsp,
    /// Max Grundy coloring (witness scheme).
    Grundy,
    /// Min set cover (merge scheme with --ratio, m^δ scheme with --delta).
    Setcover,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Dimacs,
    Cnf,
    Matrix,
    Sets,
    Csp,
}

/// Scheme parameter as given on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Param {
    Ratio(f64),
    Delta(f64),
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Mids => "mids",
            Problem::Mmvc => "mmvc",
            Problem::Ipath => "ipath",
            Problem::Itree => "itree",
            Problem::Iforest => "iforest",
            Problem::Mis => "mis",
            Problem::Atsp => "atsp",
            Problem::Grundy => "grundy",
            Problem::Setcover => "setcover",
        }
    }

    pub fn objective(self) -> Objective {
        match self {
            Problem::Mids | Problem::Atsp | Problem::Setcover => Objective::Min,
            _ => Objective::Max,
        }
    }

    pub fn input_format(self) -> Format {
        match self {
            Problem::Atsp => Format::Matrix,
            Problem::Setcover => Format::Sets,
            _ => Format::Dimacs,
        }
    }

    fn induced_kind(self) -> Option<(InducedKind, ProblemKind)> {
        match self {
            Problem::Ipath => Some((InducedKind::Path, ProblemKind::InducedPath)),
            Problem::Itree => Some((InducedKind::Tree, ProblemKind::InducedTree)),
            Problem::Iforest => Some((InducedKind::Forest, ProblemKind::InducedForest)),
            _ => None,
        }
    }

    /// Largest scheme parameter whose certified ratio is at most `target`
    /// on an instance of the given size (vertices, cities or sets).
    pub fn parameter_for_target(self, target: f64, size: usize) -> f64 {
        let size = size.max(1);
        match self {
            Problem::Ipath | Problem::Itree | Problem::Iforest => {
                // budget ⌈n/target⌉ keeps min(opt, budget) ≥ opt/target
                let budget = (size as f64 / target).ceil().max(1.0);
                size as f64 / budget
            }
            Problem::Mis | Problem::Mmvc | Problem::Setcover => target.floor().max(1.0),
            Problem::Atsp => 2f64.powi((target.floor() as i32 - 1).max(0)),
            Problem::Grundy => (1..=size)
                .find(|&k| grundy_guarantee(size, k) <= target + 1e-12)
                .map_or(1.0, |k| size as f64 / k as f64),
            Problem::Mids => target,
        }
    }
}

/// Result of running one scheme, with the solution as 1-based indices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub problem: Problem,
    pub size: usize,
    pub value: u64,
    pub guarantee: f64,
    pub nodes_enumerated: u64,
    pub wall_time_ms: f64,
    pub ratio: RatioUsed,
    /// `vertices`, `tour`, `ordering` or `sets`.
    pub solution_kind: String,
    pub solution: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Outcome {
    fn from_report<S>(
        problem: Problem,
        size: usize,
        rep: SolutionReport<S>,
        kind: &str,
        items: Vec<usize>,
    ) -> Self {
        Outcome {
            problem,
            size,
            value: rep.value,
            guarantee: rep.guarantee,
            nodes_enumerated: rep.nodes_enumerated,
            wall_time_ms: rep.wall_time_ms,
            ratio: rep.ratio,
            solution_kind: kind.to_string(),
            solution: items.into_iter().map(|i| i + 1).collect(),
            notes: rep.notes,
        }
    }
}

fn wrong_instance(problem: Problem) -> Error {
    Error::InvalidParameter(format!(
        "problem {} expects a {:?} instance",
        problem.name(),
        problem.input_format()
    ))
}

fn ratio_of(problem: Problem, param: Param) -> Result<f64, Error> {
    match param {
        Param::Ratio(r) => Ok(r),
        Param::Delta(_) => Err(Error::InvalidParameter(format!(
            "--delta applies to setcover only, not {}",
            problem.name()
        ))),
    }
}

pub fn instance_size(instance: &Instance) -> usize {
    match instance {
        Instance::Graph(g) => g.n(),
        Instance::Metric(m) => m.n(),
        Instance::SetSystem(s) => s.num_sets(),
        Instance::Cnf(phi) => phi.num_vars(),
        Instance::Csp(c) => c.num_vars(),
    }
}

/// Runs the scheme for `problem` and checks the solution it returns.
pub fn solve(
    problem: Problem,
    instance: &Instance,
    param: Param,
    caps: &OracleCaps,
) -> Result<Outcome, Error> {
    let size = instance_size(instance);
    let vertices = |rep: SolutionReport<VertexSet>| {
        let items = rep.solution.iter().collect();
        Outcome::from_report(problem, size, rep, "vertices", items)
    };
    let outcome = match (problem, instance) {
        (Problem::Mids, Instance::Graph(g)) => vertices(generic_min_scheme(
            g,
            ProblemKind::IndependentDominatingSet,
            ratio_of(problem, param)?,
        )?),
        (Problem::Ipath | Problem::Itree | Problem::Iforest, Instance::Graph(g)) => {
            let (_, kind) = problem.induced_kind().unwrap();
            vertices(generic_max_scheme(g, kind, ratio_of(problem, param)?)?)
        }
        (Problem::Mis, Instance::Graph(g)) => {
            let r = ratio_of(problem, param)?;
            let ratio = RatioUsed::clamp(r, g.n())?;
            let blocks = (ratio.used.floor() as usize).max(1);
            let mut rep = partition_scheme_mis(g, blocks, caps)?;
            rep.ratio = RatioUsed {
                requested: r,
                used: blocks as f64,
                clamped: blocks as f64 != r,
            };
            vertices(rep)
        }
        (Problem::Mmvc, Instance::Graph(g)) => {
            let r = ratio_of(problem, param)?;
            if !r.is_finite() || r < 1.0 {
                return Err(Error::InvalidRatio(r));
            }
            let mut rep = mmvc_scheme(g, r.ceil() as usize)?;
            rep.ratio.requested = r;
            rep.ratio.clamped = rep.ratio.used != r;
            vertices(rep)
        }
        (Problem::Grundy, Instance::Graph(g)) => {
            let rep = grundy_scheme(g, ratio_of(problem, param)?, caps)?;
            let order = rep.solution.ordering.clone();
            Outcome::from_report(problem, size, rep, "ordering", order)
        }
        (Problem::Atsp, Instance::Metric(m)) => {
            let rep = atsp_scheme(m, ratio_of(problem, param)?, caps)?;
            let order = rep.solution.order.clone();
            Outcome::from_report(problem, size, rep, "tour", order)
        }
        (Problem::Setcover, Instance::SetSystem(sys)) => match param {
            Param::Delta(delta) => {
                let rep = setcover_mdelta(sys, delta, caps.set_cover)?;
                let items = rep.solution.indices.clone();
                let (branch, produced_by) = (rep.solution.branch, rep.solution.produced_by);
                let mut out = Outcome::from_report(problem, size, rep, "sets", items);
                out.notes.push(format!("m^delta = {:.4}", out.guarantee));
                out.notes
                    .push(format!("branch {branch:?}, cover from {produced_by:?}"));
                out
            }
            Param::Ratio(r) => {
                let watch = std::time::Instant::now();
                let ratio = RatioUsed::clamp(r, sys.num_sets())?;
                let sol = setcover_merge_approx(sys, ratio.used, caps.set_cover)?;
                Outcome {
                    problem,
                    size,
                    value: sol.size() as u64,
                    guarantee: ratio.used.floor().max(1.0),
                    nodes_enumerated: sol.nodes,
                    wall_time_ms: watch.elapsed().as_secs_f64() * 1e3,
                    ratio,
                    solution_kind: "sets".into(),
                    solution: sol.indices.iter().map(|i| i + 1).collect(),
                    notes: Vec::new(),
                }
            }
        },
        _ => return Err(wrong_instance(problem)),
    };
    check_solution(problem, instance, &outcome)?;
    Ok(outcome)
}

/// Recomputes feasibility and value of an outcome from scratch.
pub fn check_solution(problem: Problem, instance: &Instance, out: &Outcome) -> Result<(), Error> {
    let zero_based: Vec<usize> = out.solution.iter().map(|i| i - 1).collect();
    let bad = |what: &str| {
        Err(Error::InvalidInstance(format!(
            "{} returned {what}",
            problem.name()
        )))
    };
    let as_set = |g: &Graph| VertexSet::from_indices(g.n(), zero_based.iter().copied());
    match (problem, instance) {
        (Problem::Grundy, Instance::Graph(g)) => {
            let mut sorted = zero_based.clone();
            sorted.sort_unstable();
            if sorted != (0..g.n()).collect::<Vec<_>>()
                || first_fit_coloring(g, &zero_based).0 as u64 != out.value
            {
                return bad("an ordering that does not replay");
            }
        }
        (Problem::Atsp, Instance::Metric(m)) => {
            let mut sorted = zero_based.clone();
            sorted.sort_unstable();
            if sorted != (0..m.n()).collect::<Vec<_>>() || m.tour_cost(&zero_based) != out.value {
                return bad("an invalid tour");
            }
        }
        (Problem::Setcover, Instance::SetSystem(sys)) => {
            if !sys.is_cover(&zero_based) || zero_based.len() as u64 != out.value {
                return bad("a non-cover");
            }
        }
        (_, Instance::Graph(g)) => {
            let kind = match problem {
                Problem::Mids => ProblemKind::IndependentDominatingSet,
                Problem::Mmvc => ProblemKind::MinimalVertexCover,
                Problem::Mis => ProblemKind::IndependentSet,
                p => p.induced_kind().ok_or_else(|| wrong_instance(p))?.1,
            };
            let set = as_set(g);
            if !is_feasible(g, &set, kind) || set.len() as u64 != out.value {
                return bad("an infeasible vertex set");
            }
        }
        _ => return Err(wrong_instance(problem)),
    }
    Ok(())
}

/// Exact optimum from the matching oracle.
pub fn oracle(problem: Problem, instance: &Instance, caps: &OracleCaps) -> Result<u64, Error> {
    let v = match (problem, instance) {
        (Problem::Mids, Instance::Graph(g)) => min_ids_exact(g, caps)?.value,
        (Problem::Mmvc, Instance::Graph(g)) => max_minimal_vc_exact(g, caps)?.value,
        (Problem::Mis, Instance::Graph(g)) => max_independent_set_exact(g, caps)?.value,
        (Problem::Ipath | Problem::Itree | Problem::Iforest, Instance::Graph(g)) => {
            max_induced_exact(g, problem.induced_kind().unwrap().0, caps)?.value
        }
        (Problem::Grundy, Instance::Graph(g)) => grundy_exact(g, caps)?.0,
        (Problem::Atsp, Instance::Metric(m)) => return Ok(held_karp(m, caps.held_karp)?.0.cost),
        (Problem::Setcover, Instance::SetSystem(sys)) => {
            set_cover_exact(sys, caps.set_cover)?.size()
        }
        _ => return Err(wrong_instance(problem)),
    };
    Ok(v as u64)
}

/// Ratio between value and optimum, oriented to be at least 1.
pub fn achieved_ratio(objective: Objective, value: u64, opt: u64) -> f64 {
    let (num, den) = match objective {
        Objective::Min => (value, opt),
        Objective::Max => (opt, value),
    };
    match (num, den) {
        (0, 0) => 1.0,
        (_, 0) => f64::INFINITY,
        (a, b) => a as f64 / b as f64,
    }
}

/// `value ≤ g·opt` for minimization, `g·value ≥ opt` for maximization.
/// Exact for integer `g`; fractional guarantees get a 1e-9 relative slack.
pub fn certifies(objective: Objective, value: u64, opt: u64, guarantee: f64) -> bool {
    let (small, large) = match objective {
        Objective::Min => (value, opt),
        Objective::Max => (opt, value),
    };
    if guarantee.fract() == 0.0 && guarantee < u32::MAX as f64 {
        return small as u128 <= guarantee as u128 * large as u128;
    }
    small as f64 <= guarantee * large as f64 * (1.0 + 1e-9)
}
