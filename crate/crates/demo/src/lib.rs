//! Three interactive views over the schemes, each returning JSON for the
//! static page in `www/`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;
use tradeoff_core::exact::{
    held_karp, max_independent_set_exact, max_induced_exact, max_minimal_vc_exact, min_ids_exact,
};
use tradeoff_core::exact::{InducedKind, OracleCaps};
use tradeoff_core::graph::{maximal_matching, Graph, ProblemKind};
use tradeoff_core::schemes::{
    atsp_scheme, generic_max_scheme, generic_min_scheme, min_weight_cycle_cover, mmvc_scheme,
};
use tradeoff_core::{Error, Metric};
use wasm_bindgen::prelude::*;

/// Largest graph the Pareto view enumerates.
pub const MAX_PARETO_N: usize = 18;
/// Largest city count for which the optimal tour is shown.
pub const MAX_EXACT_CITIES: usize = 13;
pub const MAX_CITIES: usize = 40;
pub const MAX_MMVC_N: usize = 40;

#[derive(Debug, Error)]
pub enum DemoError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Input(String),
}

fn check_range(what: &str, value: usize, lo: usize, hi: usize) -> Result<(), DemoError> {
    if (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(DemoError::Input(format!(
            "{what} must lie in {lo}..={hi}, got {value}"
        )))
    }
}

fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("endpoints below n")
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphView {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphView {
    fn from(g: &Graph) -> Self {
        GraphView {
            n: g.n(),
            edges: g.edges(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ParetoPoint {
    pub r: f64,
    pub budget: usize,
    pub nodes: u64,
    pub value: u64,
    pub guarantee: f64,
    pub solution: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Pareto {
    pub problem: String,
    pub graph: GraphView,
    pub opt: usize,
    pub points: Vec<ParetoPoint>,
}

/// Runs the generic scheme once per distinct subset budget `k = n, …, 1`
/// (ratio `n/k`) on a seeded `G(n, p)`.
///
/// `problem` is `mids`, `mis` or `ipath`.
pub fn pareto(problem: &str, n: usize, p: f64, seed: u64) -> Result<Pareto, DemoError> {
    check_range("n", n, 1, MAX_PARETO_N)?;
    let g = random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
    let caps = OracleCaps::default();
    let (kind, opt) = match problem {
        "mids" => (
            ProblemKind::IndependentDominatingSet,
            min_ids_exact(&g, &caps)?.value,
        ),
        "mis" => (
            ProblemKind::IndependentSet,
            max_independent_set_exact(&g, &caps)?.value,
        ),
        "ipath" => (
            ProblemKind::InducedPath,
            max_induced_exact(&g, InducedKind::Path, &caps)?.value,
        ),
        other => return Err(DemoError::Input(format!("unknown problem `{other}`"))),
    };
    let mut points = Vec::with_capacity(n);
    for k in (1..=n).rev() {
        let r = n as f64 / k as f64;
        let rep = match kind {
            ProblemKind::IndependentDominatingSet => generic_min_scheme(&g, kind, r)?,
            _ => generic_max_scheme(&g, kind, r)?,
        };
        points.push(ParetoPoint {
            r,
            budget: k,
            nodes: rep.nodes_enumerated,
            value: rep.value,
            guarantee: rep.guarantee,
            solution: rep.solution.iter().collect(),
        });
    }
    Ok(Pareto {
        problem: problem.to_string(),
        graph: (&g).into(),
        opt,
        points,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct AtspView {
    pub points: Vec<(f64, f64)>,
    pub cycle_cover: Vec<Vec<usize>>,
    pub cycle_cover_cost: u64,
    pub tour: Vec<usize>,
    pub tour_cost: u64,
    pub guarantee: f64,
    pub optimal_cost: Option<u64>,
}

/// Cities at seeded random points in the unit square. Moving up costs 50%
/// extra, which makes the instance asymmetric; the shortest-path closure
/// keeps it metric.
pub fn random_cities(n: usize, seed: u64) -> (Vec<(f64, f64)>, Metric) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.gen::<f64>(), rng.gen::<f64>()))
        .collect();
    let rows = points
        .iter()
        .map(|&(x1, y1)| {
            points
                .iter()
                .map(|&(x2, y2)| {
                    let d = (x2 - x1).hypot(y2 - y1) * 1000.0;
                    let climb = (y1 - y2).max(0.0) * 500.0;
                    (d + climb).round() as u64
                })
                .collect()
        })
        .collect();
    let metric = Metric::new(rows).expect("square matrix with zero diagonal");
    (points, metric.shortest_path_closure())
}

pub fn atsp(n: usize, r: f64, seed: u64) -> Result<AtspView, DemoError> {
    check_range("city count", n, 2, MAX_CITIES)?;
    let (points, metric) = random_cities(n, seed);
    let caps = OracleCaps::default();
    let cover = min_weight_cycle_cover(&metric)?;
    let rep = atsp_scheme(&metric, r, &caps)?;
    let optimal_cost = if n <= MAX_EXACT_CITIES {
        Some(held_karp(&metric, caps.held_karp)?.0.cost)
    } else {
        None
    };
    Ok(AtspView {
        points,
        cycle_cover: cover.circuits,
        cycle_cover_cost: cover.cost,
        tour: rep.solution.order,
        tour_cost: rep.value,
        guarantee: rep.guarantee,
        optimal_cost,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct MmvcView {
    pub graph: GraphView,
    pub matching: Vec<(usize, usize)>,
    pub cover: Vec<usize>,
    pub rho: f64,
    pub nodes: u64,
    pub opt: Option<usize>,
}

/// Max minimal vertex cover with parameter `rho` on a seeded `G(n, p)`; the
/// exact optimum is included up to 30 vertices.
pub fn mmvc(n: usize, p: f64, rho: usize, seed: u64) -> Result<MmvcView, DemoError> {
    check_range("n", n, 1, MAX_MMVC_N)?;
    let g = random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
    let rep = mmvc_scheme(&g, rho)?;
    let opt = if n <= 30 {
        Some(max_minimal_vc_exact(&g, &OracleCaps::default())?.value)
    } else {
        None
    };
    Ok(MmvcView {
        graph: (&g).into(),
        matching: maximal_matching(&g),
        cover: rep.solution.iter().collect(),
        rho: rep.ratio.used,
        nodes: rep.nodes_enumerated,
        opt,
    })
}

fn to_js<T: Serialize>(result: Result<T, DemoError>) -> Result<String, JsError> {
    let value = result.map_err(|e| JsError::new(&e.to_string()))?;
    serde_json::to_string(&value).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = paretoSweep)]
pub fn pareto_sweep(problem: &str, n: usize, p: f64, seed: u64) -> Result<String, JsError> {
    to_js(pareto(problem, n, p, seed))
}

#[wasm_bindgen(js_name = atspTour)]
pub fn atsp_tour(n: usize, r: f64, seed: u64) -> Result<String, JsError> {
    to_js(atsp(n, r, seed))
}

#[wasm_bindgen(js_name = mmvcCover)]
pub fn mmvc_cover(n: usize, p: f64, rho: usize, seed: u64) -> Result<String, JsError> {
    to_js(mmvc(n, p, rho, seed))
}
