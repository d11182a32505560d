//! Seeded instance generators. The seed fully determines the instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use tradeoff_core::{BinaryCsp, BitSet, CnfFormula, Constraint, Graph, Literal, Metric, SetSystem};

#[derive(Debug, Error, Clone, PartialEq)]
#[error("bad instance spec: {0}")]
pub struct BadSpec(pub String);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InstanceSpec {
    /// `G(n, p)`.
    Graph { n: usize, p: f64 },
    /// Uniform weights in `0..=max_weight`, closed under shortest paths.
    Metric { n: usize, max_weight: u64 },
    /// Uniform 3-SAT: three distinct variables per clause, random signs.
    Cnf { vars: usize, clauses: usize },
    /// `m` sets over `n` elements, each element joining each set with
    /// probability `p`, plus a planted cover of `⌈m/3⌉` sets that partition
    /// the universe.
    SetSystem { n: usize, m: usize, p: f64 },
    /// Each variable pair is constrained with probability `p`; each symbol
    /// pair of a constraint is allowed with probability `q`.
    Csp { n: usize, s: usize, p: f64, q: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Instance {
    Graph(Graph),
    Metric(Metric),
    Cnf(CnfFormula),
    SetSystem(SetSystem),
    Csp(BinaryCsp),
}

fn probability(p: f64) -> Result<f64, BadSpec> {
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(BadSpec(format!("probability {p} outside [0, 1]")))
    }
}

pub fn generate(spec: &InstanceSpec, seed: u64) -> Result<Instance, BadSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match *spec {
        InstanceSpec::Graph { n, p } => Instance::Graph(random_graph(&mut rng, n, probability(p)?)),
        InstanceSpec::Metric { n, max_weight } => {
            if n == 0 {
                return Err(BadSpec("a metric needs at least one city".into()));
            }
            let rows = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                0
                            } else {
                                rng.gen_range(0..=max_weight)
                            }
                        })
                        .collect()
                })
                .collect();
            Instance::Metric(
                Metric::new(rows)
                    .map_err(|e| BadSpec(e.to_string()))?
                    .shortest_path_closure(),
            )
        }
        InstanceSpec::Cnf { vars, clauses } => {
            if vars < 3 {
                return Err(BadSpec("3-SAT needs at least three variables".into()));
            }
            let mut pool: Vec<usize> = (0..vars).collect();
            let clauses = (0..clauses)
                .map(|_| {
                    pool.partial_shuffle(&mut rng, 3)
                        .0
                        .iter()
                        .map(|&v| Literal::new(v, rng.gen_bool(0.5)))
                        .collect()
                })
                .collect();
            Instance::Cnf(CnfFormula::new(vars, clauses).map_err(|e| BadSpec(e.to_string()))?)
        }
        InstanceSpec::SetSystem { n, m, p } => {
            let p = probability(p)?;
            if m == 0 {
                return Err(BadSpec("a set system needs at least one set".into()));
            }
            let mut sets: Vec<BitSet> = (0..m)
                .map(|_| BitSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(p))))
                .collect();
            let mut order: Vec<usize> = (0..m).collect();
            let planted = order.partial_shuffle(&mut rng, m.div_ceil(3)).0.to_vec();
            for e in 0..n {
                sets[planted[rng.gen_range(0..planted.len())]].insert(e);
            }
            Instance::SetSystem(SetSystem::new(n, sets).map_err(|e| BadSpec(e.to_string()))?)
        }
        InstanceSpec::Csp { n, s, p, q } => {
            let (p, q) = (probability(p)?, probability(q)?);
            if s == 0 {
                return Err(BadSpec("alphabet must be nonempty".into()));
            }
            let mut constraints = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        let allowed = (0..s)
                            .flat_map(|a| (0..s).map(move |b| (a, b)))
                            .filter(|_| rng.gen_bool(q))
                            .collect();
                        constraints.push(Constraint { u, v, allowed });
                    }
                }
            }
            Instance::Csp(BinaryCsp::new(n, s, constraints).map_err(|e| BadSpec(e.to_string()))?)
        }
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("endpoints in range")
}
