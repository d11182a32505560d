//! Sweep rows and their CSV / JSON encodings.

use serde::{Deserialize, Serialize};
use tradeoff_core::{Error, OracleCaps};

use crate::generate::Instance;
use crate::problem::{achieved_ratio, certifies, oracle, solve, Outcome, Param, Problem};

/// One (instance, ratio) cell of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub problem: Problem,
    pub instance: String,
    pub size: usize,
    pub r: f64,
    pub guarantee: f64,
    pub value: u64,
    pub opt: Option<u64>,
    pub ratio: Option<f64>,
    pub nodes: u64,
    pub ms: f64,
}

impl Row {
    pub fn from_outcome(instance: &str, r: f64, out: &Outcome, opt: Option<u64>) -> Self {
        Row {
            problem: out.problem,
            instance: instance.to_string(),
            size: out.size,
            r,
            guarantee: out.guarantee,
            value: out.value,
            opt,
            ratio: opt.map(|o| achieved_ratio(out.problem.objective(), out.value, o)),
            nodes: out.nodes_enumerated,
            ms: out.wall_time_ms,
        }
    }

    /// True when no oracle value is attached or the value is within the
    /// guarantee of it.
    pub fn certified(&self) -> bool {
        self.opt
            .is_none_or(|opt| certifies(self.problem.objective(), self.value, opt, self.guarantee))
    }
}

/// Runs `problem` on every instance at every ratio. Rows come back sorted by
/// (instance, r) whatever order the inputs were given in.
pub fn sweep(
    problem: Problem,
    instances: &[(String, Instance)],
    ratios: &[f64],
    with_oracle: bool,
    caps: &OracleCaps,
) -> Result<Vec<Row>, Error> {
    let mut rows = Vec::with_capacity(instances.len() * ratios.len());
    for (id, instance) in instances {
        let opt = if with_oracle {
            Some(oracle(problem, instance, caps)?)
        } else {
            None
        };
        for &r in ratios {
            let out = solve(problem, instance, Param::Ratio(r), caps)?;
            rows.push(Row::from_outcome(id, r, &out, opt));
        }
    }
    rows.sort_by(|a, b| a.instance.cmp(&b.instance).then(a.r.total_cmp(&b.r)));
    Ok(rows)
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record([
            "problem",
            "instance",
            "size",
            "r",
            "guarantee",
            "value",
            "opt",
            "ratio",
            "nodes",
            "ms",
        ])
        .expect("in-memory write");
    }
    for row in rows {
        w.serialize(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn to_json(rows: &[Row]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}

/// Scheme value, oracle value and the certification verdict for one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub outcome: Outcome,
    pub opt: u64,
    pub ratio: f64,
    pub pass: bool,
}

pub fn verify(
    problem: Problem,
    instance: &Instance,
    param: Param,
    caps: &OracleCaps,
) -> Result<Verification, Error> {
    let outcome = solve(problem, instance, param, caps)?;
    let opt = oracle(problem, instance, caps)?;
    let objective = problem.objective();
    Ok(Verification {
        ratio: achieved_ratio(objective, outcome.value, opt),
        pass: certifies(objective, outcome.value, opt, outcome.guarantee),
        outcome,
        opt,
    })
}
