use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One binary constraint: the value pairs `(value of u, value of v)` it allows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub u: usize,
    pub v: usize,
    pub allowed: Vec<(usize, usize)>,
}

impl Constraint {
    pub fn allows(&self, a: usize, b: usize) -> bool {
        self.allowed.contains(&(a, b))
    }
}

/// Binary constraint graph over an alphabet `0..alphabet_size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryCsp {
    num_vars: usize,
    alphabet_size: usize,
    constraints: Vec<Constraint>,
}

impl BinaryCsp {
    pub fn new(
        num_vars: usize,
        alphabet_size: usize,
        constraints: Vec<Constraint>,
    ) -> Result<Self> {
        for (k, c) in constraints.iter().enumerate() {
            if c.u == c.v {
                return Err(Error::InvalidInstance(format!(
                    "constraint {k} is a loop on {}",
                    c.u
                )));
            }
            if c.u >= num_vars || c.v >= num_vars {
                return Err(Error::InvalidInstance(format!(
                    "constraint {k} on ({}, {}) out of range",
                    c.u, c.v
                )));
            }
            if let Some(&(a, b)) = c
                .allowed
                .iter()
                .find(|(a, b)| *a >= alphabet_size || *b >= alphabet_size)
            {
                return Err(Error::InvalidInstance(format!(
                    "constraint {k} allows ({a}, {b}) outside the alphabet of size {alphabet_size}"
                )));
            }
            for (p, pair) in c.allowed.iter().enumerate() {
                if c.allowed[..p].contains(pair) {
                    return Err(Error::InvalidInstance(format!(
                        "constraint {k} lists {pair:?} twice"
                    )));
                }
            }
            let dup = constraints[..k]
                .iter()
                .any(|d| (d.u, d.v) == (c.u, c.v) || (d.u, d.v) == (c.v, c.u));
            if dup {
                return Err(Error::InvalidInstance(format!(
                    "duplicate constraint on ({}, {})",
                    c.u, c.v
                )));
            }
        }
        Ok(BinaryCsp {
            num_vars,
            alphabet_size,
            constraints,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn violated(&self, assignment: &[usize]) -> usize {
        self.constraints
            .iter()
            .filter(|c| !c.allows(assignment[c.u], assignment[c.v]))
            .count()
    }

    pub fn first_violated(&self, assignment: &[usize]) -> Option<usize> {
        self.constraints
            .iter()
            .position(|c| !c.allows(assignment[c.u], assignment[c.v]))
    }
}
