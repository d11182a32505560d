use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A literal over a 0-based variable index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn new(var: usize, positive: bool) -> Self {
        Literal { var, positive }
    }

    /// DIMACS encoding: 1-based, negative for negated literals.
    pub fn from_dimacs(x: i64) -> Option<Self> {
        if x == 0 {
            return None;
        }
        Some(Literal {
            var: x.unsigned_abs() as usize - 1,
            positive: x > 0,
        })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

pub type Clause = Vec<Literal>;

/// CNF formula whose clauses hold one to three literals over distinct variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self> {
        for (i, c) in clauses.iter().enumerate() {
            if c.is_empty() || c.len() > 3 {
                return Err(Error::InvalidInstance(format!(
                    "clause {i} has {} literals; expected 1 to 3",
                    c.len()
                )));
            }
            for (a, l) in c.iter().enumerate() {
                if l.var >= num_vars {
                    return Err(Error::InvalidInstance(format!(
                        "clause {i} mentions variable {} but the formula has {num_vars}",
                        l.var + 1
                    )));
                }
                if c[..a].iter().any(|p| p.var == l.var) {
                    return Err(Error::InvalidInstance(format!(
                        "clause {i} repeats variable {}",
                        l.var + 1
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Builds a formula from DIMACS-style signed literals.
    pub fn from_dimacs(num_vars: usize, clauses: &[&[i64]]) -> Result<Self> {
        let clauses = clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&x| {
                        Literal::from_dimacs(x).ok_or_else(|| {
                            Error::InvalidInstance("literal 0 inside a clause".into())
                        })
                    })
                    .collect::<Result<Clause>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    /// Index of the first clause `assignment` falsifies.
    pub fn first_violated(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| !c.iter().any(|l| l.eval(assignment)))
    }

    /// Brute-force satisfiability; returns the first satisfying assignment in
    /// binary counting order.
    pub fn brute_force_solve(&self) -> Option<Vec<bool>> {
        assert!(
            self.num_vars < 30,
            "brute force over {} variables",
            self.num_vars
        );
        (0u64..1 << self.num_vars)
            .map(|bits| {
                (0..self.num_vars)
                    .map(|v| bits >> v & 1 == 1)
                    .collect::<Vec<_>>()
            })
            .find(|a| self.is_satisfied_by(a))
    }
}
