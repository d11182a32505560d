//! Hardness gadgets from the lower-bound constructions. Each gadget keeps a
//! per-vertex role so its structure can be checked without re-deriving it.

mod csp_mids;
mod sat_path;
mod simple;

use serde::{Deserialize, Serialize};

use crate::cnf::Literal;
use crate::graph::Graph;

pub use csp_mids::{csp_to_mids, mids_witness};
pub use sat_path::{induced_path_witness, sat_to_induced_path};
pub use simple::{add_pendants, add_universal_vertex};

/// What a gadget vertex stands for. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    /// Connector `v^copy_clause` of the SAT gadget.
    Connector {
        copy: usize,
        clause: usize,
    },
    /// Clique vertex for one satisfying partial assignment of a clause; the
    /// literals listed are the ones made true.
    ClauseAssignment {
        copy: usize,
        clause: usize,
        assignment: Vec<Literal>,
    },
    /// `w_{var,symbol}` of the CSP gadget.
    Symbol {
        var: usize,
        symbol: usize,
    },
    /// Dummy vertex of the clique of `var`.
    Dummy {
        var: usize,
    },
    /// Member of the independent set attached to an allowed pair of a constraint.
    PairSet {
        constraint: usize,
        pair: (usize, usize),
        member: usize,
    },
    /// Member of the independent set attached to a whole constraint.
    ConstraintSet {
        constraint: usize,
        member: usize,
    },
    Original {
        vertex: usize,
    },
    Pendant {
        owner: usize,
        index: usize,
    },
    Universal,
}

impl Role {
    pub fn tag(&self) -> &'static str {
        match self {
            Role::Connector { .. } => "connector",
            Role::ClauseAssignment { .. } => "clause",
            Role::Symbol { .. } => "symbol",
            Role::Dummy { .. } => "dummy",
            Role::PairSet { .. } => "pair-set",
            Role::ConstraintSet { .. } => "constraint-set",
            Role::Original { .. } => "original",
            Role::Pendant { .. } => "pendant",
            Role::Universal => "universal",
        }
    }
}

/// A constructed graph together with the role of each vertex and the
/// replication parameter it was built with.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub r: usize,
}

impl GadgetGraph {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Vertices whose role satisfies `pred`, in index order.
    pub fn vertices_where(&self, pred: impl Fn(&Role) -> bool) -> Vec<usize> {
        (0..self.roles.len())
            .filter(|&v| pred(&self.roles[v]))
            .collect()
    }
}
