//! Time–approximation trade-off schemes for problems that resist
//! constant-factor approximation in polynomial time.
//!
//! Each scheme takes a target ratio `r` and spends exponential time in
//! roughly `n / r` to reach it:
//!
//! * [`schemes::generic_min_scheme`] / [`schemes::generic_max_scheme`]: subset
//!   enumeration up to size `n / r` (independent dominating set, induced
//!   path / tree / forest).
//! * [`schemes::mmvc_scheme`]: maximum minimal vertex cover through a maximal
//!   matching split into `rho` groups.
//! * [`schemes::atsp_scheme`]: repeated cycle covers down to `n / r` cities,
//!   then Held–Karp.
//! * [`schemes::grundy_scheme`]: exact Grundy numbers on all `n / r`-subsets.
//! * [`schemes::setcover_mdelta`]: `m^δ`-approximate set cover.
//!
//! [`exact`] holds the exponential oracles used to certify the ratios and
//! [`reductions`] builds the hardness gadgets used as adversarial inputs.

pub mod bitset;
pub mod cnf;
pub mod csp;
pub mod error;
pub mod exact;
pub mod graph;
pub mod metric;
pub mod reductions;
pub mod schemes;
pub mod set_system;

pub use bitset::BitSet;
pub use cnf::{CnfFormula, Literal};
pub use csp::{BinaryCsp, Constraint};
pub use error::{Error, Result};
pub use exact::OracleCaps;
pub use graph::{Graph, ProblemKind, VertexSet};
pub use metric::Metric;
pub use set_system::SetSystem;
