use super::{GadgetGraph, Role};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Attaches `r` pendant vertices to every vertex of `g`. Original vertices
/// keep their indices; the pendants of vertex `v` follow at
/// `n + v·r .. n + (v+1)·r`. The maximum minimal vertex cover of the result
/// is `r·α(g) + n − α(g)`.
pub fn add_pendants(g: &Graph, r: usize) -> Result<GadgetGraph> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let n = g.n();
    let mut roles: Vec<Role> = (0..n).map(|vertex| Role::Original { vertex }).collect();
    let mut edges = g.edges();
    for owner in 0..n {
        for index in 0..r {
            edges.push((owner, roles.len()));
            roles.push(Role::Pendant { owner, index });
        }
    }
    let graph = Graph::from_edges(roles.len(), edges)?;
    Ok(GadgetGraph { graph, roles, r })
}

/// Adds vertex `n` adjacent to every vertex of `g`.
pub fn add_universal_vertex(g: &Graph) -> GadgetGraph {
    let n = g.n();
    let mut roles: Vec<Role> = (0..n).map(|vertex| Role::Original { vertex }).collect();
    roles.push(Role::Universal);
    let edges = g.edges().into_iter().chain((0..n).map(|v| (v, n)));
    let graph = Graph::from_edges(n + 1, edges).expect("endpoints in range");
    GadgetGraph { graph, roles, r: 1 }
}
