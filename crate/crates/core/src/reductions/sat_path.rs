use super::{GadgetGraph, Role};
use crate::cnf::{CnfFormula, Literal};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Satisfying partial assignments of a clause, as the literals they make
/// true, in order from all-positive to all-negative.
fn satisfying_partials(clause: &[Literal]) -> Vec<Vec<Literal>> {
    let k = clause.len();
    (0..1usize << k)
        .map(|bits| {
            clause
                .iter()
                .enumerate()
                .map(|(t, l)| Literal::new(l.var, (bits >> (k - 1 - t)) & 1 == 0))
                .collect::<Vec<_>>()
        })
        .filter(|partial| {
            partial
                .iter()
                .zip(clause)
                .any(|(p, l)| p.positive == l.positive)
        })
        .collect()
}

fn contradicts(a: &[Literal], b: &[Literal]) -> bool {
    a.iter()
        .any(|x| b.iter().any(|y| x.var == y.var && x.positive != y.positive))
}

/// Induced-path gadget: `r` chained copies of a clause chain.
///
/// In each copy, clause `i` becomes a clique of its satisfying partial
/// assignments and a connector adjacent to the cliques of clauses `i-1` and
/// `i`; the first connector of a copy is joined to the last clique of the
/// previous copy. Any two clique vertices in different cliques that disagree
/// on a variable are adjacent. Vertex layout: copy by copy, clause by clause,
/// connector first and then its clique.
pub fn sat_to_induced_path(phi: &CnfFormula, r: usize) -> Result<GadgetGraph> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    if phi.clauses().is_empty() {
        return Err(Error::InvalidInstance("formula has no clauses".into()));
    }
    if let Some((clause, c)) = phi.clauses().iter().enumerate().find(|(_, c)| c.len() < 2) {
        return Err(Error::UnsupportedClause {
            clause,
            len: c.len(),
        });
    }
    let partials: Vec<Vec<Vec<Literal>>> = phi
        .clauses()
        .iter()
        .map(|c| satisfying_partials(c))
        .collect();

    let mut roles = Vec::new();
    let mut edges = Vec::new();
    // clique[j][i] = vertex range of C^j_i
    let mut cliques: Vec<Vec<std::ops::Range<usize>>> = Vec::with_capacity(r);
    for copy in 0..r {
        let mut row = Vec::with_capacity(partials.len());
        for (clause, ps) in partials.iter().enumerate() {
            let connector = roles.len();
            roles.push(Role::Connector { copy, clause });
            let start = roles.len();
            for p in ps {
                roles.push(Role::ClauseAssignment {
                    copy,
                    clause,
                    assignment: p.clone(),
                });
            }
            let range = start..roles.len();
            for a in range.clone() {
                edges.push((connector, a));
                for b in a + 1..range.end {
                    edges.push((a, b));
                }
            }
            let prev = match (clause, copy) {
                (0, 0) => None,
                (0, _) => cliques[copy - 1].last().cloned(),
                _ => row.last().cloned(),
            };
            if let Some(prev) = prev {
                edges.extend(prev.map(|a| (connector, a)));
            }
            row.push(range);
        }
        cliques.push(row);
    }

    let clique_vertices: Vec<(usize, usize)> = cliques
        .iter()
        .flatten()
        .enumerate()
        .flat_map(|(id, range)| range.clone().map(move |v| (id, v)))
        .collect();
    let assignment_of = |v: usize| match &roles[v] {
        Role::ClauseAssignment { assignment, .. } => assignment.as_slice(),
        _ => unreachable!("clique vertex"),
    };
    for (x, &(ca, a)) in clique_vertices.iter().enumerate() {
        for &(cb, b) in &clique_vertices[x + 1..] {
            if ca != cb && contradicts(assignment_of(a), assignment_of(b)) {
                edges.push((a, b));
            }
        }
    }

    let graph = Graph::from_edges(roles.len(), edges)?;
    Ok(GadgetGraph { graph, roles, r })
}

/// The induced path of `2rm` vertices that a satisfying assignment `tau`
/// selects in [`sat_to_induced_path`]`(phi, r)`: every connector plus, in
/// each clique, the vertex agreeing with `tau`.
pub fn induced_path_witness(phi: &CnfFormula, tau: &[bool], r: usize) -> Result<VertexSet> {
    if tau.len() != phi.num_vars() {
        return Err(Error::InvalidParameter(format!(
            "assignment has {} values for {} variables",
            tau.len(),
            phi.num_vars()
        )));
    }
    if let Some(i) = phi.first_violated(tau) {
        return Err(Error::NotSatisfying(format!(
            "clause {} is falsified",
            i + 1
        )));
    }
    let gadget = sat_to_induced_path(phi, r)?;
    let picked = gadget.vertices_where(|role| match role {
        Role::Connector { .. } => true,
        Role::ClauseAssignment { assignment, .. } => assignment.iter().all(|l| l.eval(tau)),
        _ => false,
    });
    Ok(VertexSet::from_indices(gadget.n(), picked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_feasible, ProblemKind};

    fn four_clause_formula() -> CnfFormula {
        CnfFormula::from_dimacs(4, &[&[1, -2, 3], &[1, 2, -3], &[-1, 2, -4], &[2, -3, 4]]).unwrap()
    }

    #[test]
    fn partials() {
        let c = [
            Literal::new(0, true),
            Literal::new(1, true),
            Literal::new(2, true),
        ];
        let ps = satisfying_partials(&c);
        assert_eq!(ps.len(), 7);
        assert!(ps[0].iter().all(|l| l.positive));
        assert_eq!(satisfying_partials(&c[..2]).len(), 3);
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(sat_to_induced_path(&four_clause_formula(), 2).unwrap().n(), 64);
        let single = CnfFormula::from_dimacs(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(sat_to_induced_path(&single, 1).unwrap().n(), 8);
        let two = CnfFormula::from_dimacs(2, &[&[1, 2], &[1, -2], &[-1, 2], &[-1, -2]]).unwrap();
        assert_eq!(sat_to_induced_path(&two, 1).unwrap().n(), 16);
    }

    #[test]
    fn rejects_unit_clauses() {
        let phi = CnfFormula::from_dimacs(2, &[&[1, 2], &[-2]]).unwrap();
        assert_eq!(
            sat_to_induced_path(&phi, 1),
            Err(Error::UnsupportedClause { clause: 1, len: 1 })
        );
    }

    #[test]
    fn witnesses() {
        let phi = four_clause_formula();
        let tau = [true, true, false, true];
        let w = induced_path_witness(&phi, &tau, 1).unwrap();
        assert_eq!(w.len(), 8);
        let g = sat_to_induced_path(&phi, 1).unwrap();
        assert!(is_feasible(&g.graph, &w, ProblemKind::InducedPath));

        let single = CnfFormula::from_dimacs(3, &[&[1, 2, 3]]).unwrap();
        for r in [1, 3] {
            let w = induced_path_witness(&single, &[true; 3], r).unwrap();
            assert_eq!(w.len(), 2 * r);
            let g = sat_to_induced_path(&single, r).unwrap();
            assert!(is_feasible(&g.graph, &w, ProblemKind::InducedPath));
        }
        assert!(matches!(
            induced_path_witness(&phi, &[false, true, false, false], 1),
            Err(Error::NotSatisfying(_))
        ));
    }
}
