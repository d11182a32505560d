use super::{GadgetGraph, Role};
use crate::csp::BinaryCsp;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Independent dominating set gadget for a binary CSP.
///
/// Each variable `v` gets a clique of a dummy and one vertex `w_{v,a}` per
/// symbol. Each constraint `e` on `(u, v)` gets an independent set
/// `I_{e,(i,j)}` of `r` vertices per allowed pair and one more set `I_e`:
///
/// * `w_{u,i}` is joined to every `I_{e,(i',j')}` with `i' ≠ i`;
/// * `w_{v,j}` is joined to every `I_{e,(i',j')}` with `(i', j)` allowed;
/// * `w_{u,i}` is joined to `I_e` when some pair `(i, ·)` is allowed.
///
/// A satisfying assignment gives an independent dominating set of size
/// `num_vars`; each constraint an assignment violates forces `r` more
/// vertices. Layout: variable cliques first (dummy, then symbols), then the
/// constraint sets in constraint order.
pub fn csp_to_mids(csp: &BinaryCsp, r: usize) -> Result<GadgetGraph> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let s = csp.alphabet_size();
    let mut roles = Vec::new();
    let mut edges = Vec::new();
    for var in 0..csp.num_vars() {
        let start = roles.len();
        roles.push(Role::Dummy { var });
        roles.extend((0..s).map(|symbol| Role::Symbol { var, symbol }));
        for a in start..roles.len() {
            edges.extend((a + 1..roles.len()).map(|b| (a, b)));
        }
    }
    let w = |var: usize, symbol: usize| var * (s + 1) + 1 + symbol;

    for (constraint, c) in csp.constraints().iter().enumerate() {
        for &(pi, pj) in &c.allowed {
            let start = roles.len();
            roles.extend((0..r).map(|member| Role::PairSet {
                constraint,
                pair: (pi, pj),
                member,
            }));
            for x in start..roles.len() {
                edges.extend((0..s).filter(|&i| i != pi).map(|i| (w(c.u, i), x)));
                edges.extend((0..s).filter(|&j| c.allows(pi, j)).map(|j| (w(c.v, j), x)));
            }
        }
        let start = roles.len();
        roles.extend((0..r).map(|member| Role::ConstraintSet { constraint, member }));
        for x in start..roles.len() {
            edges.extend(
                (0..s)
                    .filter(|&i| c.allowed.iter().any(|&(a, _)| a == i))
                    .map(|i| (w(c.u, i), x)),
            );
        }
    }
    let graph = Graph::from_edges(roles.len(), edges)?;
    Ok(GadgetGraph { graph, roles, r })
}

/// `{ w_{v,assign(v)} }` in `gadget`, which must have been built from `csp`.
pub fn mids_witness(csp: &BinaryCsp, assign: &[usize], gadget: &GadgetGraph) -> Result<VertexSet> {
    if assign.len() != csp.num_vars() || assign.iter().any(|&a| a >= csp.alphabet_size()) {
        return Err(Error::InvalidParameter(format!(
            "assignment must give each of {} variables a symbol below {}",
            csp.num_vars(),
            csp.alphabet_size()
        )));
    }
    if let Some(e) = csp.first_violated(assign) {
        return Err(Error::NotSatisfying(format!(
            "constraint {} is violated",
            e + 1
        )));
    }
    let picked = gadget.vertices_where(
        |role| matches!(role, Role::Symbol { var, symbol } if assign[*var] == *symbol),
    );
    if picked.len() != csp.num_vars() {
        return Err(Error::InvalidInstance(
            "gadget does not match the CSP".into(),
        ));
    }
    Ok(VertexSet::from_indices(gadget.n(), picked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csp::Constraint;
    use crate::exact::{min_ids_exact, OracleCaps};
    use crate::graph::{is_feasible, ProblemKind};

    fn one_edge() -> BinaryCsp {
        BinaryCsp::new(
            2,
            2,
            vec![Constraint {
                u: 0,
                v: 1,
                allowed: vec![(0, 0)],
            }],
        )
        .unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(csp_to_mids(&one_edge(), 2).unwrap().n(), 10);
        let edgeless = BinaryCsp::new(3, 2, vec![]).unwrap();
        let g = csp_to_mids(&edgeless, 1).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(
            min_ids_exact(&g.graph, &OracleCaps::default())
                .unwrap()
                .value,
            3
        );
    }

    #[test]
    fn witness_is_ids() {
        let csp = one_edge();
        let g = csp_to_mids(&csp, 2).unwrap();
        let w = mids_witness(&csp, &[0, 0], &g).unwrap();
        assert_eq!(w.iter().collect::<Vec<_>>(), vec![1, 4]);
        assert!(is_feasible(
            &g.graph,
            &w,
            ProblemKind::IndependentDominatingSet
        ));
        assert!(matches!(
            mids_witness(&csp, &[1, 0], &g),
            Err(Error::NotSatisfying(_))
        ));
    }

    #[test]
    fn unsatisfiable_costs_r_per_violation() {
        // x != y, y != z, x != z over two symbols
        let ne = vec![(0, 1), (1, 0)];
        let csp = BinaryCsp::new(
            3,
            2,
            vec![
                Constraint {
                    u: 0,
                    v: 1,
                    allowed: ne.clone(),
                },
                Constraint {
                    u: 1,
                    v: 2,
                    allowed: ne.clone(),
                },
                Constraint {
                    u: 0,
                    v: 2,
                    allowed: ne,
                },
            ],
        )
        .unwrap();
        let caps = OracleCaps {
            ids: 64,
            ..OracleCaps::default()
        };
        for r in 1..=2 {
            let g = csp_to_mids(&csp, r).unwrap();
            for assign in [[0, 1, 0], [0, 0, 0], [1, 0, 1]] {
                assert!(mids_witness(&csp, &assign, &g).is_err());
            }
            assert!(min_ids_exact(&g.graph, &caps).unwrap().value >= 3 + r);
        }
    }
}
