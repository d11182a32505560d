mod common;

use common::{brute_tour, random_graph, random_metric, rng, Brute};
use proptest::prelude::*;
use rand::Rng;
use tradeoff_core::exact::{
    csp_min_unsat, grundy_exact, held_karp, max_independent_set_exact, max_induced_exact,
    max_minimal_vc_exact, min_ids_exact, set_cover_exact, InducedKind,
};
use tradeoff_core::graph::is_feasible;
use tradeoff_core::{
    BinaryCsp, BitSet, Constraint, Error, Graph, OracleCaps, ProblemKind, SetSystem,
};

#[test]
fn graph_oracles_match_brute_force() {
    let caps = OracleCaps::default();
    let mut rng = rng(11);
    for _ in 0..150 {
        let g = random_graph(&mut rng, 10);
        let b = Brute::new(&g);

        let mis = max_independent_set_exact(&g, &caps).unwrap();
        assert_eq!(mis.value as usize, b.alpha());
        assert!(is_feasible(&g, &mis.set, ProblemKind::IndependentSet));

        let ids = min_ids_exact(&g, &caps).unwrap();
        assert_eq!(ids.value as usize, b.min_ids());
        assert!(is_feasible(
            &g,
            &ids.set,
            ProblemKind::IndependentDominatingSet
        ));

        let mvc = max_minimal_vc_exact(&g, &caps).unwrap();
        assert_eq!(mvc.value as usize, b.max_minimal_vc());
        assert!(is_feasible(&g, &mvc.set, ProblemKind::MinimalVertexCover));

        for (kind, want) in [
            (InducedKind::Path, b.max_induced_path()),
            (InducedKind::Tree, b.max_induced_tree()),
            (InducedKind::Forest, b.max_induced_forest()),
        ] {
            let sol = max_induced_exact(&g, kind, &caps).unwrap();
            assert_eq!(sol.value as usize, want, "{kind:?} on {g:?}");
            assert!(is_feasible(&g, &sol.set, kind.problem()));
        }
    }
}

#[test]
fn duality_and_forest_sandwich() {
    let caps = OracleCaps::default();
    let mut rng = rng(12);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 12);
        let ids = min_ids_exact(&g, &caps).unwrap().value;
        let mvc = max_minimal_vc_exact(&g, &caps).unwrap().value;
        assert_eq!(ids + mvc, g.n());
        let alpha = max_independent_set_exact(&g, &caps).unwrap().value;
        let forest = max_induced_exact(&g, InducedKind::Forest, &caps)
            .unwrap()
            .value;
        assert!(alpha <= forest && forest <= 2 * alpha);
    }
}

#[test]
fn held_karp_matches_permutations() {
    let mut rng = rng(13);
    for _ in 0..120 {
        let n = rng.gen_range(1..=8);
        let m = random_metric(&mut rng, n);
        let (tour, _) = held_karp(&m, 20).unwrap();
        assert!(tour.is_permutation_of(n));
        assert_eq!(tour.cost, m.tour_cost(&tour.order));
        assert_eq!(tour.cost, brute_tour(&m));
    }
}

#[test]
fn grundy_matches_orderings() {
    let caps = OracleCaps::default();
    let mut rng = rng(14);
    for _ in 0..120 {
        let g = random_graph(&mut rng, 7);
        let (value, witness, _) = grundy_exact(&g, &caps).unwrap();
        assert_eq!(value, Brute::new(&g).grundy(), "{g:?}");
        assert_eq!(witness.colors(), value);
        assert!(witness.is_valid(&g));
        assert!(witness.replays_on(&g));
    }
    for (g, want) in [
        (Graph::path(4), 3),
        (Graph::cycle(4), 2),
        (Graph::complete(5), 5),
    ] {
        assert_eq!(grundy_exact(&g, &caps).unwrap().0, want);
    }
}

#[test]
fn set_cover_matches_subfamilies() {
    let mut rng = rng(15);
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let m = rng.gen_range(1..=9);
        let mut sets: Vec<BitSet> = (0..m)
            .map(|_| BitSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.3))))
            .collect();
        sets[0] = sets[0].union(&BitSet::from_indices(n, (0..n).filter(|e| e % 2 == 0)));
        sets[m - 1] = sets[m - 1].union(&BitSet::from_indices(n, (0..n).filter(|e| e % 2 == 1)));
        let sys = SetSystem::new(n, sets).unwrap();
        let best = (0u32..1 << m)
            .filter(|mask| sys.is_cover(&(0..m).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>()))
            .map(u32::count_ones)
            .min()
            .unwrap() as usize;
        let sol = set_cover_exact(&sys, 20).unwrap();
        assert_eq!(sol.size(), best);
        assert!(sys.is_cover(&sol.indices));
    }
}

#[test]
fn csp_min_unsat_matches_assignments() {
    let caps = OracleCaps::default();
    let mut rng = rng(16);
    for _ in 0..100 {
        let n = rng.gen_range(2..=4);
        let s = rng.gen_range(1..=3);
        let mut constraints = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.6) {
                    let allowed = (0..s)
                        .flat_map(|a| (0..s).map(move |b| (a, b)))
                        .filter(|_| rng.gen_bool(0.5))
                        .collect();
                    constraints.push(Constraint { u, v, allowed });
                }
            }
        }
        let csp = BinaryCsp::new(n, s, constraints).unwrap();
        let mut best = usize::MAX;
        for code in 0..s.pow(n as u32) {
            let assign: Vec<usize> = (0..n).map(|i| code / s.pow(i as u32) % s).collect();
            best = best.min(csp.violated(&assign));
        }
        let (value, assign) = csp_min_unsat(&csp, &caps).unwrap();
        assert_eq!(value, best);
        assert_eq!(csp.violated(&assign), value);
    }
}

#[test]
fn caps_are_errors() {
    let caps = OracleCaps {
        mis: 5,
        ..OracleCaps::default()
    };
    assert!(matches!(
        max_independent_set_exact(&Graph::empty(6), &caps),
        Err(Error::CapExceeded { .. })
    ));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn minimal_cover_complements_are_maximal_independent(g in arb_graph(9)) {
        let b = Brute::new(&g);
        let caps = OracleCaps::default();
        let ids = min_ids_exact(&g, &caps).unwrap();
        prop_assert!(is_feasible(&g, &ids.set.complement(), ProblemKind::MinimalVertexCover));
        prop_assert_eq!(ids.value as usize, b.min_ids());
    }
}
