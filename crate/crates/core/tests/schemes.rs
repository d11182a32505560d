mod common;

use common::{random_graph, random_metric, rng, Brute};
use rand::Rng;
use tradeoff_core::exact::{grundy_exact, held_karp, set_cover_exact};
use tradeoff_core::graph::{first_fit_coloring, is_feasible, subset_count};
use tradeoff_core::schemes::{
    atsp_guarantee, atsp_scheme, generic_max_scheme, generic_min_scheme, greedy_set_cover,
    grundy_scheme, min_weight_cycle_cover, mmvc_scheme, partition_scheme_mis,
    setcover_merge_approx, SolutionReport,
};
use tradeoff_core::{BitSet, OracleCaps, ProblemKind, SetSystem};

const RATIOS: [f64; 4] = [1.0, 1.5, 2.0, 4.0];

#[test]
fn generic_schemes_are_sharp() {
    let mut rng = rng(21);
    for _ in 0..80 {
        let g = random_graph(&mut rng, 10);
        let b = Brute::new(&g);
        let n = g.n();
        for r in RATIOS {
            let k = (n as f64 / r.min(n as f64)).floor() as usize;
            let rep = generic_min_scheme(&g, ProblemKind::IndependentDominatingSet, r).unwrap();
            assert!(is_feasible(
                &g,
                &rep.solution,
                ProblemKind::IndependentDominatingSet
            ));
            assert_eq!(rep.nodes_enumerated, subset_count(n, k));
            let opt = b.min_ids();
            if opt <= k {
                assert_eq!(rep.value as usize, opt);
            }
            assert!(rep.value as f64 <= rep.guarantee * opt as f64);

            for (kind, opt) in [
                (ProblemKind::InducedPath, b.max_induced_path()),
                (ProblemKind::InducedTree, b.max_induced_tree()),
                (ProblemKind::InducedForest, b.max_induced_forest()),
                (ProblemKind::IndependentSet, b.alpha()),
            ] {
                let rep = generic_max_scheme(&g, kind, r).unwrap();
                assert!(is_feasible(&g, &rep.solution, kind));
                assert_eq!(rep.value as usize, opt.min(k));
                assert!(rep.value as f64 * rep.guarantee >= opt as f64);
            }
        }
    }
}

#[test]
fn graph_schemes_meet_their_guarantees() {
    let caps = OracleCaps::default();
    let mut rng = rng(22);
    for _ in 0..80 {
        let g = random_graph(&mut rng, 10);
        let b = Brute::new(&g);
        let alpha = b.alpha() as u64;
        let mmvc_opt = b.max_minimal_vc() as u64;
        for blocks in 1..=4 {
            let rep = partition_scheme_mis(&g, blocks, &caps).unwrap();
            assert!(is_feasible(&g, &rep.solution, ProblemKind::IndependentSet));
            assert!(rep.value * blocks as u64 >= alpha);
        }
        for rho in 1..=3 {
            let rep = mmvc_scheme(&g, rho).unwrap();
            assert!(is_feasible(
                &g,
                &rep.solution,
                ProblemKind::MinimalVertexCover
            ));
            assert!(rep.value * rep.guarantee as u64 >= mmvc_opt);
        }
        if g.n() <= 8 {
            let gamma = grundy_exact(&g, &caps).unwrap().0 as u64;
            for r in RATIOS {
                let rep = grundy_scheme(&g, r, &caps).unwrap();
                assert_eq!(
                    first_fit_coloring(&g, &rep.solution.ordering).0 as u64,
                    rep.value
                );
                assert!(rep.value >= ((gamma as f64 / rep.ratio.used).floor() as u64).max(1));
                if r == 1.0 {
                    assert_eq!(rep.value, gamma);
                }
            }
        }
    }
}

#[test]
fn atsp_chain() {
    let caps = OracleCaps::default();
    let mut rng = rng(23);
    for _ in 0..100 {
        let n = rng.gen_range(2..=9);
        let m = random_metric(&mut rng, n);
        let opt = held_karp(&m, 20).unwrap().0.cost;
        assert!(min_weight_cycle_cover(&m).unwrap().cost <= opt);
        for r in RATIOS {
            let rep = atsp_scheme(&m, r, &caps).unwrap();
            assert!(rep.solution.is_permutation_of(n));
            assert_eq!(rep.value, m.tour_cost(&rep.solution.order));
            assert!(rep.value <= atsp_guarantee(rep.ratio.used) as u64 * opt);
            if r == 1.0 {
                assert_eq!(rep.value, opt);
            }
        }
    }
}

#[test]
fn set_cover_schemes() {
    let mut rng = rng(24);
    for _ in 0..100 {
        let n = rng.gen_range(2..=10);
        let m = rng.gen_range(2..=10);
        let mut sets: Vec<BitSet> = (0..m)
            .map(|_| BitSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.3))))
            .collect();
        for e in 0..n {
            sets[rng.gen_range(0..m)].insert(e);
        }
        let sys = SetSystem::new(n, sets).unwrap();
        let opt = set_cover_exact(&sys, 20).unwrap().size();
        let greedy = greedy_set_cover(&sys).unwrap();
        assert!(sys.is_cover(&greedy.indices));
        assert!(greedy.size() as f64 <= ((n as f64).ln() + 1.0) * opt as f64);
        for r in RATIOS {
            let sol = setcover_merge_approx(&sys, r, 20).unwrap();
            assert!(sys.is_cover(&sol.indices));
            assert!(sol.size() <= r.floor() as usize * opt);
        }
    }
}

#[test]
fn schemes_are_deterministic() {
    let caps = OracleCaps::default();
    let mut rng = rng(25);
    let g = random_graph(&mut rng, 10);
    let m = random_metric(&mut rng, 9);
    let run = || generic_min_scheme(&g, ProblemKind::IndependentDominatingSet, 2.0).unwrap();
    assert_eq!(untimed(run()), untimed(run()));
    let run = || atsp_scheme(&m, 3.0, &caps).unwrap();
    assert_eq!(untimed(run()), untimed(run()));
    let run = || grundy_scheme(&g, 2.0, &caps).unwrap();
    assert_eq!(untimed(run()), untimed(run()));
}

fn untimed<S>(mut rep: SolutionReport<S>) -> SolutionReport<S> {
    rep.wall_time_ms = 0.0;
    rep
}
