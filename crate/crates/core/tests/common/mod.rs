//! Brute-force reference answers, written against plain adjacency matrices so
//! they share nothing with the solvers under test.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tradeoff_core::{Graph, Metric};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..0.8);
    gnp(rng, n, p)
}

pub fn random_metric(rng: &mut ChaCha8Rng, n: usize) -> Metric {
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { 0 } else { rng.gen_range(1..=50) })
                .collect()
        })
        .collect();
    Metric::new(rows).unwrap().shortest_path_closure()
}

pub struct Brute {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Brute {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Brute { n, adj }
    }

    fn members(&self, mask: u32) -> Vec<usize> {
        (0..self.n).filter(|&v| mask >> v & 1 == 1).collect()
    }

    fn independent(&self, mask: u32) -> bool {
        let vs = self.members(mask);
        vs.iter().all(|&a| vs.iter().all(|&b| !self.adj[a][b]))
    }

    fn dominating(&self, mask: u32) -> bool {
        (0..self.n).all(|v| {
            mask >> v & 1 == 1 || (0..self.n).any(|u| mask >> u & 1 == 1 && self.adj[u][v])
        })
    }

    fn vertex_cover(&self, mask: u32) -> bool {
        (0..self.n)
            .all(|u| (u + 1..self.n).all(|v| !self.adj[u][v] || (mask >> u | mask >> v) & 1 == 1))
    }

    fn all_masks(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.n)
    }

    pub fn alpha(&self) -> usize {
        self.all_masks()
            .filter(|&m| self.independent(m))
            .map(u32::count_ones)
            .max()
            .unwrap() as usize
    }

    pub fn min_ids(&self) -> usize {
        self.all_masks()
            .filter(|&m| self.independent(m) && self.dominating(m))
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    pub fn max_minimal_vc(&self) -> usize {
        self.all_masks()
            .filter(|&m| {
                self.vertex_cover(m)
                    && (0..self.n).all(|v| m >> v & 1 == 0 || !self.vertex_cover(m & !(1 << v)))
            })
            .map(u32::count_ones)
            .max()
            .unwrap() as usize
    }

    /// (edges, components, max degree) of the subgraph induced by `mask`.
    fn shape(&self, mask: u32) -> (usize, usize, usize) {
        let vs = self.members(mask);
        let mut edges = 0;
        let mut max_deg = 0;
        for &a in &vs {
            let d = vs.iter().filter(|&&b| self.adj[a][b]).count();
            edges += d;
            max_deg = max_deg.max(d);
        }
        let mut seen = vec![false; self.n];
        let mut comps = 0;
        for &s in &vs {
            if seen[s] {
                continue;
            }
            comps += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(a) = stack.pop() {
                for &b in &vs {
                    if self.adj[a][b] && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        (edges / 2, comps, max_deg)
    }

    pub fn max_induced_path(&self) -> usize {
        self.best_induced(|k, (e, c, d)| k >= 1 && c == 1 && e + 1 == k && d <= 2)
    }

    pub fn max_induced_tree(&self) -> usize {
        self.best_induced(|k, (e, c, _)| k >= 1 && c == 1 && e + 1 == k)
    }

    pub fn max_induced_forest(&self) -> usize {
        self.best_induced(|k, (e, c, _)| e + c == k)
    }

    fn best_induced(&self, ok: impl Fn(usize, (usize, usize, usize)) -> bool) -> usize {
        self.all_masks()
            .filter(|&m| ok(m.count_ones() as usize, self.shape(m)))
            .map(u32::count_ones)
            .max()
            .unwrap_or(0) as usize
    }

    pub fn first_fit(&self, order: &[usize]) -> usize {
        let mut color = vec![0usize; self.n];
        for &v in order {
            let mut c = 1;
            while (0..self.n).any(|u| self.adj[v][u] && color[u] == c) {
                c += 1;
            }
            color[v] = c;
        }
        color.into_iter().max().unwrap_or(0)
    }

    /// Grundy number as the best first-fit count over every ordering.
    pub fn grundy(&self) -> usize {
        let mut order: Vec<usize> = (0..self.n).collect();
        let mut best = self.first_fit(&order);
        for_each_permutation(&mut order, 0, &mut |p| best = best.max(self.first_fit(p)));
        best
    }
}

pub fn for_each_permutation(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Cheapest tour by trying every ordering of the cities after city 0.
pub fn brute_tour(m: &Metric) -> u64 {
    let n = m.n();
    if n <= 1 {
        return 0;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    let mut best = u64::MAX;
    for_each_permutation(&mut rest, 0, &mut |p| {
        let mut order = vec![0];
        order.extend_from_slice(p);
        best = best.min(m.tour_cost(&order));
    });
    best
}
