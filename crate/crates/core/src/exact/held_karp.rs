use serde::{Deserialize, Serialize};

use super::check_cap;
use crate::error::{Error, Result};
use crate::metric::Metric;

/// A closed tour: `order` is a permutation of the cities, visited cyclically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tour {
    pub order: Vec<usize>,
    pub cost: u64,
}

impl Tour {
    pub fn is_permutation_of(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        self.order.len() == n
            && self
                .order
                .iter()
                .all(|&c| c < n && !std::mem::replace(&mut seen[c], true))
    }
}

/// Optimal ATSP tour by the Held–Karp subset DP, starting at city 0.
///
/// The second return value is the number of DP states filled.
pub fn held_karp(metric: &Metric, cap: usize) -> Result<(Tour, u64)> {
    let n = metric.n();
    if n == 0 {
        return Err(Error::InvalidInstance(
            "a tour needs at least one city".into(),
        ));
    }
    check_cap("held-karp", n, cap)?;
    if n == 1 {
        return Ok((
            Tour {
                order: vec![0],
                cost: 0,
            },
            1,
        ));
    }
    // cities 1..n are bits 0..n-1 of the mask
    let k = n - 1;
    let full = (1usize << k) - 1;
    const INF: u64 = u64::MAX;
    let mut cost = vec![INF; (1 << k) * k];
    let mut parent = vec![u8::MAX; (1 << k) * k];
    let idx = |mask: usize, last: usize| mask * k + last;
    for j in 0..k {
        cost[idx(1 << j, j)] = metric.d(0, j + 1);
    }
    let mut states = k as u64;
    for mask in 1..=full {
        for last in 0..k {
            if mask & (1 << last) == 0 {
                continue;
            }
            let here = cost[idx(mask, last)];
            if here == INF {
                continue;
            }
            for next in 0..k {
                if mask & (1 << next) != 0 {
                    continue;
                }
                let m2 = mask | (1 << next);
                let c = here.saturating_add(metric.d(last + 1, next + 1));
                if c < cost[idx(m2, next)] {
                    if cost[idx(m2, next)] == INF {
                        states += 1;
                    }
                    cost[idx(m2, next)] = c;
                    parent[idx(m2, next)] = last as u8;
                }
            }
        }
    }
    let (mut last, best) = (0..k)
        .map(|j| (j, cost[idx(full, j)].saturating_add(metric.d(j + 1, 0))))
        .min_by_key(|&(j, c)| (c, j))
        .unwrap();
    let mut order = Vec::with_capacity(n);
    let mut mask = full;
    loop {
        order.push(last + 1);
        let p = parent[idx(mask, last)];
        mask &= !(1 << last);
        if p == u8::MAX {
            break;
        }
        last = p as usize;
    }
    order.push(0);
    order.reverse();
    Ok((Tour { order, cost: best }, states))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let m2 = Metric::new(vec![vec![0, 3], vec![4, 0]]).unwrap();
        assert_eq!(held_karp(&m2, 20).unwrap().0.cost, 7);
        let uniform = Metric::new(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        assert_eq!(held_karp(&uniform, 20).unwrap().0.cost, 3);
        let one = Metric::new(vec![vec![0]]).unwrap();
        assert_eq!(
            held_karp(&one, 20).unwrap().0,
            Tour {
                order: vec![0],
                cost: 0
            }
        );
    }

    #[test]
    fn directed_cycle() {
        let rows = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        if i == j {
                            0
                        } else if j == (i + 1) % 4 {
                            1
                        } else {
                            10
                        }
                    })
                    .collect()
            })
            .collect();
        let (tour, _) = held_karp(&Metric::new(rows).unwrap(), 20).unwrap();
        assert_eq!(tour.cost, 4);
        assert_eq!(tour.order, vec![0, 1, 2, 3]);
        assert!(tour.is_permutation_of(4));
    }

    #[test]
    fn cap_enforced() {
        let m = Metric::new(vec![vec![0; 5]; 5]).unwrap();
        assert!(matches!(held_karp(&m, 4), Err(Error::CapExceeded { .. })));
    }
}
