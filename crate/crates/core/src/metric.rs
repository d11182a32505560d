use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Asymmetric integer distance matrix over cities `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metric {
    n: usize,
    dist: Vec<u64>,
    triangle_checked: bool,
}

impl Metric {
    /// Builds a metric from rows. The diagonal must be zero.
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        let mut dist = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInstance(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if row[i] != 0 {
                return Err(Error::InvalidInstance(format!(
                    "diagonal entry {i} is nonzero"
                )));
            }
            dist.extend(row);
        }
        Ok(Metric {
            n,
            dist,
            triangle_checked: false,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self, i: usize, j: usize) -> u64 {
        self.dist[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.dist
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn triangle_checked(&self) -> bool {
        self.triangle_checked
    }

    /// First violated triple `(i, j, k)` with `d(i,k) > d(i,j) + d(j,k)`.
    pub fn triangle_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    if self.d(i, k) > self.d(i, j) + self.d(j, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Verifies the triangle inequality and records that it holds.
    pub fn check_triangle(mut self) -> Result<Self> {
        if let Some((i, j, k)) = self.triangle_violation() {
            return Err(Error::TriangleViolated { i, j, k });
        }
        self.triangle_checked = true;
        Ok(self)
    }

    /// All-pairs shortest-path closure; the result satisfies the triangle inequality.
    pub fn shortest_path_closure(&self) -> Metric {
        let n = self.n;
        let mut d = self.dist.clone();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = d[i * n + k] + d[k * n + j];
                    if via < d[i * n + j] {
                        d[i * n + j] = via;
                    }
                }
            }
        }
        Metric {
            n,
            dist: d,
            triangle_checked: true,
        }
    }

    /// The metric restricted to `cities`, renumbered in the given order.
    pub fn sub_metric(&self, cities: &[usize]) -> Metric {
        let dist = cities
            .iter()
            .flat_map(|&i| cities.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.d(i, j))
            .collect();
        Metric {
            n: cities.len(),
            dist,
            triangle_checked: self.triangle_checked,
        }
    }

    /// Length of the closed tour visiting `order` cyclically.
    pub fn tour_cost(&self, order: &[usize]) -> u64 {
        if order.len() < 2 {
            return 0;
        }
        order
            .iter()
            .zip(order.iter().cycle().skip(1))
            .map(|(&a, &b)| self.d(a, b))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_repairs_triangle() {
        let m = Metric::new(vec![vec![0, 1, 10], vec![10, 0, 1], vec![1, 10, 0]]).unwrap();
        assert_eq!(m.triangle_violation(), Some((0, 1, 2)));
        let c = m.shortest_path_closure();
        assert!(c.triangle_violation().is_none());
        assert_eq!(c.d(0, 2), 2);
        assert!(c.clone().check_triangle().unwrap().triangle_checked());
    }

    #[test]
    fn rejects_nonzero_diagonal() {
        assert!(Metric::new(vec![vec![1]]).is_err());
        assert!(Metric::new(vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn tour_cost_closes_the_loop() {
        let m = Metric::new(vec![vec![0, 1, 5], vec![5, 0, 1], vec![1, 5, 0]]).unwrap();
        assert_eq!(m.tour_cost(&[0, 1, 2]), 3);
        assert_eq!(m.tour_cost(&[0, 2, 1]), 15);
        assert_eq!(m.tour_cost(&[2]), 0);
    }
}
