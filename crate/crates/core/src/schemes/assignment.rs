/// Minimum-cost perfect assignment of rows to columns (Hungarian method with
/// potentials, O(n³)). `None` marks a forbidden pair.
///
/// Returns `assign[row] = column` and the total cost, or `None` when every
/// perfect assignment uses a forbidden pair.
pub fn min_cost_assignment(cost: &[Vec<Option<u64>>]) -> Option<(Vec<usize>, u64)> {
    let n = cost.len();
    if n == 0 {
        return Some((Vec::new(), 0));
    }
    let finite_total: i128 = cost.iter().flatten().flatten().map(|&c| c as i128).sum();
    // any assignment touching a forbidden pair costs more than all finite ones
    let forbidden = finite_total + 1;
    let c = |i: usize, j: usize| cost[i][j].map_or(forbidden, |x| x as i128);

    // 1-based rows/columns; column 0 is a virtual start
    let inf = i128::MAX / 4;
    let mut u = vec![0i128; n + 1];
    let mut v = vec![0i128; n + 1];
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for row in 1..=n {
        owner[0] = row;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = c(i0 - 1, j - 1) - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0usize; n];
    for j in 1..=n {
        assign[owner[j] - 1] = j - 1;
    }
    let mut total = 0u64;
    for (i, &j) in assign.iter().enumerate() {
        total += cost[i][j]?;
    }
    Some((assign, total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(cost: &[Vec<Option<u64>>]) -> Option<u64> {
        fn rec(cost: &[Vec<Option<u64>>], row: usize, used: &mut Vec<bool>) -> Option<u64> {
            if row == cost.len() {
                return Some(0);
            }
            let mut best = None;
            for j in 0..cost.len() {
                if used[j] {
                    continue;
                }
                if let Some(c) = cost[row][j] {
                    used[j] = true;
                    if let Some(rest) = rec(cost, row + 1, used) {
                        best = Some(best.map_or(c + rest, |b: u64| b.min(c + rest)));
                    }
                    used[j] = false;
                }
            }
            best
        }
        rec(cost, 0, &mut vec![false; cost.len()])
    }

    #[test]
    fn matches_brute_force() {
        let mut seed = 12345u64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for n in 1..=6 {
            for _ in 0..40 {
                let cost: Vec<Vec<Option<u64>>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                if i == j && n > 1 {
                                    None
                                } else {
                                    Some(next() % 20)
                                }
                            })
                            .collect()
                    })
                    .collect();
                let got = min_cost_assignment(&cost).map(|(_, c)| c);
                assert_eq!(got, brute(&cost));
            }
        }
    }

    #[test]
    fn all_forbidden() {
        assert_eq!(min_cost_assignment(&[vec![None]]), None);
    }
}
