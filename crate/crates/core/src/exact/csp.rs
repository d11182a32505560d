use super::OracleCaps;
use crate::csp::BinaryCsp;
use crate::error::{Error, Result};

/// Fewest violated constraints over all assignments, with the first
/// minimizing assignment in odometer order (variable 0 varies fastest).
pub fn csp_min_unsat(csp: &BinaryCsp, caps: &OracleCaps) -> Result<(usize, Vec<usize>)> {
    let n = csp.num_vars();
    let s = csp.alphabet_size();
    let total = (s as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if total > caps.csp_assignments {
        return Err(Error::CapExceeded {
            what: "csp assignments",
            size: usize::try_from(total).unwrap_or(usize::MAX),
            cap: usize::try_from(caps.csp_assignments).unwrap_or(usize::MAX),
        });
    }
    if s == 0 && n > 0 {
        return Err(Error::InvalidInstance("empty alphabet".into()));
    }
    let mut assignment = vec![0usize; n];
    let mut best = (csp.violated(&assignment), assignment.clone());
    'odometer: loop {
        if best.0 == 0 {
            break;
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'odometer;
            }
            assignment[i] += 1;
            if assignment[i] < s {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
        let v = csp.violated(&assignment);
        if v < best.0 {
            best = (v, assignment.clone());
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csp::Constraint;

    #[test]
    fn examples() {
        let caps = OracleCaps::default();
        let sat = BinaryCsp::new(
            2,
            2,
            vec![Constraint {
                u: 0,
                v: 1,
                allowed: vec![(0, 0)],
            }],
        )
        .unwrap();
        assert_eq!(csp_min_unsat(&sat, &caps).unwrap(), (0, vec![0, 0]));
        let neq = |u, v| Constraint {
            u,
            v,
            allowed: vec![(0, 1), (1, 0)],
        };
        let tri = BinaryCsp::new(3, 2, vec![neq(0, 1), neq(1, 2), neq(0, 2)]).unwrap();
        assert_eq!(csp_min_unsat(&tri, &caps).unwrap().0, 1);
        let edgeless = BinaryCsp::new(3, 2, vec![]).unwrap();
        assert_eq!(csp_min_unsat(&edgeless, &caps).unwrap().0, 0);
    }

    #[test]
    fn cap() {
        let caps = OracleCaps {
            csp_assignments: 7,
            ..OracleCaps::default()
        };
        let csp = BinaryCsp::new(3, 2, vec![]).unwrap();
        assert!(csp_min_unsat(&csp, &caps).is_err());
    }
}
