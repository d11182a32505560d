use serde::{Deserialize, Serialize};

use super::check_cap;
use crate::error::Result;
use crate::graph::enumerate_subsets;
use crate::set_system::SetSystem;

/// A cover given by the indices of the chosen sets, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSolution {
    pub indices: Vec<usize>,
    pub nodes: u64,
}

impl CoverSolution {
    pub fn size(&self) -> usize {
        self.indices.len()
    }
}

/// Minimum set cover by enumerating subfamilies in increasing size.
pub fn set_cover_exact(sys: &SetSystem, cap: usize) -> Result<CoverSolution> {
    sys.check_coverable()?;
    check_cap("set cover", sys.num_sets(), cap)?;
    for (seen, family) in enumerate_subsets(sys.num_sets(), sys.num_sets()).enumerate() {
        let indices: Vec<usize> = family.iter().collect();
        if sys.is_cover(&indices) {
            return Ok(CoverSolution {
                indices,
                nodes: seen as u64 + 1,
            });
        }
    }
    unreachable!("coverable system has a cover")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn examples() {
        let one = SetSystem::from_lists(3, &[&[0, 1, 2]]).unwrap();
        assert_eq!(set_cover_exact(&one, 20).unwrap().size(), 1);
        let quad = SetSystem::from_lists(4, &[&[0, 1], &[2, 3], &[0, 2], &[1, 3]]).unwrap();
        assert_eq!(set_cover_exact(&quad, 20).unwrap().indices, vec![0, 1]);
        let singles = SetSystem::from_lists(4, &[&[0], &[1], &[2], &[3]]).unwrap();
        assert_eq!(set_cover_exact(&singles, 20).unwrap().size(), 4);
        let empty_universe = SetSystem::from_lists(0, &[&[]]).unwrap();
        assert_eq!(set_cover_exact(&empty_universe, 20).unwrap().size(), 0);
    }

    #[test]
    fn errors() {
        let gap = SetSystem::from_lists(3, &[&[0, 1]]).unwrap();
        assert!(matches!(
            set_cover_exact(&gap, 20),
            Err(Error::Infeasible(_))
        ));
        let lists: Vec<Vec<usize>> = (0..5).map(|i| vec![i]).collect();
        let refs: Vec<&[usize]> = lists.iter().map(|l| l.as_slice()).collect();
        let five = SetSystem::from_lists(5, &refs).unwrap();
        assert!(matches!(
            set_cover_exact(&five, 4),
            Err(Error::CapExceeded { .. })
        ));
    }
}
