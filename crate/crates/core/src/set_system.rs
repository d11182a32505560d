use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A universe `0..universe_size` and a family of subsets of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSystem {
    universe_size: usize,
    sets: Vec<BitSet>,
}

impl SetSystem {
    pub fn new(universe_size: usize, sets: Vec<BitSet>) -> Result<Self> {
        if let Some(i) = sets.iter().position(|s| s.capacity() != universe_size) {
            return Err(Error::InvalidInstance(format!(
                "set {i} is over a universe of {} elements, expected {universe_size}",
                sets[i].capacity()
            )));
        }
        Ok(SetSystem {
            universe_size,
            sets,
        })
    }

    pub fn from_lists(universe_size: usize, lists: &[&[usize]]) -> Result<Self> {
        let mut sets = Vec::with_capacity(lists.len());
        for (i, l) in lists.iter().enumerate() {
            if let Some(&e) = l.iter().find(|&&e| e >= universe_size) {
                return Err(Error::InvalidInstance(format!(
                    "set {i} contains element {e} outside the universe"
                )));
            }
            sets.push(BitSet::from_indices(universe_size, l.iter().copied()));
        }
        Self::new(universe_size, sets)
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn num_sets(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[BitSet] {
        &self.sets
    }

    pub fn union_of<'a, I: IntoIterator<Item = &'a usize>>(&self, indices: I) -> BitSet {
        let mut u = BitSet::new(self.universe_size);
        for &i in indices {
            u.union_with(&self.sets[i]);
        }
        u
    }

    pub fn is_cover(&self, indices: &[usize]) -> bool {
        self.union_of(indices).len() == self.universe_size
    }

    /// Errors unless the union of all sets is the whole universe.
    pub fn check_coverable(&self) -> Result<()> {
        let all: Vec<usize> = (0..self.sets.len()).collect();
        let missing = BitSet::full(self.universe_size).difference(&self.union_of(&all));
        match missing.first() {
            None => Ok(()),
            Some(e) => Err(Error::Infeasible(format!("element {} is in no set", e + 1))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coverability() {
        let s = SetSystem::from_lists(4, &[&[0, 1], &[2]]).unwrap();
        assert!(s.check_coverable().is_err());
        assert!(!s.is_cover(&[0, 1]));
        let t = SetSystem::from_lists(3, &[&[0, 1], &[2]]).unwrap();
        assert!(t.check_coverable().is_ok());
        assert!(t.is_cover(&[0, 1]));
        assert!(SetSystem::from_lists(3, &[&[3]]).is_err());
    }
}
