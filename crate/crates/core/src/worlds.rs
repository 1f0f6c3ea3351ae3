//! Fixed-width sets of world (or point) indices.

use std::fmt;

use crate::error::{Error, Result};

/// Largest number of worlds any frame, space or algebra may have.
pub const MAX_WORLDS: usize = 64;

/// A set of indices in `0..MAX_WORLDS`, stored as one machine word.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WorldSet(u64);

impl WorldSet {
    pub const EMPTY: WorldSet = WorldSet(0);

    pub fn from_bits(bits: u64) -> Self {
        WorldSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., size-1}`.
    pub fn full(size: usize) -> Self {
        debug_assert!(size <= MAX_WORLDS);
        if size >= 64 {
            WorldSet(u64::MAX)
        } else {
            WorldSet((1u64 << size) - 1)
        }
    }

    pub fn singleton(world: usize) -> Self {
        debug_assert!(world < MAX_WORLDS);
        WorldSet(1u64 << world)
    }

    pub fn contains(self, world: usize) -> bool {
        world < MAX_WORLDS && self.0 >> world & 1 == 1
    }

    pub fn insert(&mut self, world: usize) {
        self.0 |= 1u64 << world;
    }

    pub fn remove(&mut self, world: usize) {
        self.0 &= !(1u64 << world);
    }

    pub fn with(mut self, world: usize) -> Self {
        self.insert(world);
        self
    }

    pub fn without(mut self, world: usize) -> Self {
        self.remove(world);
        self
    }

    pub fn union(self, other: Self) -> Self {
        WorldSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        WorldSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        WorldSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., size-1}`.
    pub fn complement(self, size: usize) -> Self {
        WorldSet(!self.0 & Self::full(size).0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Checks every member is below `size`.
    pub fn check_within(self, size: usize) -> Result<()> {
        match self.difference(Self::full(size)).first() {
            None => Ok(()),
            Some(world) => Err(Error::WorldOutOfRange { world, size }),
        }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Membership as a 0/1 list of length `size`.
    pub fn to_bit_list(self, size: usize) -> Vec<u8> {
        (0..size).map(|w| self.contains(w) as u8).collect()
    }

    /// Image of the set under a world renaming.
    pub fn map(self, rename: impl Fn(usize) -> usize) -> Self {
        self.iter().map(rename).collect()
    }
}

impl FromIterator<usize> for WorldSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = WorldSet::EMPTY;
        for w in iter {
            set.insert(w);
        }
        set
    }
}

impl IntoIterator for WorldSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let w = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(w)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a: WorldSet = [0, 2, 3].into_iter().collect();
        let b: WorldSet = [2, 5].into_iter().collect();
        assert_eq!(a.union(b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.difference(b).to_vec(), vec![0, 3]);
        assert_eq!(a.complement(4).to_vec(), vec![1]);
        assert!(WorldSet::singleton(2).is_subset(a));
        assert_eq!(WorldSet::full(64).len(), 64);
        assert_eq!(a.to_bit_list(5), vec![1, 0, 1, 1, 0]);
    }

    #[test]
    fn range_check() {
        let a: WorldSet = [1, 4].into_iter().collect();
        assert!(a.check_within(5).is_ok());
        assert!(matches!(
            a.check_within(4),
            Err(Error::WorldOutOfRange { world: 4, size: 4 })
        ));
    }
}
