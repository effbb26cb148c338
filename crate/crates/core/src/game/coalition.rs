use std::fmt;

use serde::{Deserialize, Serialize};

/// Dense player index in `0..n`.
pub type PlayerId = usize;

/// A set of players stored as a bitset; bit `i` is player `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_bits(bits: u32) -> Self {
        Coalition(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The grand coalition `{0, .., n-1}`.
    pub fn grand(n: usize) -> Self {
        debug_assert!(n <= 31);
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: PlayerId) -> Self {
        Coalition(1 << i)
    }

    pub fn from_members<I: IntoIterator<Item = PlayerId>>(members: I) -> Self {
        members.into_iter().fold(Coalition::EMPTY, |c, i| c.with(i))
    }

    pub fn contains(self, i: PlayerId) -> bool {
        self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: PlayerId) -> Self {
        Coalition(self.0 | 1 << i)
    }

    #[must_use]
    pub fn without(self, i: PlayerId) -> Self {
        Coalition(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    #[must_use]
    pub fn union(self, other: Coalition) -> Self {
        Coalition(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Coalition) -> Self {
        Coalition(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Coalition) -> Self {
        Coalition(self.0 & !other.0)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Members in increasing order.
    pub fn members(self) -> Members {
        Members(self.0)
    }

    /// Every subset of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.members().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug)]
pub struct Members(u32);

impl Iterator for Members {
    type Item = PlayerId;

    fn next(&mut self) -> Option<PlayerId> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// Submask enumeration in increasing numeric order.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(Coalition(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_are_sorted() {
        let c = Coalition::from_members([4, 0, 2]);
        assert_eq!(c.members().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(c.len(), 3);
        assert_eq!(c.to_string(), "{0,2,4}");
    }

    #[test]
    fn subsets_enumerate_every_submask_once() {
        let c = Coalition::from_members([1, 3, 4]);
        let subs: Vec<_> = c.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], Coalition::EMPTY);
        assert_eq!(*subs.last().unwrap(), c);
        assert!(subs.iter().all(|s| s.is_subset_of(c)));
        let mut bits: Vec<_> = subs.iter().map(|s| s.bits()).collect();
        bits.dedup();
        assert_eq!(bits.len(), 8);
        assert_eq!(Coalition::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn set_algebra() {
        let a = Coalition::from_members([0, 1]);
        let b = Coalition::from_members([1, 2]);
        assert_eq!(a.union(b), Coalition::grand(3));
        assert_eq!(a.intersection(b), Coalition::singleton(1));
        assert_eq!(a.difference(b), Coalition::singleton(0));
        assert!(a.without(0).is_subset_of(b));
        assert!(Coalition::grand(0).is_empty());
    }
}
