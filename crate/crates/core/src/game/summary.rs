use std::ops::Index;

use super::coalition::PlayerId;
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// The worths every egalitarian union value actually reads: `v(i)` for each
/// player, `v(P_k)` for each union and `v(N)`.
///
/// Unlike [`ExplicitGame`](super::ExplicitGame) this has no player bound.
#[derive(Clone, Debug, PartialEq)]
pub struct GameSummary<T> {
    singleton: Vec<T>,
    partition: Partition,
    union_worth: Vec<T>,
    total: T,
}

impl<T: Scalar> GameSummary<T> {
    pub fn new(singleton: Vec<T>, partition: Partition, union_worth: Vec<T>, total: T) -> Result<Self> {
        if singleton.is_empty() {
            return Err(Error::InvalidSummary("no players".into()));
        }
        if singleton.len() != partition.n() {
            return Err(Error::PartitionMismatch {
                game: singleton.len(),
                partition: partition.n(),
            });
        }
        if union_worth.len() != partition.m() {
            return Err(Error::InvalidSummary(format!(
                "{} union worths for {} unions",
                union_worth.len(),
                partition.m()
            )));
        }
        Ok(GameSummary {
            singleton,
            partition,
            union_worth,
            total,
        })
    }

    pub fn n(&self) -> usize {
        self.singleton.len()
    }

    pub fn m(&self) -> usize {
        self.partition.m()
    }

    pub fn singleton(&self, i: PlayerId) -> &T {
        &self.singleton[i]
    }

    pub fn singletons(&self) -> &[T] {
        &self.singleton
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn union_worth(&self, k: usize) -> &T {
        &self.union_worth[k]
    }

    pub fn union_worths(&self) -> &[T] {
        &self.union_worth
    }

    pub fn total(&self) -> &T {
        &self.total
    }

    /// The same worths under a different union structure. Union worths must
    /// be supplied again since they depend on the partition.
    pub fn with_partition(&self, partition: Partition, union_worth: Vec<T>) -> Result<Self> {
        GameSummary::new(self.singleton.clone(), partition, union_worth, self.total.clone())
    }

    /// `Σ_{j∈P_k} v(j)`.
    pub fn union_singleton_sum(&self, k: usize) -> T {
        scalar::sum(self.partition.union(k).iter().map(|&j| &self.singleton[j]))
    }
}

/// A payoff (or cost share) vector, one entry per player.
#[derive(Clone, Debug, PartialEq)]
pub struct Allocation<T> {
    shares: Vec<T>,
}

impl<T: Scalar> Allocation<T> {
    pub fn new(shares: Vec<T>) -> Self {
        Allocation { shares }
    }

    pub fn len(&self) -> usize {
        self.shares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shares.is_empty()
    }

    pub fn shares(&self) -> &[T] {
        &self.shares
    }

    pub fn into_shares(self) -> Vec<T> {
        self.shares
    }

    pub fn total(&self) -> T {
        scalar::sum(&self.shares)
    }

    /// Efficiency: shares add up to `v(N)`.
    pub fn is_efficient(&self, total: &T) -> bool {
        self.total().approx_eq(total)
    }

    /// `Σ_{i∈P_k} g_i` for every union.
    pub fn union_totals(&self, partition: &Partition) -> Vec<T> {
        partition
            .unions()
            .iter()
            .map(|u| scalar::sum(u.iter().map(|&i| &self.shares[i])))
            .collect()
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.shares.len() == other.shares.len()
            && self
                .shares
                .iter()
                .zip(&other.shares)
                .all(|(a, b)| a.approx_eq(b))
    }

    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        Allocation::new(
            self.shares
                .iter()
                .zip(&other.shares)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    #[must_use]
    pub fn scale(&self, c: &T) -> Self {
        Allocation::new(self.shares.iter().map(|a| a.clone() * c.clone()).collect())
    }
}

impl<T> Index<PlayerId> for Allocation<T> {
    type Output = T;

    fn index(&self, i: PlayerId) -> &T {
        &self.shares[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_validates_lengths() {
        let p = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert!(GameSummary::new(vec![1.0, 2.0, 3.0], p.clone(), vec![4.0, 3.0], 9.0).is_ok());
        assert!(matches!(
            GameSummary::new(vec![1.0, 2.0], p.clone(), vec![4.0, 3.0], 9.0),
            Err(Error::PartitionMismatch { .. })
        ));
        assert!(matches!(
            GameSummary::new(vec![1.0, 2.0, 3.0], p, vec![4.0], 9.0),
            Err(Error::InvalidSummary(_))
        ));
    }

    #[test]
    fn union_totals_and_efficiency() {
        let p = Partition::new(4, vec![vec![0, 3], vec![1, 2]]).unwrap();
        let a = Allocation::new(vec![1.0, 2.0, 3.0, 4.0]);
        assert_eq!(a.union_totals(&p), vec![5.0, 5.0]);
        assert!(a.is_efficient(&10.0));
        assert!(!a.is_efficient(&10.1));
        assert_eq!(a.add(&a).scale(&0.5), a);
        assert_eq!(a[3], 4.0);
    }
}
