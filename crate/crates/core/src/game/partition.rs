use serde::{Deserialize, Serialize};

use super::coalition::{Coalition, PlayerId};
use super::MAX_EXPLICIT_PLAYERS;
use crate::error::{Error, Result};

/// A priori union structure `P = {P_1, .., P_m}` over players `0..n`.
///
/// Union order is preserved as given; members inside a union are kept
/// sorted. Not bounded by the bitset width, so summary-only games with
/// hundreds of players can carry one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<PlayerId>>", into = "Vec<Vec<PlayerId>>")]
pub struct Partition {
    unions: Vec<Vec<PlayerId>>,
    union_of: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, unions: Vec<Vec<PlayerId>>) -> Result<Self> {
        let mut union_of = vec![usize::MAX; n];
        let mut unions = unions;
        for (k, members) in unions.iter_mut().enumerate() {
            if members.is_empty() {
                return Err(Error::InvalidPartition(format!("union {k} is empty")));
            }
            members.sort_unstable();
            for &i in members.iter() {
                if i >= n {
                    return Err(Error::PlayerOutOfRange { player: i, n });
                }
                if union_of[i] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "player {i} appears in more than one union"
                    )));
                }
                union_of[i] = k;
            }
        }
        if let Some(i) = union_of.iter().position(|&k| k == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "player {i} belongs to no union"
            )));
        }
        Ok(Partition { unions, union_of })
    }

    /// Builds a partition from a per-player union label vector; union order
    /// follows the labels' first appearance.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut order: Vec<usize> = Vec::new();
        let mut unions: Vec<Vec<PlayerId>> = Vec::new();
        for (i, &label) in labels.iter().enumerate() {
            match order.iter().position(|&l| l == label) {
                Some(k) => unions[k].push(i),
                None => {
                    order.push(label);
                    unions.push(vec![i]);
                }
            }
        }
        Partition::new(labels.len(), unions).expect("labels always yield a partition")
    }

    /// `P^n = {{0}, {1}, .., {n-1}}`.
    pub fn singletons(n: usize) -> Self {
        Partition {
            unions: (0..n).map(|i| vec![i]).collect(),
            union_of: (0..n).collect(),
        }
    }

    /// The one-union partition `{N}`.
    pub fn grand(n: usize) -> Self {
        Partition {
            unions: vec![(0..n).collect()],
            union_of: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.union_of.len()
    }

    /// Number of unions.
    pub fn m(&self) -> usize {
        self.unions.len()
    }

    pub fn unions(&self) -> &[Vec<PlayerId>] {
        &self.unions
    }

    pub fn union(&self, k: usize) -> &[PlayerId] {
        &self.unions[k]
    }

    pub fn union_size(&self, k: usize) -> usize {
        self.unions[k].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.unions.iter().map(Vec::len).collect()
    }

    /// Index of the union containing player `i`.
    pub fn union_of(&self, i: PlayerId) -> usize {
        self.union_of[i]
    }

    /// Smallest player index in union `k`.
    pub fn min_member(&self, k: usize) -> PlayerId {
        self.unions[k][0]
    }

    /// Bitset of union `k`. Only meaningful for `n <= 24`.
    pub fn mask(&self, k: usize) -> Coalition {
        debug_assert!(self.n() <= MAX_EXPLICIT_PLAYERS);
        Coalition::from_members(self.unions[k].iter().copied())
    }

    /// Union of the unions indexed by the members of `r` (a coalition of
    /// the quotient game).
    pub fn expand(&self, r: Coalition) -> Coalition {
        r.members()
            .fold(Coalition::EMPTY, |acc, k| acc.union(self.mask(k)))
    }

    pub fn is_singletons(&self) -> bool {
        self.unions.len() == self.n()
    }

    /// Every set partition of `0..n`, in restricted-growth-string order.
    pub fn enumerate(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        let mut labels = vec![0usize; n];
        loop {
            out.push(Partition::from_labels(&labels));
            // next restricted growth string
            let mut i = n - 1;
            loop {
                if i == 0 {
                    return out;
                }
                let max_prefix = *labels[..i].iter().max().unwrap();
                if labels[i] <= max_prefix {
                    labels[i] += 1;
                    for l in labels.iter_mut().skip(i + 1) {
                        *l = 0;
                    }
                    break;
                }
                i -= 1;
            }
        }
    }
}

impl TryFrom<Vec<Vec<PlayerId>>> for Partition {
    type Error = Error;

    fn try_from(unions: Vec<Vec<PlayerId>>) -> Result<Self> {
        let n = unions.iter().map(Vec::len).sum();
        Partition::new(n, unions)
    }
}

impl From<Partition> for Vec<Vec<PlayerId>> {
    fn from(p: Partition) -> Self {
        p.unions
    }
}
