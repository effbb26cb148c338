use super::coalition::{Coalition, PlayerId};
use super::MAX_EXPLICIT_PLAYERS;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A TU-game `(N, v)` with its characteristic function stored densely:
/// `worths[S.bits()] = v(S)` for all `2^n` coalitions.
#[derive(Clone, Debug, PartialEq)]
pub struct ExplicitGame<T> {
    n: usize,
    worths: Vec<T>,
}

impl<T: Scalar> ExplicitGame<T> {
    pub fn new(n: usize, worths: Vec<T>) -> Result<Self> {
        check_player_count(n)?;
        if worths.len() != 1 << n {
            return Err(Error::WorthLength {
                expected: 1 << n,
                got: worths.len(),
            });
        }
        if !worths[0].is_zero() {
            return Err(Error::EmptyWorth);
        }
        Ok(ExplicitGame { n, worths })
    }

    /// Builds a game from a worth function; `f` is never called on the
    /// empty coalition.
    pub fn from_fn(n: usize, mut f: impl FnMut(Coalition) -> T) -> Result<Self> {
        check_player_count(n)?;
        let worths = (0..1u32 << n)
            .map(|bits| {
                if bits == 0 {
                    T::zero()
                } else {
                    f(Coalition::from_bits(bits))
                }
            })
            .collect();
        Ok(ExplicitGame { n, worths })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| T::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.n)
    }

    pub fn worth(&self, s: Coalition) -> &T {
        &self.worths[s.index()]
    }

    /// `v(i)`, shorthand for `v({i})`.
    pub fn singleton(&self, i: PlayerId) -> &T {
        self.worth(Coalition::singleton(i))
    }

    /// `v(N)`.
    pub fn total(&self) -> &T {
        &self.worths[self.worths.len() - 1]
    }

    pub fn worths(&self) -> &[T] {
        &self.worths
    }

    /// Every coalition paired with its worth, in bit order.
    pub fn iter(&self) -> impl Iterator<Item = (Coalition, &T)> + '_ {
        self.worths
            .iter()
            .enumerate()
            .map(|(bits, w)| (Coalition::from_bits(bits as u32), w))
    }

    pub fn is_zero_game(&self) -> bool {
        self.worths.iter().all(|w| w.approx_zero())
    }

    /// Pointwise comparison under [`Scalar::approx_eq`].
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .worths
                .iter()
                .zip(&other.worths)
                .all(|(a, b)| a.approx_eq(b))
    }

    /// Converts every worth into another scalar type.
    pub fn convert<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ExplicitGame<U> {
        ExplicitGame {
            n: self.n,
            worths: self.worths.iter().map(f).collect(),
        }
    }

    pub(crate) fn set(&mut self, s: Coalition, value: T) {
        debug_assert!(!s.is_empty() || value.is_zero());
        self.worths[s.index()] = value;
    }
}

fn check_player_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_EXPLICIT_PLAYERS {
        Err(Error::PlayerCount(n))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks() {
        assert_eq!(
            ExplicitGame::<f64>::new(2, vec![0.0, 1.0, 2.0]),
            Err(Error::WorthLength {
                expected: 4,
                got: 3
            })
        );
        assert_eq!(
            ExplicitGame::<f64>::new(1, vec![1.0, 1.0]),
            Err(Error::EmptyWorth)
        );
        assert_eq!(ExplicitGame::<f64>::zero(0), Err(Error::PlayerCount(0)));
        assert_eq!(ExplicitGame::<f64>::zero(25), Err(Error::PlayerCount(25)));
    }

    #[test]
    fn accessors() {
        let g = ExplicitGame::from_fn(3, |s| s.len() as f64 * 2.0).unwrap();
        assert_eq!(*g.worth(Coalition::EMPTY), 0.0);
        assert_eq!(*g.singleton(2), 2.0);
        assert_eq!(*g.total(), 6.0);
        assert_eq!(g.iter().count(), 8);
        assert!(!g.is_zero_game());
        assert!(ExplicitGame::<f64>::zero(3).unwrap().is_zero_game());
    }
}
