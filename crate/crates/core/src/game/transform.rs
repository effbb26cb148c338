//! Game constructions: quotient, restriction, normalization, basis games and
//! the decompositions used in the uniqueness arguments.

use super::coalition::{Coalition, PlayerId};
use super::explicit::ExplicitGame;
use super::partition::Partition;
use super::summary::GameSummary;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

fn check_partition<T: Scalar>(g: &ExplicitGame<T>, p: &Partition) -> Result<()> {
    if g.n() != p.n() {
        return Err(Error::PartitionMismatch {
            game: g.n(),
            partition: p.n(),
        });
    }
    Ok(())
}

fn check_same_size<T: Scalar>(a: &ExplicitGame<T>, b: &ExplicitGame<T>) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    Ok(())
}

/// `(v/P)(R) = v(∪_{r∈R} P_r)`, a game on the `m` union indices.
pub fn quotient_game<T: Scalar>(g: &ExplicitGame<T>, p: &Partition) -> Result<ExplicitGame<T>> {
    check_partition(g, p)?;
    let masks: Vec<Coalition> = (0..p.m()).map(|k| p.mask(k)).collect();
    ExplicitGame::from_fn(p.m(), |r| {
        let s = r
            .members()
            .fold(Coalition::EMPTY, |acc, k| acc.union(masks[k]));
        g.worth(s).clone()
    })
}

/// The subgame on `c`, with its players renumbered `0..|c|` in their
/// original order. The second component maps new indices to old ones.
pub fn restrict<T: Scalar>(
    g: &ExplicitGame<T>,
    c: Coalition,
) -> Result<(ExplicitGame<T>, Vec<PlayerId>)> {
    if c.is_empty() {
        return Err(Error::DegenerateCoalition(
            "cannot restrict to the empty coalition".into(),
        ));
    }
    if !c.is_subset_of(g.grand()) {
        return Err(Error::DegenerateCoalition(format!(
            "{c} is not a coalition of a {}-player game",
            g.n()
        )));
    }
    let players: Vec<PlayerId> = c.members().collect();
    let sub = ExplicitGame::from_fn(players.len(), |s| {
        let image = Coalition::from_members(s.members().map(|i| players[i]));
        g.worth(image).clone()
    })?;
    Ok((sub, players))
}

/// `v⁰(S) = v(S) - Σ_{i∈S} v(i)`.
pub fn zero_normalize<T: Scalar>(g: &ExplicitGame<T>) -> ExplicitGame<T> {
    let singles: Vec<T> = (0..g.n()).map(|i| g.singleton(i).clone()).collect();
    ExplicitGame::from_fn(g.n(), |s| {
        g.worth(s).clone() - scalar::sum(s.members().map(|i| &singles[i]))
    })
    .expect("player count already validated")
}

/// `vᵃ(S) = Σ_{i∈S} v(i)`.
pub fn additive_part<T: Scalar>(g: &ExplicitGame<T>) -> ExplicitGame<T> {
    let singles: Vec<T> = (0..g.n()).map(|i| g.singleton(i).clone()).collect();
    ExplicitGame::from_fn(g.n(), |s| scalar::sum(s.members().map(|i| &singles[i])))
        .expect("player count already validated")
}

/// The basis game `e_T^α`: worth `α` on `T`, zero elsewhere.
pub fn scaled_dirac<T: Scalar>(n: usize, t: Coalition, alpha: T) -> Result<ExplicitGame<T>> {
    if t.is_empty() {
        return Err(Error::DegenerateCoalition(
            "basis game needs a nonempty support".into(),
        ));
    }
    if !t.is_subset_of(Coalition::grand(n)) {
        return Err(Error::DegenerateCoalition(format!(
            "{t} is not a coalition of {n} players"
        )));
    }
    ExplicitGame::from_fn(n, |s| if s == t { alpha.clone() } else { T::zero() })
}

/// Coordinates of `g` in the basis `{e_T}`: every nonempty `T` with a
/// nonzero worth.
pub fn dirac_decompose<T: Scalar>(g: &ExplicitGame<T>) -> Vec<(Coalition, T)> {
    g.iter()
        .filter(|(s, w)| !s.is_empty() && !w.is_zero())
        .map(|(s, w)| (s, w.clone()))
        .collect()
}

/// Reassembles a game from basis coordinates.
pub fn dirac_compose<T: Scalar>(n: usize, parts: &[(Coalition, T)]) -> Result<ExplicitGame<T>> {
    parts.iter().try_fold(ExplicitGame::zero(n)?, |acc, (t, alpha)| {
        add_games(&acc, &scaled_dirac(n, *t, alpha.clone())?)
    })
}

pub fn add_games<T: Scalar>(a: &ExplicitGame<T>, b: &ExplicitGame<T>) -> Result<ExplicitGame<T>> {
    check_same_size(a, b)?;
    ExplicitGame::new(
        a.n(),
        a.worths()
            .iter()
            .zip(b.worths())
            .map(|(x, y)| x.clone() + y.clone())
            .collect(),
    )
}

pub fn sub_games<T: Scalar>(a: &ExplicitGame<T>, b: &ExplicitGame<T>) -> Result<ExplicitGame<T>> {
    check_same_size(a, b)?;
    ExplicitGame::new(
        a.n(),
        a.worths()
            .iter()
            .zip(b.worths())
            .map(|(x, y)| x.clone() - y.clone())
            .collect(),
    )
}

pub fn scale_game<T: Scalar>(a: &ExplicitGame<T>, c: &T) -> ExplicitGame<T> {
    ExplicitGame::new(a.n(), a.worths().iter().map(|x| x.clone() * c.clone()).collect())
        .expect("scaling keeps v(∅) = 0")
}

/// `v¹(S) = Σ_{P_l ⊆ S} v(P_l)`.
pub fn union_floor_game<T: Scalar>(g: &ExplicitGame<T>, p: &Partition) -> Result<ExplicitGame<T>> {
    check_partition(g, p)?;
    let unions: Vec<(Coalition, T)> = (0..p.m())
        .map(|k| (p.mask(k), g.worth(p.mask(k)).clone()))
        .collect();
    ExplicitGame::from_fn(g.n(), |s| {
        scalar::sum(
            unions
                .iter()
                .filter(|(u, _)| u.is_subset_of(s))
                .map(|(_, w)| w),
        )
    })
}

/// Reads off the singleton, union and grand-coalition worths.
pub fn summary_from_explicit<T: Scalar>(g: &ExplicitGame<T>, p: &Partition) -> Result<GameSummary<T>> {
    check_partition(g, p)?;
    GameSummary::new(
        (0..g.n()).map(|i| g.singleton(i).clone()).collect(),
        p.clone(),
        (0..p.m()).map(|k| g.worth(p.mask(k)).clone()).collect(),
        g.total().clone(),
    )
}
