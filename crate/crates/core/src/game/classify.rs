//! Exhaustive player and union classification.
//!
//! Every predicate loops over all `S` (the empty set included) and compares
//! worths with [`Scalar::approx_eq`], so integer and rational games are
//! classified exactly.

use super::coalition::{Coalition, PlayerId};
use super::explicit::ExplicitGame;
use super::partition::Partition;
use super::transform::quotient_game;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct PlayerClass {
    /// `v(S ∪ i) = 0` for all `S`.
    pub nullifying: bool,
    /// `v(S ∪ i) = Σ_{j∈S∪i} v(j)` for all `S`.
    pub dummifying: bool,
}

fn check_player<T: Scalar>(g: &ExplicitGame<T>, i: PlayerId) -> Result<()> {
    if i >= g.n() {
        return Err(Error::PlayerOutOfRange { player: i, n: g.n() });
    }
    Ok(())
}

pub fn classify_player<T: Scalar>(g: &ExplicitGame<T>, i: PlayerId) -> Result<PlayerClass> {
    check_player(g, i)?;
    let singles: Vec<T> = (0..g.n()).map(|j| g.singleton(j).clone()).collect();
    let mut class = PlayerClass {
        nullifying: true,
        dummifying: true,
    };
    for s in g.grand().without(i).subsets() {
        let with_i = s.with(i);
        let w = g.worth(with_i);
        if class.nullifying && !w.approx_zero() {
            class.nullifying = false;
        }
        if class.dummifying {
            let additive = scalar::sum(with_i.members().map(|j| &singles[j]));
            if !w.approx_eq(&additive) {
                class.dummifying = false;
            }
        }
        if !class.nullifying && !class.dummifying {
            break;
        }
    }
    Ok(class)
}

pub fn is_nullifying<T: Scalar>(g: &ExplicitGame<T>, i: PlayerId) -> Result<bool> {
    Ok(classify_player(g, i)?.nullifying)
}

pub fn is_dummifying<T: Scalar>(g: &ExplicitGame<T>, i: PlayerId) -> Result<bool> {
    Ok(classify_player(g, i)?.dummifying)
}

/// `i` and `j` are indistinguishable: `v(S ∪ i) = v(S ∪ j)` for all
/// `S ⊆ N \ {i, j}`.
pub fn classify_pair<T: Scalar>(g: &ExplicitGame<T>, i: PlayerId, j: PlayerId) -> Result<bool> {
    check_player(g, i)?;
    check_player(g, j)?;
    if i == j {
        return Err(Error::Config(format!(
            "pair classification needs distinct players, got {i} twice"
        )));
    }
    let rest = g.grand().without(i).without(j);
    Ok(rest
        .subsets()
        .all(|s: Coalition| g.worth(s.with(i)).approx_eq(g.worth(s.with(j)))))
}

/// `P_k` is a dummifying union when `k` is a dummifying player of `v/P`.
pub fn is_dummifying_union<T: Scalar>(g: &ExplicitGame<T>, p: &Partition, k: usize) -> Result<bool> {
    if k >= p.m() {
        return Err(Error::Config(format!("union {k} out of range for {} unions", p.m())));
    }
    let q = quotient_game(g, p)?;
    is_dummifying(&q, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::transform::{additive_part, scaled_dirac};

    fn c(members: &[usize]) -> Coalition {
        Coalition::from_members(members.iter().copied())
    }

    #[test]
    fn zero_game_is_fully_degenerate() {
        let g = ExplicitGame::<f64>::zero(3).unwrap();
        for i in 0..3 {
            let class = classify_player(&g, i).unwrap();
            assert!(class.nullifying && class.dummifying);
            for j in 0..3 {
                if i != j {
                    assert!(classify_pair(&g, i, j).unwrap());
                }
            }
        }
        let p = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert!((0..2).all(|k| is_dummifying_union(&g, &p, k).unwrap()));
    }

    #[test]
    fn basis_game_outsiders_are_nullifying() {
        let e = scaled_dirac(4, c(&[0, 1]), 3.0).unwrap();
        for i in 2..4 {
            let class = classify_player(&e, i).unwrap();
            assert!(class.nullifying);
            // all singletons are 0 so nullifying and dummifying coincide here
            assert!(class.dummifying);
        }
        assert!(!is_nullifying(&e, 0).unwrap());
        assert!(!is_dummifying(&e, 0).unwrap());
        assert!(classify_pair(&e, 0, 1).unwrap());
        assert!(!classify_pair(&e, 0, 2).unwrap());
    }

    #[test]
    fn additive_players_are_dummifying() {
        let g = ExplicitGame::from_fn(3, |s| s.bits() as f64).unwrap();
        let a = additive_part(&g);
        for i in 0..3 {
            let class = classify_player(&a, i).unwrap();
            assert!(class.dummifying);
            assert!(!class.nullifying);
        }
    }

    #[test]
    fn argument_errors() {
        let g = ExplicitGame::<f64>::zero(2).unwrap();
        assert!(classify_player(&g, 2).is_err());
        assert!(classify_pair(&g, 1, 1).is_err());
        assert!(is_dummifying_union(&g, &Partition::grand(2), 1).is_err());
    }
}
