//! Checking one axiom on one instance.

use super::{AxiomId, Instance, Location};
use crate::error::{Error, Result};
use crate::game::{
    add_games, classify_pair, classify_player, quotient_game, restrict, Allocation, ExplicitGame,
    Partition,
};
use crate::scalar::Scalar;
use crate::values::{ValueKind, ValueSpec};

#[derive(Clone, Debug, PartialEq)]
pub struct Violation<T> {
    pub location: Location,
    pub observed: T,
    pub expected: T,
}

#[derive(Clone, Debug, PartialEq)]
pub enum TrialOutcome<T> {
    /// The axiom's hypothesis is not met anywhere in the instance.
    Vacuous,
    /// The value is undefined on this instance.
    OutOfDomain,
    Holds,
    Violated(Violation<T>),
}

impl<T> TrialOutcome<T> {
    pub fn is_effective(&self) -> bool {
        matches!(self, TrialOutcome::Holds | TrialOutcome::Violated(_))
    }

    pub fn violation(&self) -> Option<&Violation<T>> {
        match self {
            TrialOutcome::Violated(v) => Some(v),
            _ => None,
        }
    }
}

enum Eval<T> {
    Ok(Allocation<T>),
    OutOfDomain,
}

fn eval<T: Scalar>(value: ValueSpec, g: &ExplicitGame<T>, p: &Partition) -> Result<Eval<T>> {
    match value.on_game(g, p) {
        Ok(a) => Ok(Eval::Ok(a)),
        Err(Error::VariantDomain { .. }) => Ok(Eval::OutOfDomain),
        Err(e) => Err(e),
    }
}

macro_rules! allocation {
    ($value:expr, $g:expr, $p:expr) => {
        match eval($value, $g, $p)? {
            Eval::Ok(a) => a,
            Eval::OutOfDomain => return Ok(TrialOutcome::OutOfDomain),
        }
    };
}

/// Compares `observed` to `expected` at each location, reporting the first
/// mismatch.
fn compare<T: Scalar>(items: impl IntoIterator<Item = (Location, T, T)>) -> TrialOutcome<T> {
    let mut any = false;
    for (location, observed, expected) in items {
        any = true;
        if !observed.approx_eq(&expected) {
            return TrialOutcome::Violated(Violation {
                location,
                observed,
                expected,
            });
        }
    }
    if any {
        TrialOutcome::Holds
    } else {
        TrialOutcome::Vacuous
    }
}

/// Pairs `k < l` of players indistinguishable in `g`, optionally limited to
/// pairs sharing a union.
fn indistinguishable_pairs<T: Scalar>(
    g: &ExplicitGame<T>,
    same_union: Option<&Partition>,
) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            if let Some(p) = same_union {
                if p.union_of(i) != p.union_of(j) {
                    continue;
                }
            }
            if classify_pair(g, i, j)? {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

fn union_symmetry<T: Scalar>(value: ValueSpec, inst: &Instance<T>) -> Result<TrialOutcome<T>> {
    let (g, p) = (&inst.game, &inst.partition);
    let q = quotient_game(g, p)?;
    let pairs = indistinguishable_pairs(&q, None)?;
    if pairs.is_empty() {
        return Ok(TrialOutcome::Vacuous);
    }
    let totals = allocation!(value, g, p).union_totals(p);
    Ok(compare(pairs.into_iter().map(|(k, l)| {
        (
            Location::Unions { first: k, second: l },
            totals[l].clone(),
            totals[k].clone(),
        )
    })))
}

/// Players of dummifying unions that satisfy `pick` in their union's
/// subgame, paired with the share they must receive.
fn dummifying_union_members<T: Scalar>(
    g: &ExplicitGame<T>,
    p: &Partition,
    nullifying: bool,
) -> Result<Vec<(usize, T)>> {
    let q = quotient_game(g, p)?;
    let mut out = Vec::new();
    for k in 0..p.m() {
        if !classify_player(&q, k)?.dummifying {
            continue;
        }
        let (sub, players) = restrict(g, p.mask(k))?;
        for (local, &i) in players.iter().enumerate() {
            let class = classify_player(&sub, local)?;
            if nullifying && class.nullifying {
                out.push((i, T::zero()));
            } else if !nullifying && class.dummifying {
                out.push((i, g.singleton(i).clone()));
            }
        }
    }
    Ok(out)
}

pub fn check_instance<T: Scalar>(
    value: ValueSpec,
    axiom: AxiomId,
    inst: &Instance<T>,
) -> Result<TrialOutcome<T>> {
    let (g, p) = (&inst.game, &inst.partition);
    if g.n() != p.n() {
        return Err(Error::PartitionMismatch {
            game: g.n(),
            partition: p.n(),
        });
    }
    match axiom {
        AxiomId::Eff => {
            let a = allocation!(value, g, p);
            Ok(compare([(Location::Total, a.total(), g.total().clone())]))
        }
        AxiomId::Add => {
            let w = inst
                .other
                .as_ref()
                .ok_or_else(|| Error::Config("additivity needs a pair of games".into()))?;
            let sum = add_games(g, w)?;
            let a = allocation!(value, g, p);
            let b = allocation!(value, w, p);
            let c = allocation!(value, &sum, p);
            Ok(compare((0..g.n()).map(|i| {
                (
                    Location::Player { player: i },
                    c[i].clone(),
                    a[i].clone() + b[i].clone(),
                )
            })))
        }
        AxiomId::Swu => {
            let pairs = indistinguishable_pairs(g, Some(p))?;
            if pairs.is_empty() {
                return Ok(TrialOutcome::Vacuous);
            }
            let a = allocation!(value, g, p);
            Ok(compare(pairs.into_iter().map(|(i, j)| {
                (
                    Location::Pair { first: i, second: j },
                    a[j].clone(),
                    a[i].clone(),
                )
            })))
        }
        AxiomId::Sau => union_symmetry(value, inst),
        AxiomId::Wsau => {
            if (0..g.n()).any(|j| !g.singleton(j).is_zero()) {
                return Ok(TrialOutcome::Vacuous);
            }
            union_symmetry(value, inst)
        }
        AxiomId::Npp | AxiomId::Dpp => {
            let mut targets = Vec::new();
            for i in 0..g.n() {
                let class = classify_player(g, i)?;
                if axiom == AxiomId::Npp && class.nullifying {
                    targets.push((i, T::zero()));
                } else if axiom == AxiomId::Dpp && class.dummifying {
                    targets.push((i, g.singleton(i).clone()));
                }
            }
            if targets.is_empty() {
                return Ok(TrialOutcome::Vacuous);
            }
            let a = allocation!(value, g, p);
            Ok(compare(targets.into_iter().map(|(i, expected)| {
                (Location::Player { player: i }, a[i].clone(), expected)
            })))
        }
        AxiomId::Dupp | AxiomId::Dunpp => {
            let targets = dummifying_union_members(g, p, axiom == AxiomId::Dunpp)?;
            if targets.is_empty() {
                return Ok(TrialOutcome::Vacuous);
            }
            let a = allocation!(value, g, p);
            Ok(compare(targets.into_iter().map(|(i, expected)| {
                (Location::Player { player: i }, a[i].clone(), expected)
            })))
        }
        AxiomId::Qgp => {
            let q = quotient_game(g, p)?;
            let a = allocation!(value, g, p);
            let on_quotient = allocation!(value, &q, &Partition::singletons(p.m()));
            let totals = a.union_totals(p);
            Ok(compare(totals.into_iter().enumerate().map(|(k, total)| {
                (Location::Union { union: k }, total, on_quotient[k].clone())
            })))
        }
        AxiomId::Coalitional => {
            let ValueSpec::Named(kind) = value else {
                return Err(Error::Config(format!(
                    "{value} has no base value to reduce to"
                )));
            };
            let base: ValueKind = kind.coalitional_base();
            let singletons = Partition::singletons(g.n());
            let a = allocation!(value, g, &singletons);
            let b = allocation!(ValueSpec::Named(base), g, &singletons);
            Ok(compare((0..g.n()).map(|i| {
                (Location::Player { player: i }, a[i].clone(), b[i].clone())
            })))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{scaled_dirac, Coalition};

    fn c(members: &[usize]) -> Coalition {
        Coalition::from_members(members.iter().copied())
    }

    fn game(n: usize, entries: &[(&[usize], i64)]) -> ExplicitGame<f64> {
        ExplicitGame::from_fn(n, |s| {
            entries
                .iter()
                .find(|(m, _)| c(m) == s)
                .map_or(0.0, |(_, w)| *w as f64)
        })
        .unwrap()
    }

    fn named(kind: ValueKind) -> ValueSpec {
        ValueSpec::Named(kind)
    }

    #[test]
    fn standalone_value_breaks_union_symmetry() {
        // v({0}) = 1, everything else 0: unions {0,1} and {2} are
        // indistinguishable in the quotient game but their stand-alone
        // totals are 1 and 0.
        let g = game(3, &[(&[0], 1)]);
        let p = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let out = check_instance("T1.1".parse().unwrap(), AxiomId::Sau, &Instance::new(g, p)).unwrap();
        let v = out.violation().expect("violation");
        assert_eq!(v.location, Location::Unions { first: 0, second: 1 });
    }

    #[test]
    fn esd3u_breaks_sau_and_qgp() {
        let g = game(3, &[(&[0], 1)]);
        let p = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let inst = Instance::new(g, p);
        assert!(check_instance(named(ValueKind::Esd3u), AxiomId::Sau, &inst)
            .unwrap()
            .violation()
            .is_some());
        assert!(check_instance(named(ValueKind::Esd3u), AxiomId::Qgp, &inst)
            .unwrap()
            .violation()
            .is_some());
        assert_eq!(
            check_instance(named(ValueKind::Esd1u), AxiomId::Qgp, &inst).unwrap(),
            TrialOutcome::Holds
        );
    }

    #[test]
    fn esd1u_breaks_npp() {
        // player 0 nullifying, v({1,2}) = 1
        let g = game(3, &[(&[1, 2], 1)]);
        let p = Partition::new(3, vec![vec![0], vec![1, 2]]).unwrap();
        let inst = Instance::new(g, p);
        let out = check_instance(named(ValueKind::Esd1u), AxiomId::Npp, &inst).unwrap();
        let v = out.violation().unwrap();
        assert_eq!(v.location, Location::Player { player: 0 });
        assert_eq!(v.observed, -0.5);
        assert_eq!(
            check_instance(named(ValueKind::Edu), AxiomId::Npp, &inst).unwrap(),
            TrialOutcome::Holds
        );
    }

    #[test]
    fn vacuous_when_hypothesis_absent() {
        let g = game(2, &[(&[0], 1), (&[1], 2), (&[0, 1], 5)]);
        let inst = Instance::new(g, Partition::grand(2));
        for axiom in [AxiomId::Npp, AxiomId::Dpp, AxiomId::Swu, AxiomId::Sau, AxiomId::Wsau] {
            assert_eq!(
                check_instance(named(ValueKind::Edu), axiom, &inst).unwrap(),
                TrialOutcome::Vacuous,
                "{axiom}"
            );
        }
    }

    #[test]
    fn zero_game_passes_everything_in_domain() {
        let inst = Instance::pair(
            ExplicitGame::<f64>::zero(4).unwrap(),
            ExplicitGame::zero(4).unwrap(),
            Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap(),
        );
        for kind in ValueKind::UNION_VALUES {
            for axiom in AxiomId::ALL {
                let out = check_instance(named(kind), axiom, &inst).unwrap();
                assert!(
                    matches!(out, TrialOutcome::Holds | TrialOutcome::Vacuous),
                    "{kind:?} {axiom}"
                );
            }
        }
        let out = check_instance("T1.5".parse().unwrap(), AxiomId::Npp, &inst).unwrap();
        assert_eq!(out, TrialOutcome::OutOfDomain);
    }

    #[test]
    fn additivity_needs_second_game() {
        let inst = Instance::new(ExplicitGame::<f64>::zero(2).unwrap(), Partition::grand(2));
        assert!(check_instance(named(ValueKind::Ed), AxiomId::Add, &inst).is_err());
    }

    #[test]
    fn dummifying_union_checks() {
        // e_T with T not a union of unions: quotient is the zero game, so
        // every union is dummifying and outsiders of T are nullifying.
        let e = scaled_dirac(4, c(&[0, 2]), 3.0).unwrap();
        let p = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let inst = Instance::new(e, p);
        for (kind, axiom) in [
            (ValueKind::Esd1u, AxiomId::Dunpp),
            (ValueKind::Esd2u, AxiomId::Dupp),
            (ValueKind::Esd3u, AxiomId::Dpp),
        ] {
            assert_eq!(
                check_instance(named(kind), axiom, &inst).unwrap(),
                TrialOutcome::Holds
            );
        }
    }

    #[test]
    fn coalitional_requires_named_value() {
        let inst = Instance::new(ExplicitGame::<f64>::zero(2).unwrap(), Partition::grand(2));
        assert!(check_instance("T1.3".parse().unwrap(), AxiomId::Coalitional, &inst).is_err());
        assert_eq!(
            check_instance(named(ValueKind::Esd2u), AxiomId::Coalitional, &inst).unwrap(),
            TrialOutcome::Holds
        );
    }
}
