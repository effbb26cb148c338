//! Machine-checkable axioms for values on games with a priori unions.
//!
//! Axioms are universally quantified, so they can only be checked on
//! finitely many games. Two tiers do that: an exhaustive tier over every
//! small integer game (and every partition), and a randomized tier whose
//! generator plants the structure each axiom's hypothesis needs
//! (nullifying players, symmetric unions, dummifying unions, ...).

mod check;
mod generate;
mod runner;
mod suites;
mod tiers;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use check::{check_instance, TrialOutcome, Violation};
pub use generate::{
    plant, random_game, random_instance, random_partition, GenConfig, Plant, Structure, WorthDist,
};
pub use runner::{
    check_axiom, trial_instance, CheckConfig, CheckReport, Mode, Outcome, ReportRecord, Witness,
    WitnessRecord,
};
pub use suites::{
    characterization_expectations, characterization_suite, excluded_axiom, independence_suite,
    theorem_axioms, Expectation, SuiteEntry, Verdict,
};
pub use tiers::{search_tiers, verification_tiers, Tier};

use crate::error::{Error, Result};
use crate::game::{ExplicitGame, Partition, PlayerId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    /// Shares add up to `v(N)`.
    Eff,
    /// `g(v + w) = g(v) + g(w)` for a common partition.
    Add,
    /// Indistinguishable players in the same union get equal shares.
    Swu,
    /// Unions indistinguishable in the quotient game get equal totals.
    Sau,
    /// SAU restricted to games with every `v(j) = 0`.
    Wsau,
    /// Nullifying players get 0.
    Npp,
    /// Dummifying players get `v(i)`.
    Dpp,
    /// In a dummifying union, players dummifying in the union's subgame get `v(i)`.
    Dupp,
    /// In a dummifying union, players nullifying in the union's subgame get 0.
    Dunpp,
    /// Union totals equal the value of the quotient game under `P^m`.
    Qgp,
    /// Under `P^n` the value coincides with its base value without unions.
    Coalitional,
}

impl AxiomId {
    pub const ALL: [AxiomId; 11] = [
        AxiomId::Eff,
        AxiomId::Add,
        AxiomId::Swu,
        AxiomId::Sau,
        AxiomId::Wsau,
        AxiomId::Npp,
        AxiomId::Dpp,
        AxiomId::Dupp,
        AxiomId::Dunpp,
        AxiomId::Qgp,
        AxiomId::Coalitional,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Eff => "EFF",
            AxiomId::Add => "ADD",
            AxiomId::Swu => "SWU",
            AxiomId::Sau => "SAU",
            AxiomId::Wsau => "WSAU",
            AxiomId::Npp => "NPP",
            AxiomId::Dpp => "DPP",
            AxiomId::Dupp => "DUPP",
            AxiomId::Dunpp => "DUNPP",
            AxiomId::Qgp => "QGP",
            AxiomId::Coalitional => "COALITIONAL",
        }
    }

    /// Checks that need a second game.
    pub fn is_pairwise(self) -> bool {
        self == AxiomId::Add
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name() == upper)
            .ok_or_else(|| Error::Config(format!("unknown axiom `{s}`")))
    }
}

impl Serialize for AxiomId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for AxiomId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One configuration an axiom is checked on. `other` is the second game of
/// an additivity check.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance<T> {
    pub game: ExplicitGame<T>,
    pub other: Option<ExplicitGame<T>>,
    pub partition: Partition,
}

impl<T> Instance<T> {
    pub fn new(game: ExplicitGame<T>, partition: Partition) -> Self {
        Instance {
            game,
            other: None,
            partition,
        }
    }

    pub fn pair(game: ExplicitGame<T>, other: ExplicitGame<T>, partition: Partition) -> Self {
        Instance {
            game,
            other: Some(other),
            partition,
        }
    }
}

/// Where in an allocation a violation shows up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Location {
    /// The sum of all shares.
    Total,
    Player { player: PlayerId },
    /// Two indistinguishable players of one union.
    Pair { first: PlayerId, second: PlayerId },
    /// Two unions indistinguishable in the quotient game.
    Unions { first: usize, second: usize },
    /// The total of one union.
    Union { union: usize },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Total => write!(f, "total"),
            Location::Player { player } => write!(f, "player {player}"),
            Location::Pair { first, second } => write!(f, "players {first},{second}"),
            Location::Unions { first, second } => write!(f, "unions {first},{second}"),
            Location::Union { union } => write!(f, "union {union}"),
        }
    }
}
