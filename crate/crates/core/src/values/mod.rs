//! Egalitarian values with and without a priori unions, plus the catalog of
//! independence counterexamples.
//!
//! All values read only `v(i)`, `v(P_k)` and `v(N)`, so the canonical input
//! is a [`GameSummary`]; explicit games are summarized first. The
//! [`direct`] module recomputes the six named values from the explicit game
//! through quotient games and normalizations, as an independent route.

pub mod direct;
mod formula;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use formula::{evaluate, minimal_standalone, Base, Formula, Split};

use crate::error::{Error, Result};
use crate::game::{summary_from_explicit, Allocation, ExplicitGame, GameSummary, Partition};
use crate::scalar::Scalar;

/// The six named values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValueKind {
    /// Equal division, ignores the unions.
    Ed,
    /// Equal surplus division, ignores the unions.
    Esd,
    /// Equal division across unions, then within.
    Edu,
    Esd1u,
    Esd2u,
    Esd3u,
}

impl ValueKind {
    pub const ALL: [ValueKind; 6] = [
        ValueKind::Ed,
        ValueKind::Esd,
        ValueKind::Edu,
        ValueKind::Esd1u,
        ValueKind::Esd2u,
        ValueKind::Esd3u,
    ];

    /// The four values that use the union structure.
    pub const UNION_VALUES: [ValueKind; 4] = [
        ValueKind::Edu,
        ValueKind::Esd1u,
        ValueKind::Esd2u,
        ValueKind::Esd3u,
    ];

    pub fn formula(self) -> Formula {
        use {Base::*, Split::*};
        match self {
            ValueKind::Ed => Formula::divide(Zero, PerCapita),
            ValueKind::Esd => Formula::divide(Standalone, PerCapita),
            ValueKind::Edu => Formula::divide(Zero, AcrossUnions),
            ValueKind::Esd1u => Formula::divide(UnionAverage, AcrossUnions),
            ValueKind::Esd2u => Formula::divide(UnionSurplus, AcrossUnions),
            ValueKind::Esd3u => Formula::divide(Standalone, AcrossUnions),
        }
    }

    /// The value without unions that this one reduces to under `P^n`.
    pub fn coalitional_base(self) -> ValueKind {
        match self {
            ValueKind::Ed | ValueKind::Edu => ValueKind::Ed,
            _ => ValueKind::Esd,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ValueKind::Ed => "ed",
            ValueKind::Esd => "esd",
            ValueKind::Edu => "edu",
            ValueKind::Esd1u => "esd1u",
            ValueKind::Esd2u => "esd2u",
            ValueKind::Esd3u => "esd3u",
        }
    }

    /// Infallible on summaries: the named values have no domain gaps.
    pub fn compute<T: Scalar>(self, s: &GameSummary<T>) -> Allocation<T> {
        evaluate(self.formula(), s, self.name()).expect("named values are defined on every game")
    }
}

/// Which characterization an independence counterexample belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theorem {
    /// Equal division with unions.
    T1,
    /// First equal surplus extension.
    T2,
    /// Second equal surplus extension.
    T3,
    /// Third equal surplus extension.
    T4,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::T1, Theorem::T2, Theorem::T3, Theorem::T4];

    /// The value this theorem characterizes.
    pub fn value(self) -> ValueKind {
        match self {
            Theorem::T1 => ValueKind::Edu,
            Theorem::T2 => ValueKind::Esd1u,
            Theorem::T3 => ValueKind::Esd2u,
            Theorem::T4 => ValueKind::Esd3u,
        }
    }

    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t1" | "1" => Ok(Theorem::T1),
            "t2" | "2" => Ok(Theorem::T2),
            "t3" | "3" => Ok(Theorem::T3),
            "t4" | "4" => Ok(Theorem::T4),
            _ => Err(Error::UnknownValue(s.to_string())),
        }
    }
}

/// One counterexample of the independence catalog, `T<theorem>.<item>`
/// with items numbered 1..=5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariantId {
    theorem: Theorem,
    item: u8,
}

impl VariantId {
    pub fn new(theorem: Theorem, item: u8) -> Result<Self> {
        if !(1..=5).contains(&item) {
            return Err(Error::UnknownValue(format!("T{}.{item}", theorem.number())));
        }
        Ok(VariantId { theorem, item })
    }

    pub fn theorem(self) -> Theorem {
        self.theorem
    }

    pub fn item(self) -> u8 {
        self.item
    }

    /// All twenty catalog entries.
    pub fn all() -> impl Iterator<Item = VariantId> {
        Theorem::ALL
            .into_iter()
            .flat_map(|theorem| (1..=5).map(move |item| VariantId { theorem, item }))
    }

    pub fn of_theorem(theorem: Theorem) -> impl Iterator<Item = VariantId> {
        (1..=5).map(move |item| VariantId { theorem, item })
    }

    pub fn formula(self) -> Formula {
        use {Base::*, Split::*};
        let divide = Formula::divide;
        match (self.theorem, self.item) {
            (_, 1) => Formula::StandaloneOnly,
            (Theorem::T1, 2) => divide(UnionAverage, AcrossUnions),
            (Theorem::T1, 3) => divide(Zero, PerCapita),
            (Theorem::T1, 4) => divide(Zero, MinIndex),
            (Theorem::T1, 5) => divide(Zero, MinStandalone),
            (Theorem::T2, 2) => divide(UnionAverage, PerCapita),
            (Theorem::T2, 3) => divide(UnionAverage, MinIndex),
            (Theorem::T2, 4) => divide(UnionAverage, MinStandalone),
            (Theorem::T2, 5) => divide(UnionSurplus, AcrossUnions),
            (Theorem::T3, 2) => divide(UnionSurplus, PerCapita),
            (Theorem::T3, 3) => divide(UnionSurplus, MinIndex),
            (Theorem::T3, 4) => divide(UnionSurplus, MinStandalone),
            (Theorem::T3, 5) => divide(UnionAverage, AcrossUnions),
            (Theorem::T4, 2) => divide(Standalone, PerCapita),
            (Theorem::T4, 3) => divide(Standalone, MinIndex),
            (Theorem::T4, 4) => divide(Standalone, MinStandalone),
            (Theorem::T4, 5) => divide(UnionAverage, AcrossUnions),
            _ => unreachable!("item range checked on construction"),
        }
    }
}

impl fmt::Display for VariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}.{}", self.theorem.number(), self.item)
    }
}

impl FromStr for VariantId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownValue(s.to_string());
        let (theorem, item) = s.split_once('.').ok_or_else(bad)?;
        let theorem: Theorem = theorem.parse().map_err(|_| bad())?;
        let item: u8 = item.parse().map_err(|_| bad())?;
        VariantId::new(theorem, item).map_err(|_| bad())
    }
}

/// Selects a named value or a catalog counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValueSpec {
    Named(ValueKind),
    Variant(VariantId),
}

impl ValueSpec {
    pub fn formula(self) -> Formula {
        match self {
            ValueSpec::Named(kind) => kind.formula(),
            ValueSpec::Variant(id) => id.formula(),
        }
    }

    pub fn is_efficient(self) -> bool {
        self.formula().is_efficient()
    }

    pub fn on_summary<T: Scalar>(self, s: &GameSummary<T>) -> Result<Allocation<T>> {
        evaluate(self.formula(), s, &self.to_string())
    }

    pub fn on_game<T: Scalar>(self, g: &ExplicitGame<T>, p: &Partition) -> Result<Allocation<T>> {
        self.on_summary(&summary_from_explicit(g, p)?)
    }
}

impl From<ValueKind> for ValueSpec {
    fn from(kind: ValueKind) -> Self {
        ValueSpec::Named(kind)
    }
}

impl From<VariantId> for ValueSpec {
    fn from(id: VariantId) -> Self {
        ValueSpec::Variant(id)
    }
}

impl fmt::Display for ValueSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueSpec::Named(kind) => f.write_str(kind.name()),
            ValueSpec::Variant(id) => id.fmt(f),
        }
    }
}

impl FromStr for ValueSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if let Some(kind) = ValueKind::ALL.into_iter().find(|k| k.name() == lower) {
            return Ok(ValueSpec::Named(kind));
        }
        lower.parse::<VariantId>().map(ValueSpec::Variant)
    }
}

impl Serialize for ValueSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ValueSpec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `ED_i = v(N)/n`.
pub fn equal_division<T: Scalar>(s: &GameSummary<T>) -> Allocation<T> {
    ValueKind::Ed.compute(s)
}

/// `ESD_i = v(i) + v⁰(N)/n`.
pub fn equal_surplus_division<T: Scalar>(s: &GameSummary<T>) -> Allocation<T> {
    ValueKind::Esd.compute(s)
}

/// `ED^U_i = v(N)/(m p_k)`.
pub fn equal_division_unions<T: Scalar>(s: &GameSummary<T>) -> Allocation<T> {
    ValueKind::Edu.compute(s)
}

/// `v(P_k)/p_k + (v(N) - Σ_l v(P_l))/(m p_k)`.
pub fn esd1_unions<T: Scalar>(s: &GameSummary<T>) -> Allocation<T> {
    ValueKind::Esd1u.compute(s)
}

/// `v(i) + (v(P_k) - Σ_{j∈P_k} v(j))/p_k + (v(N) - Σ_l v(P_l))/(m p_k)`.
pub fn esd2_unions<T: Scalar>(s: &GameSummary<T>) -> Allocation<T> {
    ValueKind::Esd2u.compute(s)
}

/// `v(i) + (v(N) - Σ_j v(j))/(m p_k)`.
pub fn esd3_unions<T: Scalar>(s: &GameSummary<T>) -> Allocation<T> {
    ValueKind::Esd3u.compute(s)
}

/// A catalog counterexample on an explicit game.
pub fn appendix_value<T: Scalar>(id: VariantId, g: &ExplicitGame<T>, p: &Partition) -> Result<Allocation<T>> {
    ValueSpec::Variant(id).on_game(g, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{scaled_dirac, Coalition};

    fn summary(singles: &[f64], unions: Vec<Vec<usize>>, uw: &[f64], total: f64) -> GameSummary<f64> {
        let p = Partition::new(singles.len(), unions).unwrap();
        GameSummary::new(singles.to_vec(), p, uw.to_vec(), total).unwrap()
    }

    #[test]
    fn parse_and_display() {
        for kind in ValueKind::ALL {
            let spec: ValueSpec = kind.name().parse().unwrap();
            assert_eq!(spec, ValueSpec::Named(kind));
            assert_eq!(spec.to_string(), kind.name());
        }
        let v: ValueSpec = "t2.3".parse().unwrap();
        assert_eq!(v.to_string(), "T2.3");
        assert!("T5.1".parse::<ValueSpec>().is_err());
        assert!("T1.6".parse::<ValueSpec>().is_err());
        assert!("shapley".parse::<ValueSpec>().is_err());
        assert_eq!(VariantId::all().count(), 20);
    }

    #[test]
    fn catalog_dedups_to_fifteen_formulas() {
        let mut formulas: Vec<Formula> = VariantId::all().map(VariantId::formula).collect();
        formulas.sort_by_key(|f| format!("{f:?}"));
        formulas.dedup();
        assert_eq!(formulas.len(), 15);
        // cross-value entries coincide with named values
        assert_eq!("T2.5".parse::<VariantId>().unwrap().formula(), ValueKind::Esd2u.formula());
        assert_eq!("T1.2".parse::<VariantId>().unwrap().formula(), ValueKind::Esd1u.formula());
        assert_eq!("T4.2".parse::<VariantId>().unwrap().formula(), ValueKind::Esd.formula());
    }

    #[test]
    fn zero_total_gives_zero_shares() {
        let s = summary(&[0.0; 4], vec![vec![0, 1], vec![2, 3]], &[0.0, 0.0], 0.0);
        for kind in ValueKind::ALL {
            assert!(kind.compute(&s).shares().iter().all(|x| *x == 0.0));
        }
    }

    #[test]
    fn esd2_hand_example() {
        // v(0)=1, v(1)=3, v({0,1})=6, v(2)=2, v(N)=12
        let s = summary(&[1.0, 3.0, 2.0], vec![vec![0, 1], vec![2]], &[6.0, 2.0], 12.0);
        assert_eq!(esd2_unions(&s).shares(), &[3.0, 5.0, 4.0]);
    }

    #[test]
    fn additive_game_gets_standalone_worths_under_esd() {
        let s = summary(&[1.0, 2.0, 4.0], vec![vec![0, 1, 2]], &[7.0], 7.0);
        assert_eq!(equal_surplus_division(&s).shares(), &[1.0, 2.0, 4.0]);
    }

    #[test]
    fn min_index_union_sums() {
        let g = scaled_dirac(4, Coalition::grand(4), 12.0).unwrap();
        let p = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let a = appendix_value("T1.4".parse().unwrap(), &g, &p).unwrap();
        assert_eq!(a.shares(), &[6.0, 0.0, 6.0, 0.0]);
        assert_eq!(a.union_totals(&p), vec![6.0, 6.0]);
        let zero = ExplicitGame::<f64>::zero(4).unwrap();
        let z = appendix_value("T1.4".parse().unwrap(), &zero, &p).unwrap();
        assert!(z.shares().iter().all(|x| *x == 0.0));
    }

    #[test]
    fn variant_domain_errors_are_explicit() {
        let g = ExplicitGame::<f64>::zero(3).unwrap();
        let p = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        for id in ["T1.4", "T2.3", "T3.3", "T4.3", "T1.5", "T4.4"] {
            let err = appendix_value(id.parse().unwrap(), &g, &p).unwrap_err();
            assert!(matches!(err, Error::VariantDomain { .. }), "{id}");
        }
    }
}
