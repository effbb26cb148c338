//! Batteries of checks: characterizations and their independence catalogs.

use serde::{Deserialize, Serialize};

use super::runner::{check_axiom, CheckConfig, CheckReport, Outcome};
use super::AxiomId;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::values::{Theorem, ValueKind, ValueSpec, VariantId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Holds,
    Violated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The check agrees with the expectation.
    Confirmed,
    /// The check contradicts the expectation.
    Contradicted,
    /// Neither: nothing effective ran, or a search came up empty.
    Inconclusive,
}

impl Verdict {
    pub fn judge(expected: Expectation, outcome: Outcome) -> Verdict {
        match (expected, outcome) {
            (Expectation::Holds, Outcome::HoldsOnSample) => Verdict::Confirmed,
            (Expectation::Violated, Outcome::Violated) => Verdict::Confirmed,
            (Expectation::Holds, Outcome::Violated) => Verdict::Contradicted,
            (Expectation::Violated, Outcome::HoldsOnSample) => Verdict::Contradicted,
            (_, Outcome::Inconclusive) => Verdict::Inconclusive,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteEntry<T> {
    pub report: CheckReport<T>,
    pub expected: Expectation,
    pub verdict: Verdict,
}

/// Efficiency plus the four axioms characterizing the theorem's value.
pub fn theorem_axioms(theorem: Theorem) -> [AxiomId; 5] {
    use AxiomId::*;
    match theorem {
        Theorem::T1 => [Eff, Add, Swu, Sau, Npp],
        Theorem::T2 => [Eff, Add, Swu, Sau, Dunpp],
        Theorem::T3 => [Eff, Add, Swu, Sau, Dupp],
        Theorem::T4 => [Eff, Add, Swu, Wsau, Dpp],
    }
}

/// The one axiom of its theorem that a catalog variant drops.
pub fn excluded_axiom(id: VariantId) -> AxiomId {
    use AxiomId::*;
    match (id.theorem(), id.item()) {
        (_, 1) => Eff,
        (Theorem::T1, 2) => Npp,
        (Theorem::T1, 3) => Sau,
        (Theorem::T1, 4) => Swu,
        (Theorem::T1, _) => Add,
        (Theorem::T4, 2) => Wsau,
        (_, 2) => Sau,
        (_, 3) => Swu,
        (_, 4) => Add,
        (Theorem::T2, _) => Dunpp,
        (Theorem::T3, _) => Dupp,
        (Theorem::T4, _) => Dpp,
    }
}

fn run_entry<T: Scalar>(
    value: ValueSpec,
    axiom: AxiomId,
    expected: Expectation,
    budget: usize,
    seed: u64,
) -> Result<SuiteEntry<T>> {
    let cfg = match expected {
        Expectation::Holds => CheckConfig::verify(),
        Expectation::Violated => CheckConfig::search(),
    };
    let report = check_axiom(value, axiom, budget, seed, &cfg)?;
    let verdict = Verdict::judge(expected, report.outcome);
    Ok(SuiteEntry {
        report,
        expected,
        verdict,
    })
}

/// Checks every catalog variant of `theorem` against every axiom of the
/// theorem: the excluded axiom should fail, the rest should hold.
pub fn independence_suite<T: Scalar>(theorem: Theorem, budget: usize, seed: u64) -> Result<Vec<SuiteEntry<T>>> {
    let mut out = Vec::new();
    for id in VariantId::of_theorem(theorem) {
        let excluded = excluded_axiom(id);
        for axiom in theorem_axioms(theorem) {
            let expected = if axiom == excluded {
                Expectation::Violated
            } else {
                Expectation::Holds
            };
            out.push(run_entry(id.into(), axiom, expected, budget, seed)?);
        }
    }
    Ok(out)
}

/// Axioms each union value is expected to satisfy or violate.
pub fn characterization_expectations(kind: ValueKind) -> Vec<(AxiomId, Expectation)> {
    use AxiomId::*;
    use Expectation::{Holds, Violated};
    match kind {
        ValueKind::Edu => vec![
            (Eff, Holds),
            (Add, Holds),
            (Swu, Holds),
            (Sau, Holds),
            (Npp, Holds),
            (Qgp, Holds),
            (Coalitional, Holds),
        ],
        ValueKind::Esd1u => vec![
            (Eff, Holds),
            (Add, Holds),
            (Swu, Holds),
            (Sau, Holds),
            (Dunpp, Holds),
            (Qgp, Holds),
            (Coalitional, Holds),
            (Npp, Violated),
            (Dpp, Violated),
        ],
        ValueKind::Esd2u => vec![
            (Eff, Holds),
            (Add, Holds),
            (Swu, Holds),
            (Sau, Holds),
            (Dupp, Holds),
            (Qgp, Holds),
            (Coalitional, Holds),
            (Dpp, Violated),
            (Dunpp, Violated),
        ],
        ValueKind::Esd3u => vec![
            (Eff, Holds),
            (Add, Holds),
            (Swu, Holds),
            (Wsau, Holds),
            (Dpp, Holds),
            (Coalitional, Holds),
            (Sau, Violated),
            (Qgp, Violated),
        ],
        ValueKind::Ed | ValueKind::Esd => vec![(Eff, Holds), (Add, Holds)],
    }
}

/// Checks the four union values against their expected axiom profiles.
pub fn characterization_suite<T: Scalar>(budget: usize, seed: u64) -> Result<Vec<SuiteEntry<T>>> {
    let mut out = Vec::new();
    for kind in ValueKind::UNION_VALUES {
        for (axiom, expected) in characterization_expectations(kind) {
            out.push(run_entry(kind.into(), axiom, expected, budget, seed)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn excluded_axiom_belongs_to_theorem() {
        for id in VariantId::all() {
            assert!(theorem_axioms(id.theorem()).contains(&excluded_axiom(id)), "{id}");
        }
        let t3_5 = VariantId::new(Theorem::T3, 5).unwrap();
        assert_eq!(excluded_axiom(t3_5), AxiomId::Dupp);
        let t4_2 = VariantId::new(Theorem::T4, 2).unwrap();
        assert_eq!(excluded_axiom(t4_2), AxiomId::Wsau);
        let t1: Vec<AxiomId> = VariantId::of_theorem(Theorem::T1).map(excluded_axiom).collect();
        assert_eq!(t1, [AxiomId::Eff, AxiomId::Npp, AxiomId::Sau, AxiomId::Swu, AxiomId::Add]);
    }

    #[test]
    fn verdicts() {
        assert_eq!(Verdict::judge(Expectation::Holds, Outcome::Violated), Verdict::Contradicted);
        assert_eq!(Verdict::judge(Expectation::Violated, Outcome::Inconclusive), Verdict::Inconclusive);
    }
}
