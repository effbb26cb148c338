//! Running an axiom check: exhaustive tiers, then seeded random trials.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::check::{check_instance, TrialOutcome, Violation};
use super::generate::{random_instance, GenConfig};
use super::tiers::{search_tiers, verification_tiers, Tier};
use super::{AxiomId, Instance, Location};
use crate::error::{Error, Result};
use crate::game::{ExplicitGame, Partition};
use crate::scalar::Scalar;
use crate::values::ValueSpec;

const CHUNK: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Gather evidence that the axiom holds.
    Verify,
    /// Look for a violation, smallest games first.
    Search,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckConfig {
    pub gen: GenConfig,
    pub mode: Mode,
    /// Scan the exhaustive tiers before the random trials.
    pub exhaustive: bool,
    /// Random attempts are capped at `budget * max_attempt_factor`, so a
    /// hypothesis that is rarely met cannot loop forever.
    pub max_attempt_factor: usize,
}

impl CheckConfig {
    pub fn verify() -> Self {
        CheckConfig {
            gen: GenConfig::default(),
            mode: Mode::Verify,
            exhaustive: true,
            max_attempt_factor: 20,
        }
    }

    pub fn search() -> Self {
        CheckConfig {
            mode: Mode::Search,
            ..CheckConfig::verify()
        }
    }
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig::verify()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Every effective trial satisfied the axiom.
    HoldsOnSample,
    Violated,
    /// No effective trial ran, or a search found nothing.
    Inconclusive,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::HoldsOnSample => "holds on sample",
            Outcome::Violated => "violated",
            Outcome::Inconclusive => "inconclusive",
        }
    }
}

/// A violating instance together with what was observed on it.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<T> {
    pub value: ValueSpec,
    pub axiom: AxiomId,
    pub instance: Instance<T>,
    pub violation: Violation<T>,
    /// Which tier or random trial produced it.
    pub source: String,
}

/// Serializable form of a [`Witness`]; scalars are kept as strings so exact
/// values survive a round trip.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub value: ValueSpec,
    pub axiom: AxiomId,
    pub n: usize,
    /// Worths indexed by coalition bitmask.
    pub worths: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub other_worths: Option<Vec<String>>,
    pub partition: Vec<Vec<usize>>,
    pub location: Location,
    pub observed: String,
    pub expected: String,
    pub source: String,
}

fn strings<T: Scalar>(g: &ExplicitGame<T>) -> Vec<String> {
    g.worths().iter().map(|w| w.to_string()).collect()
}

fn parse<T: Scalar>(s: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid number `{s}` in witness")))
}

fn parse_game<T: Scalar>(n: usize, worths: &[String]) -> Result<ExplicitGame<T>> {
    ExplicitGame::new(n, worths.iter().map(|w| parse(w)).collect::<Result<_>>()?)
}

impl<T: Scalar> Witness<T> {
    pub fn record(&self) -> WitnessRecord {
        WitnessRecord {
            value: self.value,
            axiom: self.axiom,
            n: self.instance.game.n(),
            worths: strings(&self.instance.game),
            other_worths: self.instance.other.as_ref().map(strings),
            partition: self.instance.partition.unions().to_vec(),
            location: self.violation.location,
            observed: self.violation.observed.to_string(),
            expected: self.violation.expected.to_string(),
            source: self.source.clone(),
        }
    }

    pub fn from_record(rec: &WitnessRecord) -> Result<Self> {
        let game = parse_game(rec.n, &rec.worths)?;
        let other = rec
            .other_worths
            .as_ref()
            .map(|w| parse_game(rec.n, w))
            .transpose()?;
        let partition = Partition::new(rec.n, rec.partition.clone())?;
        Ok(Witness {
            value: rec.value,
            axiom: rec.axiom,
            instance: Instance {
                game,
                other,
                partition,
            },
            violation: Violation {
                location: rec.location,
                observed: parse(&rec.observed)?,
                expected: parse(&rec.expected)?,
            },
            source: rec.source.clone(),
        })
    }

    /// Re-runs the check on the stored instance.
    pub fn replay(&self) -> Result<TrialOutcome<T>> {
        check_instance(self.value, self.axiom, &self.instance)
    }

    pub fn reproduces(&self) -> bool {
        matches!(self.replay(), Ok(TrialOutcome::Violated(_)))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport<T> {
    pub value: ValueSpec,
    pub axiom: AxiomId,
    pub mode: Mode,
    pub outcome: Outcome,
    pub witness: Option<Witness<T>>,
    /// Effective random trials.
    pub trials_run: usize,
    /// Effective instances from the exhaustive tiers.
    pub exhaustive_checked: usize,
    pub vacuous: usize,
    pub out_of_domain: usize,
    pub seed: u64,
    pub budget: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub value: ValueSpec,
    pub axiom: AxiomId,
    pub mode: Mode,
    pub outcome: Outcome,
    pub trials_run: usize,
    pub exhaustive_checked: usize,
    pub vacuous: usize,
    pub out_of_domain: usize,
    pub seed: u64,
    pub budget: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
}

impl<T: Scalar> CheckReport<T> {
    pub fn record(&self) -> ReportRecord {
        ReportRecord {
            value: self.value,
            axiom: self.axiom,
            mode: self.mode,
            outcome: self.outcome,
            trials_run: self.trials_run,
            exhaustive_checked: self.exhaustive_checked,
            vacuous: self.vacuous,
            out_of_domain: self.out_of_domain,
            seed: self.seed,
            budget: self.budget,
            witness: self.witness.as_ref().map(Witness::record),
        }
    }

    /// One line of a JSON lines report stream.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.record()).expect("report records serialize")
    }

    pub fn effective(&self) -> usize {
        self.trials_run + self.exhaustive_checked
    }
}

#[derive(Default)]
struct Tally {
    effective: usize,
    vacuous: usize,
    out_of_domain: usize,
}

impl Tally {
    fn add<T>(&mut self, outcome: &TrialOutcome<T>) {
        match outcome {
            TrialOutcome::Vacuous => self.vacuous += 1,
            TrialOutcome::OutOfDomain => self.out_of_domain += 1,
            _ => self.effective += 1,
        }
    }
}

/// Scans a tier in parallel chunks; the lowest-index violation wins, so the
/// result does not depend on scheduling.
fn scan_tier<T: Scalar>(
    value: ValueSpec,
    axiom: AxiomId,
    tier: &Tier,
    tally: &mut Tally,
) -> Result<Option<Witness<T>>> {
    let pairwise = axiom.is_pairwise();
    let len = tier.len(pairwise);
    let mut start = 0;
    while start < len {
        let end = (start + CHUNK * rayon::current_num_threads().max(1)).min(len);
        let outcomes: Vec<Result<(usize, TrialOutcome<T>)>> = (start..end)
            .into_par_iter()
            .map(|idx| {
                let inst = tier.instance::<T>(idx, pairwise);
                check_instance(value, axiom, &inst).map(|o| (idx, o))
            })
            .collect();
        for item in outcomes {
            let (idx, outcome) = item?;
            tally.add(&outcome);
            if let TrialOutcome::Violated(violation) = outcome {
                return Ok(Some(Witness {
                    value,
                    axiom,
                    instance: tier.instance(idx, pairwise),
                    violation,
                    source: format!("tier {} #{idx}", tier.name()),
                }));
            }
        }
        start = end;
    }
    Ok(None)
}

fn trial_rng(seed: u64, attempt: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt);
    rng
}

/// Reconstructs the instance of random attempt `attempt`.
pub fn trial_instance<T: Scalar>(
    axiom: AxiomId,
    gen: &GenConfig,
    seed: u64,
    attempt: u64,
) -> Result<Instance<T>> {
    random_instance(axiom, gen, &mut trial_rng(seed, attempt))
}

/// Checks `axiom` for `value`.
///
/// `budget` is the number of effective random trials; vacuous and
/// out-of-domain attempts do not count toward it. Each attempt draws from
/// its own stream of a seeded ChaCha generator, so a report is reproducible
/// from `(seed, budget, config)` alone.
pub fn check_axiom<T: Scalar>(
    value: ValueSpec,
    axiom: AxiomId,
    budget: usize,
    seed: u64,
    cfg: &CheckConfig,
) -> Result<CheckReport<T>> {
    if budget == 0 {
        return Err(Error::Config("the trial budget must be positive".into()));
    }
    if cfg.max_attempt_factor == 0 {
        return Err(Error::Config("max_attempt_factor must be positive".into()));
    }
    cfg.gen.validate()?;

    let mut tiers_tally = Tally::default();
    let mut witness = None;
    if cfg.exhaustive {
        let tiers = match cfg.mode {
            Mode::Verify => verification_tiers(),
            Mode::Search => search_tiers(),
        };
        for tier in &tiers {
            witness = scan_tier(value, axiom, tier, &mut tiers_tally)?;
            if witness.is_some() {
                break;
            }
        }
    }

    let mut random_tally = Tally::default();
    if witness.is_none() {
        let max_attempts = budget.saturating_mul(cfg.max_attempt_factor);
        let mut start = 0;
        'outer: while start < max_attempts && random_tally.effective < budget {
            let end = (start + CHUNK).min(max_attempts);
            let outcomes: Vec<Result<TrialOutcome<T>>> = (start..end)
                .into_par_iter()
                .map(|t| {
                    let inst = trial_instance::<T>(axiom, &cfg.gen, seed, t as u64)?;
                    check_instance(value, axiom, &inst)
                })
                .collect();
            for (offset, item) in outcomes.into_iter().enumerate() {
                let outcome = item?;
                random_tally.add(&outcome);
                if let TrialOutcome::Violated(violation) = outcome {
                    let t = (start + offset) as u64;
                    witness = Some(Witness {
                        value,
                        axiom,
                        instance: trial_instance(axiom, &cfg.gen, seed, t)?,
                        violation,
                        source: format!("random trial {t} seed {seed}"),
                    });
                    break 'outer;
                }
                if random_tally.effective == budget {
                    break 'outer;
                }
            }
            start = end;
        }
    }

    let outcome = if witness.is_some() {
        Outcome::Violated
    } else if cfg.mode == Mode::Search || tiers_tally.effective + random_tally.effective == 0 {
        Outcome::Inconclusive
    } else {
        Outcome::HoldsOnSample
    };
    Ok(CheckReport {
        value,
        axiom,
        mode: cfg.mode,
        outcome,
        witness,
        trials_run: random_tally.effective,
        exhaustive_checked: tiers_tally.effective,
        vacuous: tiers_tally.vacuous + random_tally.vacuous,
        out_of_domain: tiers_tally.out_of_domain + random_tally.out_of_domain,
        seed,
        budget,
    })
}
