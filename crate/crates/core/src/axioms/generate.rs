//! Seeded random games and partitions, with optional planted structure so
//! that axiom hypotheses (nullifying players, symmetric unions, ...) are
//! realized often enough to test.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AxiomId, Instance};
use crate::error::{Error, Result};
use crate::game::{zero_normalize, Coalition, ExplicitGame, Partition};
use crate::scalar::{self, Scalar};

/// Largest player count the generators produce.
pub const MAX_GENERATED_PLAYERS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WorthDist {
    /// Uniform integers in `lo..=hi`.
    Integers { lo: i64, hi: i64 },
    /// Uniform reals in `[lo, hi)`. Exact scalar types get the draw rounded
    /// to a multiple of 1/64 so that rational arithmetic stays small.
    Uniform { lo: f64, hi: f64 },
}

impl WorthDist {
    fn validate(&self) -> Result<()> {
        let ok = match *self {
            WorthDist::Integers { lo, hi } => lo <= hi,
            WorthDist::Uniform { lo, hi } => lo < hi && lo.is_finite() && hi.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!("empty worth range {self:?}")))
        }
    }

    pub fn sample<T: Scalar, R: Rng + ?Sized>(&self, rng: &mut R) -> T {
        match *self {
            WorthDist::Integers { lo, hi } => T::from_int(rng.gen_range(lo..=hi)),
            WorthDist::Uniform { lo, hi } => {
                let x = rng.gen_range(lo..hi);
                if T::EXACT {
                    T::from_int((x * 64.0).round() as i64) / T::from_int(64)
                } else {
                    T::from_f64(x).expect("finite draw")
                }
            }
        }
    }

    fn sample_nonzero<T: Scalar, R: Rng + ?Sized>(&self, rng: &mut R) -> T {
        for _ in 0..16 {
            let x: T = self.sample(rng);
            if !x.is_zero() {
                return x;
            }
        }
        T::one()
    }
}

/// Base shape of a generated game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    /// Independent worths on every coalition.
    Generic,
    /// Generic, then zero-normalized: all `v(i) = 0`.
    ZeroSingleton,
    /// `v(S) = Σ_{i∈S} v(i)`: every player dummifying.
    Additive,
    /// `e_T^α` for a random `T ⊊ N` (or `T = N` when `n = 1`): everyone
    /// outside `T` is nullifying.
    Dirac,
}

impl Structure {
    pub const ALL: [Structure; 4] = [
        Structure::Generic,
        Structure::ZeroSingleton,
        Structure::Additive,
        Structure::Dirac,
    ];
}

/// Structure planted on top of a base game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Plant {
    /// A random player becomes nullifying.
    Nullifying,
    /// A random player becomes dummifying.
    Dummifying,
    /// Two members of one union become indistinguishable.
    SymmetricPair,
    /// Two unions become indistinguishable in the quotient game. Worths are
    /// copied from the smaller union's side to the larger one's, so a
    /// singleton worth changes only when both unions are singletons.
    SymmetricUnions,
    /// A random union becomes dummifying, with one member nullifying (or
    /// dummifying) inside the union's subgame.
    DummifyingUnion { nullifying_member: bool },
    /// The quotient game becomes additive.
    AllUnionsDummifying,
}

impl Plant {
    pub const ALL: [Plant; 7] = [
        Plant::Nullifying,
        Plant::Dummifying,
        Plant::SymmetricPair,
        Plant::SymmetricUnions,
        Plant::DummifyingUnion {
            nullifying_member: true,
        },
        Plant::DummifyingUnion {
            nullifying_member: false,
        },
        Plant::AllUnionsDummifying,
    ];

    /// The plant that realizes `axiom`'s hypothesis, if it has one.
    pub fn for_axiom(axiom: AxiomId) -> Option<Plant> {
        match axiom {
            AxiomId::Npp => Some(Plant::Nullifying),
            AxiomId::Dpp => Some(Plant::Dummifying),
            AxiomId::Swu => Some(Plant::SymmetricPair),
            AxiomId::Sau | AxiomId::Wsau => Some(Plant::SymmetricUnions),
            AxiomId::Dupp => Some(Plant::DummifyingUnion {
                nullifying_member: false,
            }),
            AxiomId::Dunpp => Some(Plant::DummifyingUnion {
                nullifying_member: true,
            }),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenConfig {
    pub min_players: usize,
    pub max_players: usize,
    pub worths: WorthDist,
    /// Smallest union size the partition generator may produce.
    pub min_union_size: usize,
    /// Plant the checked axiom's hypothesis in most trials.
    pub planted: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            min_players: 2,
            max_players: 6,
            worths: WorthDist::Integers { lo: -5, hi: 5 },
            min_union_size: 1,
            planted: true,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        self.worths.validate()?;
        if self.min_players == 0
            || self.min_players > self.max_players
            || self.max_players > MAX_GENERATED_PLAYERS
        {
            return Err(Error::Config(format!(
                "player range {}..={} must lie within 1..={MAX_GENERATED_PLAYERS}",
                self.min_players, self.max_players
            )));
        }
        if self.min_union_size == 0 || self.min_union_size > self.min_players {
            return Err(Error::Config(format!(
                "minimum union size {} infeasible for games with {} players",
                self.min_union_size, self.min_players
            )));
        }
        Ok(())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GENERATED_PLAYERS {
        return Err(Error::Config(format!(
            "generated games need 1..={MAX_GENERATED_PLAYERS} players, got {n}"
        )));
    }
    Ok(())
}

pub(crate) fn game_with<T: Scalar, R: Rng + ?Sized>(
    n: usize,
    worths: &WorthDist,
    structure: Structure,
    rng: &mut R,
) -> ExplicitGame<T> {
    let build = |f: &mut dyn FnMut(Coalition) -> T| {
        ExplicitGame::from_fn(n, f).expect("player count checked by caller")
    };
    match structure {
        Structure::Generic => build(&mut |_| worths.sample(rng)),
        Structure::ZeroSingleton => zero_normalize(&build(&mut |_| worths.sample(rng))),
        Structure::Additive => {
            let singles: Vec<T> = (0..n).map(|_| worths.sample(rng)).collect();
            build(&mut |s| scalar::sum(s.members().map(|i| &singles[i])))
        }
        Structure::Dirac => {
            let grand = Coalition::grand(n).bits();
            let support = if n == 1 {
                grand
            } else {
                rng.gen_range(1..grand)
            };
            let alpha: T = worths.sample_nonzero(rng);
            build(&mut |s| {
                if s.bits() == support {
                    alpha.clone()
                } else {
                    T::zero()
                }
            })
        }
    }
}

/// A reproducible random game.
pub fn random_game<T: Scalar>(
    n: usize,
    worths: WorthDist,
    structure: Structure,
    seed: u64,
) -> Result<ExplicitGame<T>> {
    check_n(n)?;
    worths.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(game_with(n, &worths, structure, &mut rng))
}

pub(crate) fn partition_with<R: Rng + ?Sized>(
    n: usize,
    min_union_size: usize,
    rng: &mut R,
) -> Result<Partition> {
    if min_union_size == 0 || min_union_size > n {
        return Err(Error::Config(format!(
            "cannot split {n} players into unions of at least {min_union_size}"
        )));
    }
    let m = rng.gen_range(1..=n / min_union_size);
    let mut sizes = vec![min_union_size; m];
    for _ in 0..n - m * min_union_size {
        let k = rng.gen_range(0..m);
        sizes[k] += 1;
    }
    let mut players: Vec<usize> = (0..n).collect();
    players.shuffle(rng);
    let mut unions = Vec::with_capacity(m);
    let mut rest = players.as_slice();
    for size in sizes {
        let (head, tail) = rest.split_at(size);
        unions.push(head.to_vec());
        rest = tail;
    }
    Partition::new(n, unions)
}

/// A reproducible random partition whose unions all have at least
/// `min_union_size` members.
pub fn random_partition(n: usize, seed: u64, min_union_size: usize) -> Result<Partition> {
    check_n(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    partition_with(n, min_union_size, &mut rng)
}

/// `∪_{r∈R} P_r` for a bitset `R` over union indices.
fn expand(masks: &[Coalition], r: u32) -> Coalition {
    Coalition::from_bits(r)
        .members()
        .fold(Coalition::EMPTY, |acc, k| acc.union(masks[k]))
}

/// Modifies `g` so that it exhibits `plant`. Returns false (leaving `g`
/// untouched) when the partition cannot host it.
pub fn plant<T: Scalar, R: Rng + ?Sized>(
    g: &mut ExplicitGame<T>,
    p: &Partition,
    plant: Plant,
    rng: &mut R,
) -> bool {
    let n = g.n();
    let grand = g.grand();
    let masks: Vec<Coalition> = (0..p.m()).map(|k| p.mask(k)).collect();
    let additive = |g: &ExplicitGame<T>, s: Coalition| {
        scalar::sum(s.members().map(|j| g.singleton(j)))
    };
    match plant {
        Plant::Nullifying => {
            let i = rng.gen_range(0..n);
            for s in grand.without(i).subsets() {
                g.set(s.with(i), T::zero());
            }
        }
        Plant::Dummifying => {
            let i = rng.gen_range(0..n);
            for s in grand.without(i).subsets() {
                let w = additive(g, s.with(i));
                g.set(s.with(i), w);
            }
        }
        Plant::SymmetricPair => {
            let candidates: Vec<usize> = (0..p.m()).filter(|&k| p.union_size(k) >= 2).collect();
            let Some(&k) = candidates.choose(rng) else {
                return false;
            };
            let mut members = p.union(k).to_vec();
            members.shuffle(rng);
            let (i, j) = (members[0], members[1]);
            for s in grand.without(i).without(j).subsets() {
                let w = g.worth(s.with(i)).clone();
                g.set(s.with(j), w);
            }
        }
        Plant::SymmetricUnions => {
            if p.m() < 2 {
                return false;
            }
            let mut ks: Vec<usize> = (0..p.m()).collect();
            ks.shuffle(rng);
            let (mut k, mut l) = (ks[0], ks[1]);
            if p.union_size(k) > p.union_size(l) {
                std::mem::swap(&mut k, &mut l);
            }
            let rest = Coalition::grand(p.m()).without(k).without(l);
            for r in rest.subsets() {
                let base = expand(&masks, r.bits());
                let w = g.worth(base.union(masks[k])).clone();
                g.set(base.union(masks[l]), w);
            }
        }
        Plant::DummifyingUnion { nullifying_member } => {
            let k = rng.gen_range(0..p.m());
            let members = p.union(k);
            let i = members[rng.gen_range(0..members.len())];
            for s in masks[k].without(i).subsets() {
                let w = if nullifying_member {
                    T::zero()
                } else {
                    additive(g, s.with(i))
                };
                g.set(s.with(i), w);
            }
            let own = g.worth(masks[k]).clone();
            for r in Coalition::grand(p.m()).without(k).subsets().skip(1) {
                let others = scalar::sum(r.members().map(|l| g.worth(masks[l])));
                g.set(expand(&masks, r.bits()).union(masks[k]), others + own.clone());
            }
        }
        Plant::AllUnionsDummifying => {
            for r in Coalition::grand(p.m()).subsets() {
                if r.len() < 2 {
                    continue;
                }
                let w = scalar::sum(r.members().map(|l| g.worth(masks[l])));
                g.set(expand(&masks, r.bits()), w);
            }
        }
    }
    true
}

/// One random trial configuration for `axiom`.
pub fn random_instance<T: Scalar, R: Rng + ?Sized>(
    axiom: AxiomId,
    cfg: &GenConfig,
    rng: &mut R,
) -> Result<Instance<T>> {
    cfg.validate()?;
    let n = rng.gen_range(cfg.min_players..=cfg.max_players);
    let partition = partition_with(n, cfg.min_union_size, rng)?;
    let structure = *Structure::ALL.choose(rng).expect("nonempty");
    let mut game: ExplicitGame<T> = game_with(n, &cfg.worths, structure, rng);
    if cfg.planted {
        // an occasional extra plant diversifies the configurations
        if rng.gen_bool(0.25) {
            let extra = *Plant::ALL.choose(rng).expect("nonempty");
            plant(&mut game, &partition, extra, rng);
        }
        let main = Plant::for_axiom(axiom).or_else(|| Plant::ALL.choose(rng).copied());
        if let Some(main) = main {
            if rng.gen_bool(0.85) {
                if axiom == AxiomId::Wsau {
                    game = zero_normalize(&game);
                }
                plant(&mut game, &partition, main, rng);
            }
        }
    }
    if axiom == AxiomId::Wsau {
        zero_singletons(&mut game);
    }
    let other = if axiom.is_pairwise() {
        let structure = *Structure::ALL.choose(rng).expect("nonempty");
        Some(game_with(n, &cfg.worths, structure, rng))
    } else {
        None
    };
    Ok(Instance {
        game,
        other,
        partition,
    })
}

fn zero_singletons<T: Scalar>(g: &mut ExplicitGame<T>) {
    for i in 0..g.n() {
        g.set(Coalition::singleton(i), T::zero());
    }
}
