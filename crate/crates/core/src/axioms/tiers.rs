//! Exhaustive families of small integer games.
//!
//! A tier is an indexed, lazily materialized set of instances: every game
//! of the family combined with every partition of its players. Additivity
//! checks pair each game with a fixed list of probe games.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::generate::{game_with, Structure, WorthDist};
use super::Instance;
use crate::game::{Coalition, ExplicitGame, Partition};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
struct GridBlock {
    partition: Partition,
    /// Coalitions whose worths range over the grid; the rest are 0.
    free: Vec<Coalition>,
    offset: usize,
    count: usize,
}

#[derive(Clone, Debug)]
enum Source {
    Grid {
        values: Vec<i64>,
        blocks: Vec<GridBlock>,
    },
    List {
        games: Vec<Vec<i64>>,
        partitions: Vec<Partition>,
    },
}

#[derive(Clone, Debug)]
pub struct Tier {
    name: String,
    n: usize,
    source: Source,
    probes: Vec<Vec<i64>>,
}

const PROBE_SEED: u64 = 0x005e_ed0f_9a3e;
const RANDOM_PROBES: usize = 6;

fn pow(base: usize, exp: usize) -> usize {
    base.checked_pow(exp as u32).expect("tier size overflow")
}

impl Tier {
    fn grid(name: String, n: usize, lo: i64, hi: i64, free: impl Fn(&Partition) -> Vec<Coalition>) -> Self {
        let values: Vec<i64> = (lo..=hi).collect();
        let mut offset = 0;
        let blocks = Partition::enumerate(n)
            .into_iter()
            .map(|partition| {
                let free = free(&partition);
                let count = pow(values.len(), free.len());
                let block = GridBlock {
                    partition,
                    free,
                    offset,
                    count,
                };
                offset += count;
                block
            })
            .collect();
        Tier {
            name,
            n,
            source: Source::Grid { values, blocks },
            probes: probes(n, lo, hi),
        }
    }

    /// Every game on `n` players with all worths in `lo..=hi`.
    pub fn full(n: usize, lo: i64, hi: i64) -> Self {
        let all: Vec<Coalition> = Coalition::grand(n).subsets().skip(1).collect();
        Tier::grid(format!("full n={n} worths {lo}..={hi}"), n, lo, hi, |_| all.clone())
    }

    /// Games whose only nonzero worths sit on singletons, unions and the
    /// grand coalition: the coalitions the union values read.
    pub fn support(n: usize, lo: i64, hi: i64) -> Self {
        Tier::grid(format!("support n={n} worths {lo}..={hi}"), n, lo, hi, |p| {
            let mut free: Vec<Coalition> = (0..n).map(Coalition::singleton).collect();
            free.extend((0..p.m()).map(|k| p.mask(k)));
            free.push(Coalition::grand(n));
            free.sort();
            free.dedup();
            free
        })
    }

    /// Games with at most `max_nonzero` nonzero worths, each in `lo..=hi`.
    pub fn sparse(n: usize, lo: i64, hi: i64, max_nonzero: usize) -> Self {
        let coalitions: Vec<Coalition> = Coalition::grand(n).subsets().skip(1).collect();
        let nonzero: Vec<i64> = (lo..=hi).filter(|&x| x != 0).collect();
        let mut games = vec![vec![0i64; 1 << n]];
        let mut frontier: Vec<(usize, Vec<i64>)> = vec![(0, vec![0i64; 1 << n])];
        for _ in 0..max_nonzero {
            let mut next = Vec::new();
            for (start, worths) in &frontier {
                for (pos, s) in coalitions.iter().enumerate().skip(*start) {
                    for &x in &nonzero {
                        let mut w = worths.clone();
                        w[s.index()] = x;
                        games.push(w.clone());
                        next.push((pos + 1, w));
                    }
                }
            }
            frontier = next;
        }
        Tier {
            name: format!("sparse n={n} worths {lo}..={hi} at most {max_nonzero} nonzero"),
            n,
            source: Source::List {
                games,
                partitions: Partition::enumerate(n),
            },
            probes: probes(n, lo, hi),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn base_len(&self) -> usize {
        match &self.source {
            Source::Grid { blocks, .. } => blocks.last().map_or(0, |b| b.offset + b.count),
            Source::List { games, partitions } => games.len() * partitions.len(),
        }
    }

    /// Number of instances; pairwise tiers multiply by the probe count.
    pub fn len(&self, pairwise: bool) -> usize {
        if pairwise {
            self.base_len() * self.probes.len()
        } else {
            self.base_len()
        }
    }

    fn base_game(&self, idx: usize) -> (Vec<i64>, &Partition) {
        match &self.source {
            Source::Grid { values, blocks } => {
                let b = blocks.partition_point(|b| b.offset + b.count <= idx);
                let block = &blocks[b];
                let mut local = idx - block.offset;
                let mut worths = vec![0i64; 1 << self.n];
                for s in &block.free {
                    worths[s.index()] = values[local % values.len()];
                    local /= values.len();
                }
                (worths, &block.partition)
            }
            Source::List { games, partitions } => {
                let (g, p) = (idx / partitions.len(), idx % partitions.len());
                (games[g].clone(), &partitions[p])
            }
        }
    }

    pub fn instance<T: Scalar>(&self, idx: usize, pairwise: bool) -> Instance<T> {
        let to_game = |w: &[i64]| {
            ExplicitGame::new(self.n, w.iter().map(|&x| T::from_int(x)).collect())
                .expect("tier games are well formed")
        };
        if pairwise {
            let (base, probe) = (idx / self.probes.len(), idx % self.probes.len());
            let (worths, p) = self.base_game(base);
            Instance::pair(to_game(&worths), to_game(&self.probes[probe]), p.clone())
        } else {
            let (worths, p) = self.base_game(idx);
            Instance::new(to_game(&worths), p.clone())
        }
    }
}

/// Basis games `e_T^1` for every `T`, plus a few seeded generic games.
fn probes(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Coalition::grand(n)
        .subsets()
        .skip(1)
        .map(|t| {
            let mut w = vec![0i64; 1 << n];
            w[t.index()] = 1;
            w
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED ^ n as u64);
    let dist = WorthDist::Integers { lo, hi };
    for _ in 0..RANDOM_PROBES {
        let g: ExplicitGame<f64> = game_with(n, &dist, Structure::Generic, &mut rng);
        out.push(g.worths().iter().map(|&x| x as i64).collect());
    }
    out
}

/// Tiers run before random trials when verifying that an axiom holds.
pub fn verification_tiers() -> Vec<Tier> {
    vec![Tier::full(2, -1, 1), Tier::full(3, -1, 1)]
}

/// Tiers scanned in order when searching for a violation, smallest and
/// most readable witnesses first.
pub fn search_tiers() -> Vec<Tier> {
    vec![
        Tier::full(3, -1, 1),
        Tier::support(4, -1, 1),
        Tier::sparse(4, -2, 2, 2),
        Tier::full(3, -2, 2),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_tier_enumerates_every_game_once() {
        let t = Tier::full(2, -1, 1);
        // 3^3 games times 2 partitions
        assert_eq!(t.len(false), 54);
        let mut seen: Vec<(Vec<f64>, Partition)> = (0..t.len(false))
            .map(|i| {
                let inst = t.instance::<f64>(i, false);
                (inst.game.worths().to_vec(), inst.partition)
            })
            .collect();
        seen.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
        seen.dedup();
        assert_eq!(seen.len(), 54);
    }

    #[test]
    fn tier_sizes() {
        assert_eq!(Tier::full(3, -1, 1).len(false), 2187 * 5);
        // 4 singletons + grand are always free; unions add up to 2 more
        let support = Tier::support(4, -1, 1);
        assert!(support.len(false) > 15 * 243);
        let sparse = Tier::sparse(4, -2, 2, 2);
        assert_eq!(sparse.len(false), (1 + 15 * 4 + 105 * 16) * 15);
        let probes = Tier::full(3, -1, 1).probes.len();
        assert_eq!(probes, 7 + RANDOM_PROBES);
        assert_eq!(Tier::full(3, -1, 1).len(true), 2187 * 5 * probes);
    }

    #[test]
    fn support_tier_leaves_other_coalitions_zero() {
        let t = Tier::support(4, -1, 1);
        for idx in (0..t.len(false)).step_by(97) {
            let inst = t.instance::<f64>(idx, false);
            for (s, w) in inst.game.iter() {
                let read = s.len() == 1
                    || s == inst.game.grand()
                    || (0..inst.partition.m()).any(|k| inst.partition.mask(k) == s);
                if !read {
                    assert_eq!(*w, 0.0);
                }
            }
        }
    }

    #[test]
    fn pairwise_instances_share_partition() {
        let t = Tier::full(2, -1, 1);
        let inst = t.instance::<f64>(t.len(true) - 1, true);
        assert!(inst.other.is_some());
        assert_eq!(inst.partition.n(), 2);
    }
}
