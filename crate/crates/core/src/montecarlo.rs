//! Seeded simulation of simultaneous coin tosses.
//!
//! Each coin is sampled by comparing a uniform 64-bit draw against the integer
//! threshold `floor(2^64 * x / (1 + x))`, computed exactly from the rational
//! odds, so no floating point enters the sampler.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coin::{CoinSystem, CoinType, Direction};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimConfig {
    pub trials: u64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmpiricalOutcome {
    pub wins_first: u64,
    pub wins_second: u64,
    pub draws: u64,
}

impl EmpiricalOutcome {
    pub fn trials(&self) -> u64 {
        self.wins_first + self.wins_second + self.draws
    }

    /// Majority direction of the observed wins.
    pub fn direction(&self) -> Direction {
        match self.wins_first.cmp(&self.wins_second) {
            std::cmp::Ordering::Greater => Direction::First,
            std::cmp::Ordering::Less => Direction::Second,
            std::cmp::Ordering::Equal => Direction::Tie,
        }
    }
}

struct Sampler {
    // P(high face) = threshold / 2^64
    threshold: u128,
}

impl Sampler {
    fn new(coin: &CoinType) -> Self {
        let x = coin.x();
        let (p, q) = (x.numer(), x.denom());
        let threshold: BigInt = (p << 64u32) / (p + q);
        Sampler {
            threshold: threshold.to_u128().expect("threshold is below 2^64"),
        }
    }

    fn shows_high(&self, rng: &mut impl RngCore) -> bool {
        u128::from(rng.next_u64()) < self.threshold
    }
}

/// Simulates `cfg.trials` simultaneous tosses of two coins.
pub fn simulate_pair(
    first: &CoinType,
    second: &CoinType,
    cfg: &SimConfig,
) -> Result<EmpiricalOutcome> {
    if cfg.trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let s1 = Sampler::new(first);
    let s2 = Sampler::new(second);
    let face = |coin: &CoinType, high: bool| {
        if high {
            coin.b().clone()
        } else {
            coin.a().clone()
        }
    };
    // outcome[first shows high][second shows high]
    let outcome =
        [false, true].map(|h1| [false, true].map(|h2| face(first, h1).cmp(&face(second, h2))));
    let mut out = EmpiricalOutcome::default();
    for _ in 0..cfg.trials {
        let h1 = s1.shows_high(&mut rng);
        let h2 = s2.shows_high(&mut rng);
        match outcome[usize::from(h1)][usize::from(h2)] {
            std::cmp::Ordering::Greater => out.wins_first += 1,
            std::cmp::Ordering::Less => out.wins_second += 1,
            std::cmp::Ordering::Equal => out.draws += 1,
        }
    }
    Ok(out)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for the pair `(i, j)`, 1-based: `splitmix64` chained over the base
/// seed, then `i`, then `j`.
pub fn pair_seed(seed: u64, i: usize, j: usize) -> u64 {
    let h = splitmix64(seed);
    let h = splitmix64(h ^ i as u64);
    splitmix64(h ^ (j as u64).rotate_left(32))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSimulation {
    pub first: usize,
    pub second: usize,
    pub outcome: EmpiricalOutcome,
}

/// Per-pair results for every `i < j`, in lexicographic pair order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimulationMatrix {
    pub n: usize,
    pub pairs: Vec<PairSimulation>,
}

impl SimulationMatrix {
    /// Outcome for `i < j` (1-based), coin `i` first.
    pub fn get(&self, i: usize, j: usize) -> Option<&EmpiricalOutcome> {
        self.pairs
            .iter()
            .find(|p| p.first == i && p.second == j)
            .map(|p| &p.outcome)
    }
}

/// Simulates every unordered pair independently, pair `(i, j)` seeded with
/// [`pair_seed`]. Pairs run on the rayon pool.
pub fn simulate_system(system: &CoinSystem, cfg: &SimConfig) -> Result<SimulationMatrix> {
    if cfg.trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let n = system.len();
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let pairs = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let pair_cfg = SimConfig {
                trials: cfg.trials,
                seed: pair_seed(cfg.seed, i, j),
            };
            simulate_pair(system.coin(i), system.coin(j), &pair_cfg).map(|outcome| PairSimulation {
                first: i,
                second: j,
                outcome,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimulationMatrix { n, pairs })
}
