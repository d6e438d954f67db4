//! Seeded generation of random degree sequences.
//!
//! All randomness comes from ChaCha8 seeded through `seed_from_u64`, with
//! per-attempt and per-trial seeds derived by SplitMix64 mixing. Uniform
//! variates are formed from the top 53 bits of each 64-bit output, so a given
//! seed yields the same sequence on every platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sequence::{Degree, DegreeSequence};

/// The generator behind every sampler in this crate.
pub type SeqRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeqRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Mixes a base seed with a path of indices into an independent sub-seed.
pub fn derive_seed(base: u64, path: &[u64]) -> u64 {
    path.iter().fold(splitmix64(base), |h, &p| splitmix64(h ^ splitmix64(p)))
}

/// Uniform on `[0, 1)` with 53 bits of precision.
fn unit_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// A discrete distribution on `{1, …, k}` sampled by inverse CDF over a
/// cumulative weight table.
#[derive(Clone, Debug)]
pub struct InverseCdf {
    cumulative: Vec<f64>,
}

impl InverseCdf {
    /// `weights[i]` is the relative weight of value `i + 1`.
    pub fn from_weights(weights: impl IntoIterator<Item = f64>) -> Result<Self> {
        let mut acc = 0.0;
        let mut cumulative = Vec::new();
        for w in weights {
            if !(w.is_finite() && w >= 0.0) {
                return Err(Error::InvalidParameter(format!("weight {w} is not a finite non-negative number")));
            }
            acc += w;
            cumulative.push(acc);
        }
        if acc <= 0.0 {
            return Err(Error::InvalidParameter("weights have no mass".into()));
        }
        Ok(InverseCdf { cumulative })
    }

    /// `P(k) ∝ k^(-exponent)` on `{1, …, max_value}`.
    pub fn power_law(max_value: usize, exponent: f64) -> Result<Self> {
        if !(exponent.is_finite() && exponent > 1.0) {
            return Err(Error::InvalidParameter(format!("exponent must exceed 1, got {exponent}")));
        }
        if max_value == 0 {
            return Err(Error::InvalidParameter("power law needs a non-empty support".into()));
        }
        Self::from_weights((1..=max_value).map(|k| (k as f64).powf(-exponent)))
    }

    pub fn max_value(&self) -> usize {
        self.cumulative.len()
    }

    /// Probability of value `k`, `1 <= k <= max_value`.
    pub fn probability(&self, k: usize) -> f64 {
        let total = *self.cumulative.last().unwrap();
        let below = if k >= 2 { self.cumulative[k - 2] } else { 0.0 };
        (self.cumulative[k - 1] - below) / total
    }

    pub fn draw(&self, rng: &mut impl RngCore) -> Degree {
        let total = *self.cumulative.last().unwrap();
        let u = unit_f64(rng) * total;
        let idx = self.cumulative.partition_point(|&c| c <= u);
        (idx.min(self.cumulative.len() - 1) + 1) as Degree
    }

    /// `n` i.i.d. draws, sorted nonincreasing.
    pub fn sample_sequence(&self, n: usize, seed: u64) -> DegreeSequence {
        let mut rng = rng_from_seed(seed);
        DegreeSequence::from_degrees((0..n).map(|_| self.draw(&mut rng)).collect())
    }
}

/// Power-law sampler over the degree support `{1, …, n-1}`.
#[derive(Clone, Debug)]
pub struct PowerLawSampler {
    n: usize,
    dist: InverseCdf,
}

impl PowerLawSampler {
    pub fn new(n: usize, exponent: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
        }
        Ok(PowerLawSampler { n, dist: InverseCdf::power_law(n - 1, exponent)? })
    }

    pub fn distribution(&self) -> &InverseCdf {
        &self.dist
    }

    pub fn sample(&self, seed: u64) -> DegreeSequence {
        self.dist.sample_sequence(self.n, seed)
    }

    /// Redraws whole sequences until one has an even sum, is potentially
    /// graphic and is not graphic.
    pub fn sample_nongraphic_even(&self, seed: u64, max_attempts: u32) -> Result<NonGraphicDraw> {
        if max_attempts == 0 {
            return Err(Error::InvalidParameter("max_attempts must be at least 1".into()));
        }
        for attempt in 1..=max_attempts {
            let sub_seed = derive_seed(seed, &[attempt as u64]);
            let sequence = self.sample(sub_seed);
            if sequence.is_potentially_graphic() && !sequence.is_graphic() {
                return Ok(NonGraphicDraw { sequence, attempts: attempt, seed: sub_seed });
            }
        }
        Err(Error::SamplingExhausted { attempts: max_attempts })
    }
}

/// An accepted draw and how many sequences it took to find it.
#[derive(Clone, Debug)]
pub struct NonGraphicDraw {
    pub sequence: DegreeSequence,
    pub attempts: u32,
    /// Seed of the accepted draw; `sample_power_law` with it reproduces `sequence`.
    pub seed: u64,
}

pub fn sample_power_law(n: usize, exponent: f64, seed: u64) -> Result<DegreeSequence> {
    Ok(PowerLawSampler::new(n, exponent)?.sample(seed))
}

pub fn sample_nongraphic_even(n: usize, exponent: f64, seed: u64, max_attempts: u32) -> Result<NonGraphicDraw> {
    PowerLawSampler::new(n, exponent)?.sample_nongraphic_even(seed, max_attempts)
}
