use rand::{Rng, RngCore};
use rayon::prelude::*;

use super::substream;
use crate::{Error, Result};

/// Episode length of a successful cart-pole run.
pub const SPARSITY_EPISODE_LENGTH: u64 = 200;

/// Dimensionality of the band walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axes {
    /// One `+-1` coordinate per step (2D cart-pole).
    One,
    /// Two coordinates, each taking an independent `+-1` step every tick
    /// (3D cart-pole pushed along both axes).
    Two,
}

impl Axes {
    fn count(self) -> usize {
        match self {
            Axes::One => 1,
            Axes::Two => 2,
        }
    }
}

/// Monte-Carlo fraction of uniformly random action sequences that keep the
/// pole within the constant-action limit for `episode_length` steps.
///
/// Each action moves a running sum one step toward or away from the
/// solution region; a sequence survives while `|S_t| <= band` on every axis.
/// For a fractional `limit` the band is `floor(limit) + 1` with probability
/// `fract(limit)` and `floor(limit)` otherwise, drawn once per sequence, so
/// the estimate interpolates linearly between the neighbouring integer
/// bands.
pub fn analytic_sparsity(
    limit: f64,
    episode_length: u64,
    samples: u64,
    seed: u64,
    axes: Axes,
) -> Result<f64> {
    if !(limit > 0.0) || !limit.is_finite() {
        return Err(Error::InvalidParameter(format!("limit must be > 0, got {limit}")));
    }
    if samples == 0 || episode_length == 0 {
        return Err(Error::InvalidParameter(
            "samples and episode length must be >= 1".into(),
        ));
    }
    if limit >= episode_length as f64 {
        return Ok(1.0);
    }
    let base = limit.floor() as i64;
    let frac = limit - limit.floor();
    let survivors: u64 = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream(seed, i);
            let band = base + i64::from(rng.gen::<f64>() < frac);
            u64::from(survives(&mut rng, band, episode_length, axes))
        })
        .sum();
    Ok(survivors as f64 / samples as f64)
}

fn survives<R: RngCore>(rng: &mut R, band: i64, steps: u64, axes: Axes) -> bool {
    let mut pos = [0i64; 2];
    let mut bits = 0u64;
    let mut left = 0u32;
    for _ in 0..steps {
        for p in pos.iter_mut().take(axes.count()) {
            if left == 0 {
                bits = rng.next_u64();
                left = 64;
            }
            *p += if bits & 1 == 1 { 1 } else { -1 };
            bits >>= 1;
            left -= 1;
            if p.abs() > band {
                return false;
            }
        }
    }
    true
}
