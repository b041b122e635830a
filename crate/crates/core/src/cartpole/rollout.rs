use rand::Rng;
use serde::{Deserialize, Serialize};

use super::limit::random_initial;
use super::{step, substream, Action, CartPoleParams};
use crate::measures::{histogram, shannon_entropy, ProbDist};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RolloutConfig {
    pub seed: u64,
    pub sample_count: u64,
    pub bin_count: usize,
    pub max_steps: u64,
}

impl Default for RolloutConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            sample_count: 20_000,
            bin_count: 256,
            max_steps: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RolloutEntropy {
    /// Sum over features of the Shannon entropy (bits) of each feature's
    /// min-max normalized histogram.
    pub feature_entropy_sum: f64,
    pub per_feature: Vec<f64>,
    /// Shannon entropy (bits) of the empirical action distribution.
    pub action_entropy: f64,
}

/// Collects `(features, action)` pairs from uniformly random play,
/// restarting on failure or after `max_steps`, and measures their entropy.
pub fn rollout_entropy(params: &CartPoleParams, cfg: &RolloutConfig) -> Result<RolloutEntropy> {
    params.validate()?;
    if cfg.sample_count == 0 || cfg.bin_count == 0 || cfg.max_steps == 0 {
        return Err(Error::InvalidParameter(
            "sample count, bin count and max steps must be >= 1".into(),
        ));
    }
    let n_actions = params.variant.action_count();
    let mut rng = substream(cfg.seed, 0);
    let mut state = random_initial(params.variant, &mut rng);
    let mut episode_steps = 0;
    let mut features: Vec<Vec<f64>> = Vec::new();
    let mut action_counts = vec![0u64; n_actions];

    for _ in 0..cfg.sample_count {
        let action = Action(rng.gen_range(0..n_actions));
        let obs = state.features();
        if features.is_empty() {
            features = vec![Vec::with_capacity(cfg.sample_count as usize); obs.len()];
        }
        for (column, v) in features.iter_mut().zip(obs) {
            column.push(v);
        }
        action_counts[action.0] += 1;

        state = step(state, action, params)?;
        episode_steps += 1;
        if state.failed(params) || episode_steps >= cfg.max_steps {
            state = random_initial(params.variant, &mut rng);
            episode_steps = 0;
        }
    }

    let per_feature = features
        .iter()
        .map(|column| feature_entropy(column, cfg.bin_count))
        .collect::<Result<Vec<_>>>()?;
    let action_entropy = shannon_entropy(&ProbDist::from_counts(&action_counts)?);
    Ok(RolloutEntropy {
        feature_entropy_sum: per_feature.iter().sum(),
        per_feature,
        action_entropy,
    })
}

fn feature_entropy(column: &[f64], bins: usize) -> Result<f64> {
    let (lo, hi) = column
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(*v), hi.max(*v))
        });
    if hi <= lo {
        // constant feature
        return Ok(0.0);
    }
    let normalized: Vec<f64> = column.iter().map(|v| (v - lo) / (hi - lo)).collect();
    let h = histogram(&normalized, bins, (0.0, 1.0))?;
    Ok(shannon_entropy(&h.to_dist()?))
}
