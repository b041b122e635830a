use super::{
    analytic_sparsity, constant_action_limit, rollout_entropy, Axes, CartPoleParams,
    RolloutConfig, Variant, SPARSITY_EPISODE_LENGTH,
};
use crate::measures::{Direction, MeasureFamily, MeasureResult, Provenance};
use crate::Result;

pub const DEFAULT_LIMIT_TRIALS: u64 = 10_000;
pub const DEFAULT_SPARSITY_SAMPLES: u64 = 100_000;

pub const SPARSITY_CONVENTION: &str = "fraction of uniformly random action sequences whose \
     +-1 walk stays within the constant-action limit for 200 steps; fractional limits by \
     randomized rounding; 3D walks both axes every step";

/// Bundled descriptor describing `variant`.
pub fn descriptor_name(variant: Variant) -> &'static str {
    match variant {
        Variant::TwoD => "cartpole2d",
        Variant::TwoDG => "cartpole2d-g",
        Variant::ThreeD => "cartpole3d",
    }
}

fn axes(variant: Variant) -> Axes {
    match variant {
        Variant::ThreeD => Axes::Two,
        _ => Axes::One,
    }
}

pub fn limit_measure(params: &CartPoleParams, trials: u64, seed: u64) -> Result<MeasureResult> {
    let value = constant_action_limit(params, trials, seed)?;
    Ok(MeasureResult::new(
        "constant_action_limit",
        MeasureFamily::Sparsity,
        value,
        "mean steps of one repeated action from a uniform +-0.05 start until failure",
        Provenance::MonteCarlo {
            seed,
            samples: trials,
        },
    )
    .with_direction(Direction::Unordered))
}

/// Band-survival sparsity at a given limit.
pub fn sparsity_measure(
    variant: Variant,
    limit: f64,
    samples: u64,
    seed: u64,
) -> Result<MeasureResult> {
    let value = analytic_sparsity(limit, SPARSITY_EPISODE_LENGTH, samples, seed, axes(variant))?;
    Ok(MeasureResult::new(
        "solution_sparsity",
        MeasureFamily::Sparsity,
        value,
        SPARSITY_CONVENTION,
        Provenance::MonteCarlo { seed, samples },
    )
    .with_direction(Direction::LowerIsMoreComplex))
}

pub fn entropy_measures(params: &CartPoleParams, cfg: &RolloutConfig) -> Result<Vec<MeasureResult>> {
    let e = rollout_entropy(params, cfg)?;
    let prov = Provenance::MonteCarlo {
        seed: cfg.seed,
        samples: cfg.sample_count,
    };
    Ok(vec![
        MeasureResult::new(
            "feature_entropy_sum",
            MeasureFamily::Diversity,
            e.feature_entropy_sum,
            format!(
                "sum of Shannon bits per state feature (x, x_dot, theta, theta_dot on each axis); \
                 min-max normalized, {} bins, \
                 random play restarted on failure or after {} steps",
                cfg.bin_count, cfg.max_steps
            ),
            prov.clone(),
        ),
        MeasureResult::new(
            "action_entropy",
            MeasureFamily::Diversity,
            e.action_entropy,
            "Shannon bits of the empirical action distribution",
            prov,
        ),
    ])
}

/// Limit, sparsity and rollout entropy for one variant.
pub fn simulate(
    variant: Variant,
    seed: u64,
    limit_trials: u64,
    sparsity_samples: u64,
    rollout: &RolloutConfig,
) -> Result<Vec<MeasureResult>> {
    let params = CartPoleParams::standard(variant);
    let limit = limit_measure(&params, limit_trials, seed)?;
    let sparsity = sparsity_measure(variant, limit.value, sparsity_samples, seed)?;
    let mut out = vec![limit, sparsity];
    out.extend(entropy_measures(&params, rollout)?);
    Ok(out)
}
