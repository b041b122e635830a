//! Deterministic cart-pole simulator (2D, high-gravity 2D-G and a
//! two-axis 3D approximation) with the empirical measures built on it:
//! constant-action limit, band-survival sparsity and random-rollout entropy.

mod dynamics;
mod limit;
mod measures;
mod rollout;
mod sparsity;

pub use dynamics::{planar_step, step, Action, CartPoleParams, CartState, PlanarState, Variant};
pub use limit::constant_action_limit;
pub use measures::{
    descriptor_name, entropy_measures, limit_measure, simulate, sparsity_measure,
    DEFAULT_LIMIT_TRIALS, DEFAULT_SPARSITY_SAMPLES, SPARSITY_CONVENTION,
};
pub use rollout::{rollout_entropy, RolloutConfig, RolloutEntropy};
pub use sparsity::{analytic_sparsity, Axes, SPARSITY_EPISODE_LENGTH};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent random stream `index` under `seed`. Trial `i` always draws
/// from the same stream, whatever thread runs it.
pub(crate) fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
