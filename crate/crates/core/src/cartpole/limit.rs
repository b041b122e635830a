use rand::Rng;
use rayon::prelude::*;

use super::{step, substream, Action, CartPoleParams, CartState, PlanarState, Variant};
use crate::{Error, Result};

const INITIAL_SPREAD: f64 = 0.05;
const STEP_CAP: u64 = 100_000;

fn random_planar<R: Rng>(rng: &mut R) -> PlanarState {
    let mut draw = || rng.gen_range(-INITIAL_SPREAD..=INITIAL_SPREAD);
    PlanarState {
        x: draw(),
        x_dot: draw(),
        theta: draw(),
        theta_dot: draw(),
    }
}

/// Initial state with every component uniform in `[-0.05, 0.05]`.
pub(crate) fn random_initial<R: Rng>(variant: Variant, rng: &mut R) -> CartState {
    match variant {
        Variant::ThreeD => {
            let x = random_planar(rng);
            let y = random_planar(rng);
            CartState::Spatial { x, y }
        }
        _ => CartState::Planar(random_planar(rng)),
    }
}

/// Mean number of identical consecutive actions, applied from a random
/// initial state, up to and including the step that fails the episode.
///
/// Each trial picks its action uniformly and draws from its own substream
/// of `seed`, so the mean does not depend on the thread count.
pub fn constant_action_limit(params: &CartPoleParams, trials: u64, seed: u64) -> Result<f64> {
    params.validate()?;
    if trials == 0 {
        return Err(Error::InvalidParameter("need at least one trial".into()));
    }
    let total: u64 = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = substream(seed, trial);
            let mut state = random_initial(params.variant, &mut rng);
            let action = Action(rng.gen_range(0..params.variant.action_count()));
            let mut steps = 0;
            while steps < STEP_CAP {
                state = step(state, action, params).expect("action drawn from the variant's set");
                steps += 1;
                if state.failed(params) {
                    break;
                }
            }
            steps
        })
        .sum();
    Ok(total as f64 / trials as f64)
}
