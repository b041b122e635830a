use num_bigint::BigUint;

use super::{DomainDescriptor, InformationBreakdown, Role};
use crate::games::binomial;
use crate::measures::{
    gtc_power, log10_biguint, normalized_entropy, Direction, MeasureFamily, MeasureResult,
    ProbDist, Provenance,
};
use crate::{Error, Result};

fn sum_log10<'a>(components: impl Iterator<Item = &'a super::Component>) -> Result<f64> {
    components.map(|c| c.cardinality.log10()).sum()
}

fn require_role(d: &DomainDescriptor, role: Role) -> Result<()> {
    if d.components_with(role).next().is_none() {
        return Err(Error::InvalidParameter(format!(
            "descriptor {} has no {role:?} components",
            d.name
        )));
    }
    Ok(())
}

/// log10 of the product of state-role cardinalities, excluding estimates.
pub fn state_space_complexity(d: &DomainDescriptor) -> Result<f64> {
    require_role(d, Role::State)?;
    sum_log10(d.components_with(Role::State).filter(|c| !c.estimate))
}

/// Environment-space upper bound. Same product as
/// [`state_space_complexity`]; rules are not applied to prune it.
pub fn environment_space_bound(d: &DomainDescriptor) -> Result<f64> {
    state_space_complexity(d)
}

/// Environment-space bound with estimate-marked slack factors included.
pub fn environment_space_with_estimates(d: &DomainDescriptor) -> Result<f64> {
    require_role(d, Role::State)?;
    sum_log10(d.components_with(Role::State))
}

/// log10 of the number of distinct game instances, optionally times the
/// number of initial states.
///
/// Initial states come from `initial`-role components when the descriptor
/// has any, otherwise from the full state space.
pub fn game_space_complexity(d: &DomainDescriptor, include_initial_states: bool) -> Result<f64> {
    require_role(d, Role::Instance)?;
    let instances = sum_log10(d.components_with(Role::Instance))?;
    if !include_initial_states {
        return Ok(instances);
    }
    let initial = if d.components_with(Role::Initial).next().is_some() {
        sum_log10(d.components_with(Role::Initial))?
    } else {
        state_space_complexity(d)?
    };
    Ok(instances + initial)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeMode {
    /// `log10(sum_{i=1..max} b^i)`: every game of every length up to the maximum.
    UniformSum,
    /// `avg * log10(b)`.
    Power,
}

pub fn tree_complexity(d: &DomainDescriptor, mode: TreeMode) -> Result<f64> {
    if d.branching_factor < 2 {
        return Err(Error::InvalidParameter(
            "tree complexity needs branching factor >= 2".into(),
        ));
    }
    let b = d.branching_factor as f64;
    match mode {
        TreeMode::Power => gtc_power(b, d.avg_game_length as f64),
        TreeMode::UniformSum => {
            // sum = b (b^m - 1) / (b - 1)
            let m = d.max_game_length as f64;
            let tail = (-(m * b.ln())).exp();
            Ok(m * b.log10() + (b / (b - 1.0)).log10() + (-tail).ln_1p() / std::f64::consts::LN_10)
        }
    }
}

/// Normalized entropy of the information weights `count * units`, one
/// event per element.
pub fn information_entropy(bk: &InformationBreakdown) -> Result<MeasureResult> {
    if bk.elements.len() < 2 {
        return Err(Error::DegenerateInput(
            "information entropy needs at least two elements".into(),
        ));
    }
    let weights: Vec<f64> = bk
        .elements
        .iter()
        .map(|e| (e.count * e.units) as f64)
        .collect();
    let dist = ProbDist::from_weights(&weights)?;
    let n = bk.elements.len();
    let value = normalized_entropy(&dist, n)?;
    Ok(MeasureResult::new(
        "information_entropy",
        MeasureFamily::Diversity,
        value,
        format!("p_i = count_i * units_i / total units; event_count = {n} elements"),
        Provenance::Analytic,
    ))
}

/// Win probabilities over at least two players.
#[derive(Debug, Clone, PartialEq)]
pub struct WinProbVector(ProbDist);

impl WinProbVector {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.len() < 2 {
            return Err(Error::InvalidParameter(
                "win probabilities need at least two players".into(),
            ));
        }
        Ok(Self(ProbDist::new(probs)?))
    }

    pub fn players(&self) -> usize {
        self.0.len()
    }
}

pub fn strategy_entropy(w: &WinProbVector) -> Result<MeasureResult> {
    let n = w.players();
    let value = normalized_entropy(&w.0, n)?;
    Ok(MeasureResult::new(
        "strategy_entropy",
        MeasureFamily::Diversity,
        value,
        format!("p_i = win probability of player i; event_count = {n} players"),
        Provenance::Analytic,
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathSparsity {
    pub successful_paths: BigUint,
    pub path_length: u64,
    pub total_paths_log10: f64,
    pub sparsity_log10: f64,
}

impl PathSparsity {
    pub fn sparsity(&self) -> f64 {
        10f64.powf(self.sparsity_log10)
    }
}

/// Fraction of length-`L` action sequences that complete a task needing
/// `a` moves of one kind and `b` of another in any order, then one finishing
/// action: `C(a+b, a) / branching^L` with `L = a + b + 1 + extra_actions`.
///
/// Successful paths are counted without slack moves, so for `extra > 0` the
/// value is an upper bound in the same sense as the zero-slack case.
pub fn path_sparsity_bound(
    (a, b): (u64, u64),
    extra_actions: u64,
    branching: u64,
) -> Result<PathSparsity> {
    if a + b == 0 {
        return Err(Error::InvalidParameter("need at least one required move".into()));
    }
    if branching == 0 {
        return Err(Error::InvalidParameter("branching must be >= 1".into()));
    }
    let successful_paths = binomial(a + b, a);
    let path_length = a + b + 1 + extra_actions;
    let total_paths_log10 = path_length as f64 * (branching as f64).log10();
    let sparsity_log10 = log10_biguint(&successful_paths) - total_paths_log10;
    Ok(PathSparsity {
        successful_paths,
        path_length,
        total_paths_log10,
        sparsity_log10,
    })
}

fn dim(name: &str, value: f64, convention: &str) -> MeasureResult {
    MeasureResult::new(
        name,
        MeasureFamily::Dimensionality,
        value,
        convention,
        Provenance::Analytic,
    )
}

/// Every measure the descriptor supports.
pub fn analyze(d: &DomainDescriptor) -> Result<Vec<MeasureResult>> {
    d.validate()?;
    let mut out = Vec::new();
    let has = |role| d.components_with(role).next().is_some();
    if has(Role::State) {
        out.push(dim(
            "state_space_complexity",
            state_space_complexity(d)?,
            "log10 product of state components, estimates excluded",
        ));
        if d.components.iter().any(|c| c.estimate) {
            out.push(dim(
                "environment_space_with_estimates",
                environment_space_with_estimates(d)?,
                "log10 product of state components including estimate slack",
            ));
        }
    }
    if has(Role::Instance) {
        out.push(dim(
            "game_space_complexity",
            game_space_complexity(d, true)?,
            "log10 product of instance components times initial states",
        ));
    }
    if d.branching_factor >= 2 {
        out.push(dim(
            "game_tree_complexity",
            tree_complexity(d, TreeMode::Power)?,
            "avg_game_length * log10(branching_factor)",
        ));
        out.push(dim(
            "game_tree_complexity_uniform_sum",
            tree_complexity(d, TreeMode::UniformSum)?,
            "log10 sum_{i=1..max_game_length} branching_factor^i",
        ));
    }
    out.push(dim("branching_factor", d.branching_factor as f64, "actions per ply"));
    out.push(dim("average_game_length", d.avg_game_length as f64, "plies"));
    if let Some(bk) = d.breakdown() {
        out.push(information_entropy(&bk)?);
    }
    for s in &d.strategies {
        let mut m = strategy_entropy(&WinProbVector::new(s.win_probs.clone())?)?;
        m.measure_name = format!("strategy_entropy.{}", s.name);
        out.push(m);
    }
    if let Some(path) = d.solution_path {
        let [a, b] = path.required_moves;
        let ps = path_sparsity_bound((a, b), path.extra_actions, d.branching_factor)?;
        out.push(
            MeasureResult::new(
                "path_sparsity_log10",
                MeasureFamily::Sparsity,
                ps.sparsity_log10,
                format!(
                    "log10(C(a+b, a) / branching^L), L = a + b + 1 + extra = {}",
                    ps.path_length
                ),
                Provenance::Analytic,
            )
            .with_direction(Direction::LowerIsMoreComplex),
        );
    }
    Ok(out)
}
