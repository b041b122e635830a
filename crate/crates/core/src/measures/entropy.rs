use std::ops::Deref;

use crate::{Error, Result};

/// Allowed deviation of a probability vector's sum from one.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Discrete probability vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbDist(Vec<f64>);

impl ProbDist {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidDistribution("no events".into()));
        }
        if let Some(p) = probs.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(Error::InvalidDistribution(format!(
                "probability {p} outside [0, 1]"
            )));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {sum}"
            )));
        }
        Ok(Self(probs))
    }

    /// Normalizes non-negative weights by their total.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidValue("weights must be finite and >= 0".into()));
        }
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(Error::DegenerateInput("weights sum to zero".into()));
        }
        Self::new(weights.iter().map(|w| w / total).collect())
    }

    pub fn from_counts(counts: &[u64]) -> Result<Self> {
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(Error::DegenerateInput("all counts are zero".into()));
        }
        let total = total as f64;
        Self::new(counts.iter().map(|&c| c as f64 / total).collect())
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDistribution("no events".into()));
        }
        Ok(Self(vec![1.0 / n as f64; n]))
    }
}

impl Deref for ProbDist {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

/// Shannon entropy in bits; `0 * log2(0)` counts as zero.
pub fn shannon_entropy(dist: &ProbDist) -> f64 {
    let h: f64 = dist
        .iter()
        .filter(|p| **p > 0.0)
        .map(|p| -p * p.log2())
        .sum();
    h.max(0.0)
}

/// Shannon entropy divided by `log2(event_count)`.
///
/// `event_count` is the size of the event space the distribution is defined
/// over, which may exceed the number of occupied events.
pub fn normalized_entropy(dist: &ProbDist, event_count: usize) -> Result<f64> {
    if event_count < 2 {
        return Err(Error::InvalidParameter(format!(
            "event count must be >= 2, got {event_count}"
        )));
    }
    if dist.len() > event_count {
        return Err(Error::InvalidParameter(format!(
            "distribution has {} events but event count is {event_count}",
            dist.len()
        )));
    }
    let h = shannon_entropy(dist) / (event_count as f64).log2();
    Ok(h.clamp(0.0, 1.0))
}
