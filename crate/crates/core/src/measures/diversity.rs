use std::collections::HashSet;
use std::hash::Hash;

use crate::{Error, Result};

/// Population variance (divides by N).
pub fn variance_diversity(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::DegenerateInput("variance of no values".into()));
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    Ok(values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n)
}

/// Number of distinct attributes across all entities.
pub fn attribute_diversity<E, A>(entities: E) -> usize
where
    E: IntoIterator,
    E::Item: IntoIterator<Item = A>,
    A: Eq + Hash,
{
    entities.into_iter().flatten().collect::<HashSet<A>>().len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Euclidean,
    Manhattan,
}

impl Metric {
    fn distance(self, a: &[f64], b: &[f64]) -> f64 {
        let diffs = a.iter().zip(b).map(|(x, y)| x - y);
        match self {
            Metric::Euclidean => diffs.map(|d| d * d).sum::<f64>().sqrt(),
            Metric::Manhattan => diffs.map(f64::abs).sum(),
        }
    }
}

/// Mean pairwise distance over all unordered pairs of points.
pub fn distance_diversity<P: AsRef<[f64]>>(points: &[P], metric: Metric) -> Result<f64> {
    if points.len() < 2 {
        return Err(Error::DegenerateInput(
            "distance diversity needs at least two points".into(),
        ));
    }
    let dim = points[0].as_ref().len();
    if let Some(p) = points.iter().find(|p| p.as_ref().len() != dim) {
        return Err(Error::InvalidValue(format!(
            "point of dimension {} among points of dimension {dim}",
            p.as_ref().len()
        )));
    }
    let mut sum = 0.0;
    let mut pairs = 0u64;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            sum += metric.distance(a.as_ref(), b.as_ref());
            pairs += 1;
        }
    }
    Ok(sum / pairs as f64)
}
