use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Boxplot statistics for one class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSummary {
    pub class_name: String,
    pub count: usize,
    pub mean: f64,
    pub median: f64,
    pub q1: f64,
    pub q3: f64,
    pub whisker_low: f64,
    pub whisker_high: f64,
    pub outlier_count: usize,
}

pub(crate) fn median_sorted(v: &[f64]) -> f64 {
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

impl ClassSummary {
    /// Quartiles are medians of the lower and upper halves, each half
    /// including the median itself when the count is odd.
    pub fn from_values(class_name: impl Into<String>, values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::DegenerateInput("no values to summarize".into()));
        }
        let mut v = values.to_vec();
        v.sort_by(f64::total_cmp);
        let n = v.len();
        let half = n.div_ceil(2);
        let q1 = median_sorted(&v[..half]);
        let q3 = median_sorted(&v[n - half..]);
        let iqr = q3 - q1;
        let lo_fence = q1 - 1.5 * iqr;
        let hi_fence = q3 + 1.5 * iqr;
        Ok(Self {
            class_name: class_name.into(),
            count: n,
            mean: v.iter().sum::<f64>() / n as f64,
            median: median_sorted(&v),
            q1,
            q3,
            whisker_low: lo_fence.max(v[0]),
            whisker_high: hi_fence.min(v[n - 1]),
            outlier_count: v.iter().filter(|&&x| x < lo_fence || x > hi_fence).count(),
        })
    }
}

/// Groups `values` by `labels` and summarizes each class present, in label
/// order. Classes with no values are omitted.
pub fn summarize_by_class(
    values: &[f64],
    labels: &[usize],
    class_names: &[String],
) -> Result<Vec<ClassSummary>> {
    if values.len() != labels.len() {
        return Err(Error::InvalidParameter(format!(
            "{} values but {} labels",
            values.len(),
            labels.len()
        )));
    }
    let mut groups: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for (&v, &l) in values.iter().zip(labels) {
        if l >= class_names.len() {
            return Err(Error::InvalidParameter(format!("label {l} has no class name")));
        }
        groups.entry(l).or_default().push(v);
    }
    for (i, name) in class_names.iter().enumerate() {
        if !groups.contains_key(&i) {
            log::warn!("class {name} has no values; omitted");
        }
    }
    groups
        .into_iter()
        .map(|(l, v)| ClassSummary::from_values(class_names[l].clone(), &v))
        .collect()
}

pub fn median_of_medians(classes: &[ClassSummary]) -> Option<f64> {
    if classes.is_empty() {
        return None;
    }
    let mut m: Vec<f64> = classes.iter().map(|c| c.median).collect();
    m.sort_by(f64::total_cmp);
    Some(median_sorted(&m))
}
