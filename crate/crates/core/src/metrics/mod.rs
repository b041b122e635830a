//! Dataset-level measures: feature-space dimensionality, per-image
//! zero-fraction sparsity, Gini and entropy, and per-class summaries.

mod summary;

pub use summary::{median_of_medians, summarize_by_class, ClassSummary};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::datasets::{DatasetMeta, LabeledImageDataset, TabularDataset};
use crate::measures::{
    gini, histogram_bytes, log10_product, normalized_entropy, Cardinality, MeasureFamily,
    MeasureResult, Provenance,
};
use crate::{Error, Result};

pub const ZERO_SPARSITY_CONVENTION: &str = "fraction of zero-valued pixels per image";
pub const IMAGE_ENTROPY_BINS: usize = 256;

/// log10 of pixels x channels x classes x pixel values x images.
pub fn feature_space_dimensionality(meta: &DatasetMeta) -> Result<f64> {
    log10_product(&[
        Cardinality::count(meta.pixels),
        Cardinality::count(meta.channels),
        Cardinality::count(meta.classes),
        Cardinality::count(meta.pixel_values),
        Cardinality::count(meta.images),
    ])
}

pub fn dimensionality_measure(meta: &DatasetMeta) -> Result<MeasureResult> {
    Ok(MeasureResult::new(
        "feature_space_dimensionality",
        MeasureFamily::Dimensionality,
        feature_space_dimensionality(meta)?,
        format!(
            "log10(pixels {} x channels {} x classes {} x pixel values {} x images {})",
            meta.pixels, meta.channels, meta.classes, meta.pixel_values, meta.images
        ),
        Provenance::Analytic,
    ))
}

/// Fraction of pixels equal to zero.
pub fn image_zero_sparsity(image: &[u8]) -> Result<f64> {
    if image.is_empty() {
        return Err(Error::DegenerateInput("empty image".into()));
    }
    let zeros = image.iter().filter(|&&p| p == 0).count();
    Ok(zeros as f64 / image.len() as f64)
}

/// Normalized entropy of a 256-bin intensity histogram. All channels are
/// pooled. With `binarize_first` every nonzero pixel counts as 1.
pub fn image_entropy(image: &[u8], binarize_first: bool) -> Result<f64> {
    let hist = if binarize_first {
        let b: Vec<u8> = image.iter().map(|&p| u8::from(p > 0)).collect();
        histogram_bytes(&b)?
    } else {
        histogram_bytes(image)?
    };
    normalized_entropy(&hist.to_dist()?, IMAGE_ENTROPY_BINS)
}

/// Gini index of one channel of an interleaved image.
pub fn channel_gini(image: &[u8], channels: usize, channel: usize) -> Result<f64> {
    if channels == 0 || channel >= channels {
        return Err(Error::InvalidParameter(format!(
            "channel {channel} of a {channels}-channel image"
        )));
    }
    let values: Vec<f64> = image
        .iter()
        .skip(channel)
        .step_by(channels)
        .map(|&p| f64::from(p))
        .collect();
    gini(&values)
}

/// Gini index of one feature over the rows of one class.
pub fn tabular_gini(ds: &TabularDataset, class: usize, feature: usize) -> Result<f64> {
    let column = ds.column(class, feature)?;
    if column.len() < 2 {
        return Err(Error::DegenerateInput(format!(
            "class {class} has {} rows",
            column.len()
        )));
    }
    gini(&column)
}

/// A per-image measure over a whole dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSummary {
    pub measure_name: String,
    pub convention: String,
    pub image_count: usize,
    /// Images whose value was undefined (all-zero channel for Gini).
    pub excluded: usize,
    pub mean: f64,
    pub median: f64,
    pub median_of_medians: f64,
    pub classes: Vec<ClassSummary>,
}

impl DatasetSummary {
    pub fn class(&self, name: &str) -> Option<&ClassSummary> {
        self.classes.iter().find(|c| c.class_name == name)
    }

    pub fn measures(&self) -> Vec<MeasureResult> {
        let family = if self.measure_name.contains("entropy") {
            MeasureFamily::Diversity
        } else {
            MeasureFamily::Sparsity
        };
        let make = |suffix: &str, value: f64| {
            MeasureResult::new(
                format!("{}.{suffix}", self.measure_name),
                family,
                value,
                self.convention.clone(),
                Provenance::Enumerated,
            )
        };
        let mut out = vec![
            make("mean", self.mean),
            make("median", self.median),
            make("median_of_medians", self.median_of_medians),
        ];
        for c in &self.classes {
            out.push(make(&format!("{}.median", c.class_name), c.median));
        }
        out
    }
}

fn summarize<F>(
    ds: &LabeledImageDataset,
    measure_name: &str,
    convention: String,
    f: F,
) -> Result<DatasetSummary>
where
    F: Fn(&[u8]) -> Result<f64> + Sync,
{
    let n = ds.image_len();
    if ds.image_count() == 0 || n == 0 {
        return Err(Error::DegenerateInput("dataset has no images".into()));
    }
    let results: Vec<Option<f64>> = ds
        .pixels
        .par_chunks_exact(n)
        .map(|img| match f(img) {
            Ok(v) => Ok(Some(v)),
            Err(Error::DegenerateInput(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    let mut values = Vec::with_capacity(results.len());
    let mut labels = Vec::with_capacity(results.len());
    for (v, &l) in results.iter().zip(&ds.labels) {
        if let Some(v) = v {
            values.push(*v);
            labels.push(l as usize);
        }
    }
    let excluded = results.len() - values.len();
    if excluded > 0 {
        log::warn!("{measure_name}: {excluded} images excluded as degenerate");
    }
    if values.is_empty() {
        return Err(Error::DegenerateInput(format!(
            "{measure_name} is undefined on every image"
        )));
    }
    let classes = summarize_by_class(&values, &labels, &ds.class_names)?;
    let mut sorted = values.clone();
    sorted.sort_by(f64::total_cmp);
    Ok(DatasetSummary {
        measure_name: measure_name.to_string(),
        convention,
        image_count: ds.image_count(),
        excluded,
        mean: values.iter().sum::<f64>() / values.len() as f64,
        median: summary::median_sorted(&sorted),
        median_of_medians: median_of_medians(&classes).expect("nonempty"),
        classes,
    })
}

pub fn dataset_sparsity(ds: &LabeledImageDataset) -> Result<DatasetSummary> {
    summarize(
        ds,
        "zero_sparsity",
        ZERO_SPARSITY_CONVENTION.to_string(),
        image_zero_sparsity,
    )
}

pub fn dataset_entropy(ds: &LabeledImageDataset, binarize_first: bool) -> Result<DatasetSummary> {
    let mode = if binarize_first { "binarized" } else { "raw" };
    summarize(
        ds,
        &format!("image_entropy.{mode}"),
        format!(
            "{mode} intensities, channels pooled, {IMAGE_ENTROPY_BINS} bins over [0,255], entropy / log2({IMAGE_ENTROPY_BINS})"
        ),
        |img| image_entropy(img, binarize_first),
    )
}

/// One summary per channel; all-zero channels are excluded.
pub fn dataset_channel_gini(ds: &LabeledImageDataset) -> Result<Vec<DatasetSummary>> {
    let names = ["red", "green", "blue"];
    (0..ds.channels)
        .map(|c| {
            let label = if ds.channels == 3 {
                names[c].to_string()
            } else {
                format!("channel{c}")
            };
            summarize(
                ds,
                &format!("channel_gini.{label}"),
                "sorted-ascending Gini index over raw channel intensities".into(),
                |img| channel_gini(img, ds.channels, c),
            )
        })
        .collect()
}

/// Gini per (class, feature) cell in row-major class order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TabularGiniCell {
    pub class_name: String,
    pub feature_name: String,
    pub gini: f64,
}

pub fn tabular_gini_table(ds: &TabularDataset) -> Result<Vec<TabularGiniCell>> {
    let mut out = Vec::new();
    for (c, class_name) in ds.class_names.iter().enumerate() {
        for (f, feature_name) in ds.feature_names.iter().enumerate() {
            out.push(TabularGiniCell {
                class_name: class_name.clone(),
                feature_name: feature_name.clone(),
                gini: tabular_gini(ds, c, f)?,
            });
        }
    }
    Ok(out)
}
