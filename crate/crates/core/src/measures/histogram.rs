use crate::measures::ProbDist;
use crate::{Error, Result};

/// Equal-width histogram over a closed range.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub bin_count: usize,
    pub range: (f64, f64),
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Histogram {
    pub fn to_dist(&self) -> Result<ProbDist> {
        ProbDist::from_counts(&self.counts)
    }

    pub fn occupied_bins(&self) -> usize {
        self.counts.iter().filter(|c| **c > 0).count()
    }
}

/// Bins `values` into `bin_count` equal-width bins over `[lo, hi]`.
///
/// Bins are right-open except the last, which also takes `hi`. Values below
/// `lo` land in the first bin and values above `hi` in the last.
pub fn histogram(values: &[f64], bin_count: usize, (lo, hi): (f64, f64)) -> Result<Histogram> {
    if bin_count == 0 {
        return Err(Error::InvalidParameter("bin count must be >= 1".into()));
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidParameter(format!("bad range [{lo}, {hi}]")));
    }
    if values.is_empty() {
        return Err(Error::DegenerateInput("histogram of no values".into()));
    }
    let span = hi - lo;
    let last = bin_count - 1;
    let mut counts = vec![0u64; bin_count];
    for &v in values {
        if v.is_nan() {
            return Err(Error::InvalidValue("NaN in histogram input".into()));
        }
        let pos = (v - lo) / span * bin_count as f64;
        let bin = if pos <= 0.0 {
            0
        } else {
            (pos.floor() as usize).min(last)
        };
        counts[bin] += 1;
    }
    Ok(Histogram {
        bin_count,
        range: (lo, hi),
        counts,
        total: values.len() as u64,
    })
}

/// 256-bin histogram of 8-bit intensities over `[0, 255]`.
///
/// Under the equal-width rule every byte value owns exactly one bin, so this
/// agrees with [`histogram`] on the same data without the float arithmetic.
pub fn histogram_bytes(values: &[u8]) -> Result<Histogram> {
    if values.is_empty() {
        return Err(Error::DegenerateInput("histogram of no values".into()));
    }
    let mut counts = vec![0u64; 256];
    for &v in values {
        counts[v as usize] += 1;
    }
    Ok(Histogram {
        bin_count: 256,
        range: (0.0, 255.0),
        counts,
        total: values.len() as u64,
    })
}
