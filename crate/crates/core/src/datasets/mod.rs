//! Readers for the IDX (MNIST), CIFAR-10 binary and Iris CSV formats, plus
//! directory loaders and a checksummed download helper.

mod cifar;
mod fetch;
mod idx;
mod iris;
mod load;

pub use cifar::{parse_cifar10, parse_planar_records, CIFAR10_CLASSES, CIFAR10_RECORD_LEN};
pub use fetch::{
    fetch, sha256_hex, unpack_tar_gz, verify_sha256, CIFAR10_URL, MNIST_BASE_URL, MNIST_FILES,
};
pub use idx::{mnist_from_idx, parse_idx, IdxTensor};
pub use iris::{bundled_iris, parse_iris_csv, IRIS_CLASSES, IRIS_FEATURES};
pub use load::{load_cifar10, load_mnist, read_maybe_gz, Split};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Counts that enter the feature-space dimensionality product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetMeta {
    pub pixels: u64,
    pub channels: u64,
    pub classes: u64,
    pub pixel_values: u64,
    pub images: u64,
}

/// Images stored row-major with interleaved channels (`N x H x W x C`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledImageDataset {
    pub height: usize,
    pub width: usize,
    pub channels: usize,
    pub pixels: Vec<u8>,
    pub labels: Vec<u8>,
    pub class_names: Vec<String>,
    /// 256 for 8-bit data, 2 after binarization.
    pub pixel_value_count: u32,
}

impl LabeledImageDataset {
    pub fn image_len(&self) -> usize {
        self.height * self.width * self.channels
    }

    pub fn image_count(&self) -> usize {
        self.labels.len()
    }

    pub fn class_count(&self) -> usize {
        self.class_names.len()
    }

    pub fn image(&self, i: usize) -> &[u8] {
        let n = self.image_len();
        &self.pixels[i * n..(i + 1) * n]
    }

    pub fn images(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.pixels.chunks_exact(self.image_len())
    }

    /// One channel of image `i`, row-major.
    pub fn channel(&self, i: usize, channel: usize) -> Result<Vec<u8>> {
        if channel >= self.channels {
            return Err(Error::InvalidParameter(format!(
                "channel {channel} of a {}-channel image",
                self.channels
            )));
        }
        Ok(self
            .image(i)
            .iter()
            .skip(channel)
            .step_by(self.channels)
            .copied()
            .collect())
    }

    pub fn meta(&self) -> DatasetMeta {
        DatasetMeta {
            pixels: (self.height * self.width) as u64,
            channels: self.channels as u64,
            classes: self.class_count() as u64,
            pixel_values: u64::from(self.pixel_value_count),
            images: self.image_count() as u64,
        }
    }

    /// Appends `other`, which must share the image shape and classes.
    pub fn extend(&mut self, other: LabeledImageDataset) -> Result<()> {
        if (self.height, self.width, self.channels) != (other.height, other.width, other.channels)
            || self.class_names != other.class_names
        {
            return Err(Error::InvalidParameter(
                "cannot join datasets of different shape or classes".into(),
            ));
        }
        self.pixels.extend(other.pixels);
        self.labels.extend(other.labels);
        Ok(())
    }
}

/// Maps every pixel to 1 if its intensity exceeds `threshold`, else 0.
pub fn binarize(dataset: &LabeledImageDataset, threshold: u8) -> Result<LabeledImageDataset> {
    if dataset.channels != 1 {
        return Err(Error::InvalidParameter(format!(
            "binarize needs a single-channel dataset, got {} channels",
            dataset.channels
        )));
    }
    Ok(LabeledImageDataset {
        pixels: dataset
            .pixels
            .iter()
            .map(|&p| u8::from(p > threshold))
            .collect(),
        pixel_value_count: 2,
        ..dataset.clone()
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TabularRow {
    pub features: Vec<f64>,
    pub class: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TabularDataset {
    pub rows: Vec<TabularRow>,
    pub feature_names: Vec<String>,
    pub class_names: Vec<String>,
}

impl TabularDataset {
    /// Values of one feature over the rows of one class.
    pub fn column(&self, class: usize, feature: usize) -> Result<Vec<f64>> {
        if class >= self.class_names.len() {
            return Err(Error::InvalidParameter(format!("unknown class index {class}")));
        }
        if feature >= self.feature_names.len() {
            return Err(Error::InvalidParameter(format!(
                "unknown feature index {feature}"
            )));
        }
        Ok(self
            .rows
            .iter()
            .filter(|r| r.class == class)
            .map(|r| r.features[feature])
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gray(pixels: Vec<u8>) -> LabeledImageDataset {
        LabeledImageDataset {
            height: 1,
            width: pixels.len(),
            channels: 1,
            pixels,
            labels: vec![0],
            class_names: vec!["zero".into()],
            pixel_value_count: 256,
        }
    }

    #[test]
    fn binarize_default_threshold() {
        let b = binarize(&gray(vec![0, 1, 0, 255]), 0).unwrap();
        assert_eq!(b.pixels, vec![0, 1, 0, 1]);
        assert_eq!(b.pixel_value_count, 2);
        let z = binarize(&gray(vec![0; 4]), 0).unwrap();
        assert_eq!(z.pixels, vec![0; 4]);
        let t = binarize(&gray(vec![10, 200]), 127).unwrap();
        assert_eq!(t.pixels, vec![0, 1]);
    }

    #[test]
    fn binarize_rejects_color() {
        let mut d = gray(vec![0; 6]);
        d.width = 2;
        d.channels = 3;
        assert!(matches!(binarize(&d, 0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn channel_extraction() {
        let d = LabeledImageDataset {
            height: 1,
            width: 2,
            channels: 3,
            pixels: vec![1, 2, 3, 4, 5, 6],
            labels: vec![0],
            class_names: vec!["a".into()],
            pixel_value_count: 256,
        };
        assert_eq!(d.channel(0, 0).unwrap(), vec![1, 4]);
        assert_eq!(d.channel(0, 2).unwrap(), vec![3, 6]);
        assert!(d.channel(0, 3).is_err());
    }
}
