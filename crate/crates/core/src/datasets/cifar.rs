use super::LabeledImageDataset;
use crate::{Error, Result};

pub const CIFAR10_RECORD_LEN: usize = 1 + 3 * 32 * 32;

pub const CIFAR10_CLASSES: [&str; 10] = [
    "airplane",
    "automobile",
    "bird",
    "cat",
    "deer",
    "dog",
    "frog",
    "horse",
    "ship",
    "truck",
];

/// Parses a CIFAR-10 binary batch: 3073-byte records holding a label byte
/// then the red, green and blue 32x32 planes.
pub fn parse_cifar10(bytes: &[u8]) -> Result<LabeledImageDataset> {
    let names = CIFAR10_CLASSES.iter().map(|s| s.to_string()).collect();
    parse_planar_records(bytes, 32, 32, 3, names)
}

/// Parses label-prefixed records whose channels are stored as whole planes
/// and converts them to interleaved `H x W x C` layout.
pub fn parse_planar_records(
    bytes: &[u8],
    height: usize,
    width: usize,
    channels: usize,
    class_names: Vec<String>,
) -> Result<LabeledImageDataset> {
    let plane = height * width;
    let record = 1 + plane * channels;
    if bytes.is_empty() {
        return Err(Error::TruncatedInput("no records".into()));
    }
    if bytes.len() % record != 0 {
        return Err(Error::TruncatedInput(format!(
            "{} bytes is not a whole number of {record}-byte records",
            bytes.len()
        )));
    }
    let n = bytes.len() / record;
    let mut labels = Vec::with_capacity(n);
    let mut pixels = vec![0u8; n * plane * channels];
    for (i, rec) in bytes.chunks_exact(record).enumerate() {
        if rec[0] as usize >= class_names.len() {
            return Err(Error::FormatError(format!(
                "record {i} has label {} with {} classes",
                rec[0],
                class_names.len()
            )));
        }
        labels.push(rec[0]);
        let out = &mut pixels[i * plane * channels..(i + 1) * plane * channels];
        for c in 0..channels {
            let src = &rec[1 + c * plane..1 + (c + 1) * plane];
            for (p, &v) in src.iter().enumerate() {
                out[p * channels + c] = v;
            }
        }
    }
    Ok(LabeledImageDataset {
        height,
        width,
        channels,
        pixels,
        labels,
        class_names,
        pixel_value_count: 256,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_full_record() {
        let mut rec = vec![3u8];
        rec.extend(std::iter::repeat(10).take(1024));
        rec.extend(std::iter::repeat(20).take(1024));
        rec.extend(std::iter::repeat(30).take(1024));
        let d = parse_cifar10(&rec).unwrap();
        assert_eq!(d.image_count(), 1);
        assert_eq!(d.labels, vec![3]);
        assert_eq!(&d.image(0)[..6], &[10, 20, 30, 10, 20, 30]);
        assert_eq!(d.meta().pixels, 1024);
    }

    #[test]
    fn rejects_bad_records() {
        let mut rec = vec![10u8];
        rec.extend(vec![0; 3072]);
        assert!(matches!(parse_cifar10(&rec), Err(Error::FormatError(_))));
        assert!(matches!(parse_cifar10(&rec[..3000]), Err(Error::TruncatedInput(_))));
        assert!(matches!(parse_cifar10(&[]), Err(Error::TruncatedInput(_))));
    }
}
