use super::LabeledImageDataset;
use crate::{Error, Result};

const UNSIGNED_BYTE: u8 = 0x08;

/// An IDX tensor of unsigned bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdxTensor {
    pub dims: Vec<u32>,
    pub data: Vec<u8>,
}

impl IdxTensor {
    /// Serializes back to the IDX container.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 + 4 * self.dims.len() + self.data.len());
        out.extend_from_slice(&[0, 0, UNSIGNED_BYTE, self.dims.len() as u8]);
        for d in &self.dims {
            out.extend_from_slice(&d.to_be_bytes());
        }
        out.extend_from_slice(&self.data);
        out
    }
}

/// Parses an IDX file: magic `00 00`, type byte `08`, dimension count, one
/// big-endian `u32` per dimension, then exactly `prod(dims)` payload bytes.
pub fn parse_idx(bytes: &[u8]) -> Result<IdxTensor> {
    if bytes.len() < 4 {
        return Err(Error::TruncatedInput(format!(
            "IDX header needs 4 bytes, got {}",
            bytes.len()
        )));
    }
    if bytes[0] != 0 || bytes[1] != 0 {
        return Err(Error::FormatError(format!(
            "bad IDX magic {:02x} {:02x}",
            bytes[0], bytes[1]
        )));
    }
    if bytes[2] != UNSIGNED_BYTE {
        return Err(Error::FormatError(format!(
            "unsupported IDX element type {:#04x}",
            bytes[2]
        )));
    }
    let ndims = bytes[3] as usize;
    let header = 4 + 4 * ndims;
    if bytes.len() < header {
        return Err(Error::TruncatedInput("IDX dimension table cut short".into()));
    }
    let dims: Vec<u32> = bytes[4..header]
        .chunks_exact(4)
        .map(|c| u32::from_be_bytes([c[0], c[1], c[2], c[3]]))
        .collect();
    let expected = dims
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d as usize))
        .ok_or_else(|| Error::FormatError("IDX dimensions overflow".into()))?;
    let payload = &bytes[header..];
    if payload.len() != expected {
        return Err(Error::TruncatedInput(format!(
            "IDX payload has {} bytes, dimensions {dims:?} need {expected}",
            payload.len()
        )));
    }
    Ok(IdxTensor {
        dims,
        data: payload.to_vec(),
    })
}

/// Pairs an `N x H x W` image tensor with an `N` label tensor (digits 0-9).
pub fn mnist_from_idx(images: IdxTensor, labels: IdxTensor) -> Result<LabeledImageDataset> {
    let [n, h, w] = images.dims[..] else {
        return Err(Error::FormatError(format!(
            "image tensor must have 3 dimensions, got {:?}",
            images.dims
        )));
    };
    if labels.dims != [n] {
        return Err(Error::FormatError(format!(
            "label tensor {:?} does not match {n} images",
            labels.dims
        )));
    }
    if let Some(bad) = labels.data.iter().find(|l| **l > 9) {
        return Err(Error::FormatError(format!("digit label {bad} out of range")));
    }
    Ok(LabeledImageDataset {
        height: h as usize,
        width: w as usize,
        channels: 1,
        pixels: images.data,
        labels: labels.data,
        class_names: (0..10).map(|d| d.to_string()).collect(),
        pixel_value_count: 256,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn vector_payload() {
        let t = parse_idx(&[0, 0, 8, 1, 0, 0, 0, 3, 7, 8, 9]).unwrap();
        assert_eq!(t.dims, vec![3]);
        assert_eq!(t.data, vec![7, 8, 9]);
    }

    #[test]
    fn mnist_sized_header() {
        let mut bytes = vec![0, 0, 8, 3];
        for d in [60000u32, 28, 28] {
            bytes.extend_from_slice(&d.to_be_bytes());
        }
        // header alone: payload missing
        match parse_idx(&bytes) {
            Err(Error::TruncatedInput(msg)) => assert!(msg.contains("47040000"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn error_paths() {
        assert!(matches!(parse_idx(&[0, 0, 8]), Err(Error::TruncatedInput(_))));
        assert!(matches!(
            parse_idx(&[1, 0, 8, 1, 0, 0, 0, 1, 5]),
            Err(Error::FormatError(_))
        ));
        assert!(matches!(
            parse_idx(&[0, 0, 0x0d, 1, 0, 0, 0, 1, 5]),
            Err(Error::FormatError(_))
        ));
        assert!(matches!(
            parse_idx(&[0, 0, 8, 1, 0, 0, 0, 2, 5]),
            Err(Error::TruncatedInput(_))
        ));
        assert!(matches!(
            parse_idx(&[0, 0, 8, 1, 0, 0, 0, 1, 5, 6]),
            Err(Error::TruncatedInput(_))
        ));
        assert!(matches!(parse_idx(&[0, 0, 8, 2, 0, 0]), Err(Error::TruncatedInput(_))));
    }

    #[test]
    fn pairs_images_and_labels() {
        let images = IdxTensor {
            dims: vec![2, 1, 2],
            data: vec![0, 255, 3, 4],
        };
        let labels = IdxTensor {
            dims: vec![2],
            data: vec![7, 1],
        };
        let d = mnist_from_idx(images.clone(), labels).unwrap();
        assert_eq!(d.image(1), &[3, 4]);
        assert_eq!(d.meta().images, 2);
        let bad = IdxTensor {
            dims: vec![2],
            data: vec![7, 10],
        };
        assert!(matches!(mnist_from_idx(images, bad), Err(Error::FormatError(_))));
    }

    proptest! {
        #[test]
        fn round_trip_is_byte_identical(
            dims in prop::collection::vec(1u32..6, 0..4),
            seed in any::<u8>(),
        ) {
            let n: u32 = dims.iter().product();
            let data: Vec<u8> = (0..n).map(|i| (i as u8).wrapping_mul(31).wrapping_add(seed)).collect();
            let bytes = IdxTensor { dims, data }.to_bytes();
            prop_assert_eq!(parse_idx(&bytes).unwrap().to_bytes(), bytes);
        }
    }
}
