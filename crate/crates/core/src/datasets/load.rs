use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use flate2::read::GzDecoder;

use super::{mnist_from_idx, parse_cifar10, parse_idx, LabeledImageDataset};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split {
    Train,
    Test,
    All,
}

/// Reads `path`, or `path.gz` decompressed when only that exists.
pub fn read_maybe_gz(path: &Path) -> Result<Vec<u8>> {
    if path.exists() {
        let bytes = fs::read(path)?;
        if path.extension().is_some_and(|e| e == "gz") {
            return gunzip(&bytes);
        }
        return Ok(bytes);
    }
    let mut gz = path.as_os_str().to_owned();
    gz.push(".gz");
    let gz = PathBuf::from(gz);
    if gz.exists() {
        return gunzip(&fs::read(gz)?);
    }
    Err(Error::Io(std::io::Error::new(
        std::io::ErrorKind::NotFound,
        format!("{} (or .gz) not found", path.display()),
    )))
}

fn gunzip(bytes: &[u8]) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    GzDecoder::new(bytes).read_to_end(&mut out)?;
    Ok(out)
}

fn first_existing(dir: &Path, names: &[&str]) -> Result<Vec<u8>> {
    for name in names {
        let p = dir.join(name);
        let mut gz = p.as_os_str().to_owned();
        gz.push(".gz");
        if p.exists() || PathBuf::from(gz).exists() {
            return read_maybe_gz(&p);
        }
    }
    Err(Error::Io(std::io::Error::new(
        std::io::ErrorKind::NotFound,
        format!("none of {names:?} in {}", dir.display()),
    )))
}

fn mnist_split(dir: &Path, prefix: &str) -> Result<LabeledImageDataset> {
    let images = first_existing(
        dir,
        &[&format!("{prefix}-images-idx3-ubyte"), &format!("{prefix}-images.idx3-ubyte")],
    )?;
    let labels = first_existing(
        dir,
        &[&format!("{prefix}-labels-idx1-ubyte"), &format!("{prefix}-labels.idx1-ubyte")],
    )?;
    mnist_from_idx(parse_idx(&images)?, parse_idx(&labels)?)
}

/// Loads MNIST from the standard IDX file names, raw or gzipped.
pub fn load_mnist(dir: &Path, split: Split) -> Result<LabeledImageDataset> {
    match split {
        Split::Train => mnist_split(dir, "train"),
        Split::Test => mnist_split(dir, "t10k"),
        Split::All => {
            let mut d = mnist_split(dir, "train")?;
            d.extend(mnist_split(dir, "t10k")?)?;
            Ok(d)
        }
    }
}

/// Loads CIFAR-10 binary batches from `dir` or `dir/cifar-10-batches-bin`.
pub fn load_cifar10(dir: &Path, split: Split) -> Result<LabeledImageDataset> {
    let nested = dir.join("cifar-10-batches-bin");
    let root = if nested.is_dir() { nested } else { dir.to_path_buf() };
    let train: Vec<String> = (1..=5).map(|i| format!("data_batch_{i}.bin")).collect();
    let test = vec!["test_batch.bin".to_string()];
    let files = match split {
        Split::Train => train,
        Split::Test => test,
        Split::All => train.into_iter().chain(test).collect(),
    };
    let mut out: Option<LabeledImageDataset> = None;
    for f in files {
        let part = parse_cifar10(&read_maybe_gz(&root.join(f))?)?;
        match out.as_mut() {
            Some(d) => d.extend(part)?,
            None => out = Some(part),
        }
    }
    Ok(out.expect("at least one batch"))
}
