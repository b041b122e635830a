use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::{Error, Result};

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Checks `bytes` against a hex SHA-256 digest (case-insensitive).
pub fn verify_sha256(bytes: &[u8], expected: &str) -> Result<()> {
    let actual = sha256_hex(bytes);
    if actual.eq_ignore_ascii_case(expected.trim()) {
        Ok(())
    } else {
        Err(Error::ChecksumMismatch {
            expected: expected.trim().to_ascii_lowercase(),
            actual,
        })
    }
}

/// Downloads `url` into `dest_dir`, verifying the digest before writing.
/// An existing file with a matching digest is reused.
pub fn fetch(url: &str, sha256: &str, dest_dir: &Path) -> Result<PathBuf> {
    let name = url
        .rsplit('/')
        .next()
        .filter(|s| !s.is_empty())
        .ok_or_else(|| Error::InvalidParameter(format!("no file name in {url}")))?;
    let dest = dest_dir.join(name);
    if let Ok(existing) = fs::read(&dest) {
        if verify_sha256(&existing, sha256).is_ok() {
            return Ok(dest);
        }
    }
    log::info!("downloading {url}");
    let response = ureq::get(url)
        .call()
        .map_err(|e| Error::Download(e.to_string()))?;
    let mut bytes = Vec::new();
    response.into_reader().read_to_end(&mut bytes)?;
    verify_sha256(&bytes, sha256)?;
    fs::create_dir_all(dest_dir)?;
    fs::write(&dest, bytes)?;
    Ok(dest)
}

pub const MNIST_BASE_URL: &str = "https://ossci-datasets.s3.amazonaws.com/mnist/";
pub const MNIST_FILES: [&str; 4] = [
    "train-images-idx3-ubyte.gz",
    "train-labels-idx1-ubyte.gz",
    "t10k-images-idx3-ubyte.gz",
    "t10k-labels-idx1-ubyte.gz",
];
pub const CIFAR10_URL: &str = "https://www.cs.toronto.edu/~kriz/cifar-10-binary.tar.gz";

/// Unpacks a `.tar.gz` archive into `dest_dir`.
pub fn unpack_tar_gz(archive: &Path, dest_dir: &Path) -> Result<()> {
    let file = fs::File::open(archive)?;
    tar::Archive::new(flate2::read::GzDecoder::new(file)).unpack(dest_dir)?;
    Ok(())
}
