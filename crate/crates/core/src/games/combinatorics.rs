use num_bigint::BigUint;
use num_traits::One;

use super::GridGameSpec;
use crate::measures::log10_biguint;
use crate::{Error, Result};

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Placements of `ceil(i/2)` first-player and `floor(i/2)` second-player
/// stones on `cells` cells, the ply-`i` term of the combinatorial state count.
pub fn ply_term(cells: u64, ply: u64) -> BigUint {
    let first = (ply + 1) / 2;
    let second = ply / 2;
    binomial(cells, first) * binomial(cells - first.min(cells), second)
}

/// log10 of `3^(N^D)`: every cell empty, X or O.
pub fn ssc_upper_bound(spec: &GridGameSpec) -> f64 {
    spec.cells() as f64 * 3f64.log10()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SscCount {
    pub total: BigUint,
    pub log10: f64,
}

/// Combinatorial state-space estimate summed over plies `1..=P`.
///
/// Over-counts the legal positions because it ignores games that ended early.
pub fn ssc_combinatorial(spec: &GridGameSpec) -> SscCount {
    let cells = spec.cells();
    let total: BigUint = (1..=u64::from(spec.max_plies))
        .map(|i| ply_term(cells, i))
        .sum();
    let log10 = log10_biguint(&total);
    SscCount { total, log10 }
}

/// log10 of `cells! / (cells - avg_game_length)!`, the leaf count of a game
/// tree whose branching factor drops by one each ply.
pub fn gtc_factorial(cells: u64, avg_game_length: u64) -> Result<f64> {
    if cells == 0 || avg_game_length == 0 || avg_game_length > cells {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= game length <= cells, got {avg_game_length} and {cells}"
        )));
    }
    let falling: BigUint = ((cells - avg_game_length + 1)..=cells)
        .map(BigUint::from)
        .product();
    Ok(log10_biguint(&falling))
}
