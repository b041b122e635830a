//! Combinatorial complexity of `N^D` k-in-a-row games such as tic-tac-toe
//! and Qubic.

mod analysis;
mod board;
mod combinatorics;
mod enumerate;

pub use analysis::analyze;
pub use board::Geometry;
pub use combinatorics::{
    binomial, ply_term, gtc_factorial, ssc_combinatorial, ssc_upper_bound, SscCount,
};
pub use enumerate::{enumerate_states, ply_entropy, PlyDistribution, ENUMERATION_CELL_LIMIT};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An `N^D` board game: `side` cells per edge, `dims` dimensions, at most
/// `max_plies` moves, `win_length` in a row to win.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridGameSpec {
    pub side: u32,
    pub dims: u32,
    pub max_plies: u32,
    pub win_length: u32,
}

impl GridGameSpec {
    pub fn new(side: u32, dims: u32, max_plies: u32, win_length: u32) -> Result<Self> {
        let spec = Self {
            side,
            dims,
            max_plies,
            win_length,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn tic_tac_toe() -> Self {
        Self {
            side: 3,
            dims: 2,
            max_plies: 9,
            win_length: 3,
        }
    }

    pub fn qubic() -> Self {
        Self {
            side: 4,
            dims: 3,
            max_plies: 64,
            win_length: 4,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.side == 0 || self.dims == 0 || self.max_plies == 0 || self.win_length == 0 {
            return Err(Error::InvalidParameter(
                "side, dims, plies and win length must all be >= 1".into(),
            ));
        }
        let cells = self.checked_cells().ok_or_else(|| {
            Error::InvalidParameter(format!("{}^{} cells overflow", self.side, self.dims))
        })?;
        if u64::from(self.max_plies) > cells {
            return Err(Error::InvalidParameter(format!(
                "max plies {} exceeds {cells} cells",
                self.max_plies
            )));
        }
        if self.win_length > self.side {
            return Err(Error::InvalidParameter(format!(
                "win length {} exceeds side {}",
                self.win_length, self.side
            )));
        }
        Ok(())
    }

    fn checked_cells(&self) -> Option<u64> {
        u64::from(self.side).checked_pow(self.dims)
    }

    /// `N^D`.
    pub fn cells(&self) -> u64 {
        self.checked_cells().expect("validated spec")
    }
}
