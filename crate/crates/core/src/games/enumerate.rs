use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Geometry, GridGameSpec};
use crate::measures::{normalized_entropy, MeasureFamily, MeasureResult, ProbDist, Provenance};
use crate::{Error, Result};

/// Largest board (in cells) the exhaustive enumerator accepts.
pub const ENUMERATION_CELL_LIMIT: u64 = 16;

const EMPTY: u32 = 0;
const FIRST: u32 = 1;
const SECOND: u32 = 2;

/// Number of distinct positions at each ply, starting from the empty board.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlyDistribution {
    pub counts_per_ply: Vec<u64>,
    pub symmetry_reduced: bool,
}

impl PlyDistribution {
    pub fn total(&self) -> u64 {
        self.counts_per_ply.iter().sum()
    }
}

/// Positions pack two bits per cell with cell 0 in the highest pair, so
/// integer order is lexicographic order of the board string.
#[derive(Debug, Clone, Copy)]
struct Packing {
    cells: usize,
}

impl Packing {
    fn shift(self, cell: usize) -> u32 {
        2 * (self.cells - 1 - cell) as u32
    }

    fn get(self, board: u32, cell: usize) -> u32 {
        board >> self.shift(cell) & 0b11
    }

    fn set(self, board: u32, cell: usize, mark: u32) -> u32 {
        board | mark << self.shift(cell)
    }
}

fn has_winner(board: u32, packing: Packing, geometry: &Geometry) -> bool {
    geometry.lines.iter().any(|line| {
        let first = packing.get(board, line[0]);
        first != EMPTY && line[1..].iter().all(|&c| packing.get(board, c) == first)
    })
}

fn transform(board: u32, packing: Packing, map: &[usize]) -> u32 {
    (0..packing.cells).fold(0, |acc, cell| {
        packing.set(acc, map[cell], packing.get(board, cell))
    })
}

/// Lexicographically smallest image of `board` under the symmetry group.
fn canonical(board: u32, packing: Packing, geometry: &Geometry) -> u32 {
    geometry
        .symmetries
        .iter()
        .map(|map| transform(board, packing, map))
        .min()
        .unwrap_or(board)
}

/// Breadth-first enumeration of every position reachable under legal
/// alternation, counted per ply.
///
/// Positions with a completed line are terminal. With `symmetry` set, each
/// position is replaced by its canonical representative before
/// deduplication. Frontier expansion runs in parallel; each level is sorted
/// and deduplicated, so the result does not depend on the thread count.
pub fn enumerate_states(spec: &GridGameSpec, symmetry: bool) -> Result<PlyDistribution> {
    spec.validate()?;
    let cells = spec.cells();
    if cells > ENUMERATION_CELL_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "{cells} cells exceeds the enumeration limit of {ENUMERATION_CELL_LIMIT}"
        )));
    }
    let geometry = Geometry::new(
        spec.side as usize,
        spec.dims as usize,
        spec.win_length as usize,
    );
    let packing = Packing {
        cells: cells as usize,
    };
    let key = |b: u32| {
        if symmetry {
            canonical(b, packing, &geometry)
        } else {
            b
        }
    };

    let mut frontier = vec![0u32];
    let mut counts = vec![1u64];
    for ply in 0..spec.max_plies {
        let mark = if ply % 2 == 0 { FIRST } else { SECOND };
        let mut next: Vec<u32> = frontier
            .par_iter()
            .filter(|&&b| !has_winner(b, packing, &geometry))
            .flat_map_iter(|&b| {
                (0..packing.cells)
                    .filter(move |&c| packing.get(b, c) == EMPTY)
                    .map(move |c| key(packing.set(b, c, mark)))
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        counts.push(next.len() as u64);
        frontier = next;
    }
    Ok(PlyDistribution {
        counts_per_ply: counts,
        symmetry_reduced: symmetry,
    })
}

/// Normalized entropy of the per-ply position counts, with one event per
/// ply (including empty plies).
pub fn ply_entropy(dist: &PlyDistribution) -> Result<MeasureResult> {
    let occupied = dist.counts_per_ply.iter().filter(|c| **c > 0).count();
    if occupied < 2 {
        return Err(Error::DegenerateInput(
            "ply entropy needs at least two plies with positions".into(),
        ));
    }
    let probs = ProbDist::from_counts(&dist.counts_per_ply)?;
    let event_count = dist.counts_per_ply.len();
    let value = normalized_entropy(&probs, event_count)?;
    let convention = format!(
        "p_i = positions at ply i / all positions; event_count = {event_count} plies; \
         symmetry_reduced = {}",
        dist.symmetry_reduced
    );
    Ok(MeasureResult::new(
        "ply_entropy",
        MeasureFamily::Diversity,
        value,
        convention,
        Provenance::Enumerated,
    ))
}
