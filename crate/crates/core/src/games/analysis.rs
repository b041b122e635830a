use super::{
    enumerate_states, gtc_factorial, ply_entropy, ssc_combinatorial, ssc_upper_bound,
    GridGameSpec, ENUMERATION_CELL_LIMIT,
};
use crate::measures::{MeasureFamily, MeasureResult, Provenance};
use crate::Result;

/// Every game measure for `spec`. Enumeration-based measures are added when
/// `enumerate` is set and the board is within [`ENUMERATION_CELL_LIMIT`].
pub fn analyze(spec: &GridGameSpec, avg_game_length: u64, enumerate: bool) -> Result<Vec<MeasureResult>> {
    spec.validate()?;
    let cells = spec.cells();
    let ssc = ssc_combinatorial(spec);
    let mut out = vec![
        MeasureResult::new(
            "state_space_upper_bound",
            MeasureFamily::Dimensionality,
            ssc_upper_bound(spec),
            "log10(3^cells)",
            Provenance::Analytic,
        ),
        MeasureResult::new(
            "state_space_complexity",
            MeasureFamily::Dimensionality,
            ssc.log10,
            "log10 sum over plies i=1..P of C(cells, ceil(i/2)) C(cells - ceil(i/2), floor(i/2))",
            Provenance::Analytic,
        ),
        MeasureResult::new(
            "game_tree_complexity",
            MeasureFamily::Dimensionality,
            gtc_factorial(cells, avg_game_length)?,
            "log10(cells! / (cells - average game length)!)",
            Provenance::Analytic,
        ),
    ];
    if enumerate && cells <= ENUMERATION_CELL_LIMIT {
        let raw = enumerate_states(spec, false)?;
        let reduced = enumerate_states(spec, true)?;
        out.push(MeasureResult::new(
            "legal_positions",
            MeasureFamily::Dimensionality,
            raw.total() as f64,
            "reachable positions, play stops at a win",
            Provenance::Enumerated,
        ));
        out.push(MeasureResult::new(
            "symmetry_classes",
            MeasureFamily::Dimensionality,
            reduced.total() as f64,
            "reachable positions up to board symmetry",
            Provenance::Enumerated,
        ));
        if let Ok(m) = ply_entropy(&reduced) {
            out.push(m);
        }
    }
    Ok(out)
}
