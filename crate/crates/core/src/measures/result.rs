use serde::{Deserialize, Serialize};

/// Which of the three measure families a result belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureFamily {
    Dimensionality,
    Sparsity,
    Diversity,
}

/// How a larger value relates to domain complexity, used by report comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    #[default]
    HigherIsMoreComplex,
    LowerIsMoreComplex,
    /// No monotone reading (e.g. normalized entropy).
    Unordered,
}

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Analytic,
    Enumerated,
    MonteCarlo { seed: u64, samples: u64 },
}

/// A single measured value together with every parameter that shaped it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureResult {
    pub measure_name: String,
    pub family: MeasureFamily,
    pub value: f64,
    /// Implementer-chosen parameters: bins, normalization, thresholds.
    pub convention: String,
    pub provenance: Provenance,
    #[serde(default)]
    pub direction: Direction,
}

impl MeasureResult {
    pub fn new(
        measure_name: impl Into<String>,
        family: MeasureFamily,
        value: f64,
        convention: impl Into<String>,
        provenance: Provenance,
    ) -> Self {
        let direction = match family {
            MeasureFamily::Diversity => Direction::Unordered,
            _ => Direction::HigherIsMoreComplex,
        };
        Self {
            measure_name: measure_name.into(),
            family,
            value,
            convention: convention.into(),
            provenance,
            direction,
        }
    }

    pub fn with_direction(mut self, direction: Direction) -> Self {
        self.direction = direction;
        self
    }
}
