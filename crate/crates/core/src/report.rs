//! Uniform, serializable results with reference annotations and pairwise
//! comparison.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::measures::{Direction, MeasureResult, Provenance};
use crate::metrics::DatasetSummary;
use crate::{Error, Result, TOOL_VERSION};

/// A published value to annotate a measure with. Never alters the measure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceTarget {
    pub measure_name: String,
    pub reference_value: f64,
    pub tolerance: f64,
    pub citation: String,
}

impl ReferenceTarget {
    pub fn new(measure_name: &str, reference_value: f64, tolerance: f64, citation: &str) -> Self {
        Self {
            measure_name: measure_name.into(),
            reference_value,
            tolerance,
            citation: citation.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexityReport {
    pub domain_name: String,
    pub measures: Vec<MeasureResult>,
    #[serde(default)]
    pub reference_targets: Vec<ReferenceTarget>,
    pub tool_version: String,
    /// RFC 3339; excluded from the determinism hash.
    pub timestamp: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub summaries: Vec<DatasetSummary>,
    /// SHA-256 of the JSON report with `timestamp` and this field emptied.
    pub determinism_hash: String,
}

impl ComplexityReport {
    pub fn new(domain_name: impl Into<String>, measures: Vec<MeasureResult>) -> Self {
        let seed = measures.iter().find_map(|m| match m.provenance {
            Provenance::MonteCarlo { seed, .. } => Some(seed),
            _ => None,
        });
        Self {
            domain_name: domain_name.into(),
            measures,
            reference_targets: Vec::new(),
            tool_version: TOOL_VERSION.to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            seed,
            notes: Vec::new(),
            summaries: Vec::new(),
            determinism_hash: String::new(),
        }
    }

    /// Keeps only targets naming a measure in this report.
    pub fn with_targets(mut self, mut targets: Vec<ReferenceTarget>) -> Self {
        targets.retain(|t| self.measure(&t.measure_name).is_some());
        self.reference_targets = targets;
        self
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }

    pub fn with_summaries(mut self, summaries: Vec<DatasetSummary>) -> Self {
        self.summaries = summaries;
        self
    }

    pub fn measure(&self, name: &str) -> Option<&MeasureResult> {
        self.measures.iter().find(|m| m.measure_name == name)
    }

    pub fn compute_hash(&self) -> String {
        let mut blank = self.clone();
        blank.timestamp.clear();
        blank.determinism_hash.clear();
        let bytes = serde_json::to_vec(&blank).expect("report serializes");
        hex::encode(Sha256::digest(bytes))
    }

    /// Fills in `determinism_hash`; call after the last modification.
    pub fn seal(mut self) -> Self {
        self.determinism_hash = self.compute_hash();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// One row per measure, with any reference target alongside.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "domain",
            "measure",
            "family",
            "value",
            "direction",
            "provenance",
            "convention",
            "reference_value",
            "reference_tolerance",
        ])?;
        for m in &self.measures {
            let target = self.target(&m.measure_name);
            w.write_record([
                self.domain_name.clone(),
                m.measure_name.clone(),
                enum_name(&m.family),
                m.value.to_string(),
                enum_name(&m.direction),
                provenance_text(&m.provenance),
                m.convention.clone(),
                target.map(|t| t.reference_value.to_string()).unwrap_or_default(),
                target.map(|t| t.tolerance.to_string()).unwrap_or_default(),
            ])?;
        }
        csv_string(w)
    }

    /// One row per class of every dataset summary, shaped for boxplots.
    pub fn summaries_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "measure",
            "class",
            "count",
            "mean",
            "median",
            "q1",
            "q3",
            "whisker_low",
            "whisker_high",
            "outlier_count",
        ])?;
        for s in &self.summaries {
            for c in &s.classes {
                w.write_record([
                    s.measure_name.clone(),
                    c.class_name.clone(),
                    c.count.to_string(),
                    c.mean.to_string(),
                    c.median.to_string(),
                    c.q1.to_string(),
                    c.q3.to_string(),
                    c.whisker_low.to_string(),
                    c.whisker_high.to_string(),
                    c.outlier_count.to_string(),
                ])?;
            }
        }
        csv_string(w)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} (dcx {})", self.domain_name, self.tool_version);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed {seed}");
        }
        let width = self
            .measures
            .iter()
            .map(|m| m.measure_name.len())
            .max()
            .unwrap_or(0);
        for m in &self.measures {
            let _ = write!(out, "  {:width$}  {:>14}", m.measure_name, format_value(m.value));
            if let Some(t) = self.target(&m.measure_name) {
                let _ = write!(
                    out,
                    "  (reference {} +- {}, {})",
                    format_value(t.reference_value),
                    t.tolerance,
                    t.citation
                );
            }
            out.push('\n');
        }
        for s in &self.summaries {
            let _ = writeln!(
                out,
                "  {}: mean {:.4}, median {:.4}, median of class medians {:.4}",
                s.measure_name, s.mean, s.median, s.median_of_medians
            );
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }

    fn target(&self, name: &str) -> Option<&ReferenceTarget> {
        self.reference_targets.iter().find(|t| t.measure_name == name)
    }
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

fn enum_name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|j| j.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn provenance_text(p: &Provenance) -> String {
    match p {
        Provenance::Analytic => "analytic".into(),
        Provenance::Enumerated => "enumerated".into(),
        Provenance::MonteCarlo { seed, samples } => format!("monte_carlo(seed={seed},samples={samples})"),
    }
}

fn format_value(v: f64) -> String {
    if v != 0.0 && (v.abs() < 1e-3 || v.abs() >= 1e9) {
        format!("{v:.4e}")
    } else {
        format!("{v:.4}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    A,
    B,
    Equal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub measure_name: String,
    pub a: f64,
    pub b: f64,
    /// `b - a`.
    pub difference: f64,
    pub greater: Side,
    /// Which side is more complex; `None` when the measure has no ordering.
    pub more_complex: Option<Side>,
}

/// Compares every measure the two reports share. Conventions must match.
pub fn compare(a: &ComplexityReport, b: &ComplexityReport) -> Result<Vec<ComparisonRow>> {
    let mut rows = Vec::new();
    for ma in &a.measures {
        let Some(mb) = b.measure(&ma.measure_name) else {
            continue;
        };
        if ma.convention != mb.convention || ma.family != mb.family {
            return Err(Error::InvalidParameter(format!(
                "measure {} uses different conventions: {:?} vs {:?}",
                ma.measure_name, ma.convention, mb.convention
            )));
        }
        let greater = match ma.value.total_cmp(&mb.value) {
            std::cmp::Ordering::Less => Side::B,
            std::cmp::Ordering::Greater => Side::A,
            std::cmp::Ordering::Equal => Side::Equal,
        };
        let more_complex = match (ma.direction, greater) {
            (Direction::Unordered, _) => None,
            (_, Side::Equal) => Some(Side::Equal),
            (Direction::HigherIsMoreComplex, g) => Some(g),
            (Direction::LowerIsMoreComplex, Side::A) => Some(Side::B),
            (Direction::LowerIsMoreComplex, _) => Some(Side::A),
        };
        rows.push(ComparisonRow {
            measure_name: ma.measure_name.clone(),
            a: ma.value,
            b: mb.value,
            difference: mb.value - ma.value,
            greater,
            more_complex,
        });
    }
    if rows.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "{} and {} share no measures",
            a.domain_name, b.domain_name
        )));
    }
    Ok(rows)
}

pub fn comparison_text(a: &ComplexityReport, b: &ComplexityReport, rows: &[ComparisonRow]) -> String {
    let mut out = format!("A = {}, B = {}\n", a.domain_name, b.domain_name);
    let width = rows.iter().map(|r| r.measure_name.len()).max().unwrap_or(0);
    for r in rows {
        let verdict = match r.more_complex {
            Some(Side::A) => "A more complex",
            Some(Side::B) => "B more complex",
            Some(Side::Equal) => "equal",
            None => "unordered",
        };
        let _ = writeln!(
            out,
            "  {:width$}  {:>12}  {:>12}  {:>12}  {verdict}",
            r.measure_name,
            format_value(r.a),
            format_value(r.b),
            format_value(r.difference)
        );
    }
    out
}

pub fn comparison_csv(rows: &[ComparisonRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["measure", "a", "b", "difference", "greater", "more_complex"])?;
    for r in rows {
        w.write_record([
            r.measure_name.clone(),
            r.a.to_string(),
            r.b.to_string(),
            r.difference.to_string(),
            enum_name(&r.greater),
            r.more_complex.map(|s| enum_name(&s)).unwrap_or_default(),
        ])?;
    }
    csv_string(w)
}
