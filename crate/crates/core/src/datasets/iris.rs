use super::{TabularDataset, TabularRow};
use crate::{Error, Result};

pub const IRIS_FEATURES: [&str; 4] = ["sepal_length", "sepal_width", "petal_length", "petal_width"];
pub const IRIS_CLASSES: [&str; 3] = ["setosa", "versicolor", "virginica"];

const BUNDLED: &str = include_str!("../../data/iris.csv");

fn class_index(label: &str) -> Option<usize> {
    let lower = label.trim().to_ascii_lowercase();
    let name = lower.strip_prefix("iris-").unwrap_or(&lower);
    match name {
        "setosa" => Some(0),
        "versicolor" | "versicolour" => Some(1),
        "virginica" => Some(2),
        _ => None,
    }
}

/// Parses headerless Iris rows: four measurements then a class label.
/// Blank lines are skipped.
pub fn parse_iris_csv(text: &str) -> Result<TabularDataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        if record.len() != 5 {
            return Err(Error::FormatError(format!(
                "row {} has {} fields, expected 5",
                i + 1,
                record.len()
            )));
        }
        let features = (0..4)
            .map(|k| {
                record[k].parse::<f64>().map_err(|_| {
                    Error::FormatError(format!("row {}: bad number {:?}", i + 1, &record[k]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let class = class_index(&record[4]).ok_or_else(|| {
            Error::FormatError(format!("row {}: unknown class {:?}", i + 1, &record[4]))
        })?;
        rows.push(TabularRow { features, class });
    }
    if rows.is_empty() {
        return Err(Error::FormatError("no Iris rows".into()));
    }
    Ok(TabularDataset {
        rows,
        feature_names: IRIS_FEATURES.iter().map(|s| s.to_string()).collect(),
        class_names: IRIS_CLASSES.iter().map(|s| s.to_string()).collect(),
    })
}

/// The 150-row Iris table shipped with the crate.
pub fn bundled_iris() -> TabularDataset {
    parse_iris_csv(BUNDLED).expect("bundled iris parses")
}
