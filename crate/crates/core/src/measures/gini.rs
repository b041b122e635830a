use std::ops::Deref;

use crate::{Error, Result};

/// Non-empty sequence of finite, non-negative magnitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueArray(Vec<f64>);

impl ValueArray {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::DegenerateInput("value array is empty".into()));
        }
        check_non_negative(&values)?;
        Ok(Self(values))
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for ValueArray {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

fn check_non_negative(values: &[f64]) -> Result<()> {
    match values.iter().position(|v| !v.is_finite() || *v < 0.0) {
        Some(i) => Err(Error::InvalidValue(format!(
            "element {i} is {} (must be finite and >= 0)",
            values[i]
        ))),
        None => Ok(()),
    }
}

/// Gini index of a non-negative vector.
///
/// With `c` sorted ascending, `N = len(c)` and `s = sum(c)`:
///
/// ```text
/// G = 1 - 2 * sum_k (c_k / s) * ((N - k + 1/2) / N),   k = 1..N
/// ```
///
/// The result lies in `[0, 1 - 1/N]`: zero for a constant vector and
/// `1 - 1/N` when a single element carries all the mass.
pub fn gini(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::DegenerateInput("gini of an empty array".into()));
    }
    check_non_negative(values)?;
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let l1: f64 = sorted.iter().sum();
    if l1 <= 0.0 {
        return Err(Error::DegenerateInput("gini of an all-zero array".into()));
    }
    let n = sorted.len() as f64;
    let weighted: f64 = sorted
        .iter()
        .enumerate()
        .map(|(i, c)| (c / l1) * ((n - (i + 1) as f64 + 0.5) / n))
        .sum();
    // rounding can push a constant vector a hair below zero
    Ok((1.0 - 2.0 * weighted).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn uniform_is_zero() {
        assert_abs_diff_eq!(gini(&[1.0, 1.0, 1.0, 1.0]).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn single_spike() {
        assert_abs_diff_eq!(gini(&[0.0, 0.0, 0.0, 1.0]).unwrap(), 0.75, epsilon = 1e-15);
        let mut v = vec![0.0; 1024];
        v[17] = 255.0;
        assert_abs_diff_eq!(gini(&v).unwrap(), 1.0 - 1.0 / 1024.0, epsilon = 1e-12);
    }

    #[test]
    fn error_paths() {
        assert!(matches!(gini(&[0.0, 0.0]), Err(Error::DegenerateInput(_))));
        assert!(matches!(gini(&[]), Err(Error::DegenerateInput(_))));
        assert!(matches!(gini(&[1.0, -0.5]), Err(Error::InvalidValue(_))));
        assert!(matches!(gini(&[1.0, f64::NAN]), Err(Error::InvalidValue(_))));
        assert!(ValueArray::new(vec![]).is_err());
        assert!(ValueArray::new(vec![-1.0]).is_err());
    }

    #[test]
    fn tie_order_does_not_matter() {
        let a = gini(&[3.0, 1.0, 3.0, 0.0, 1.0]).unwrap();
        let b = gini(&[1.0, 3.0, 0.0, 1.0, 3.0]).unwrap();
        assert_eq!(a, b);
    }
}
