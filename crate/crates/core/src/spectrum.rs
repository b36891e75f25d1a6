use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

/// Multiset of real eigenvalues, grouped into `(value, multiplicity)` pairs
/// sorted by descending value.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<(f64, usize)>,
    tolerance: f64,
}

/// Relative grouping tolerance: values closer than
/// `GROUPING_RELATIVE * max(1, spectral radius)` are merged.
pub const GROUPING_RELATIVE: f64 = 1e-8;

impl Spectrum {
    /// Groups raw eigenvalues with the default relative tolerance.
    pub fn from_values(values: &[f64]) -> Self {
        let radius = values.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        Self::with_tolerance(values, GROUPING_RELATIVE * radius.max(1.0))
    }

    /// Groups raw eigenvalues: a value joins the current group when it lies
    /// within `tolerance` of the group's smallest member.
    pub fn with_tolerance(values: &[f64], tolerance: f64) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(|a, b| b.total_cmp(a));
        let mut entries: Vec<(f64, usize)> = Vec::new();
        let mut group: Vec<f64> = Vec::new();
        for x in sorted {
            if let Some(&last) = group.last() {
                if last - x > tolerance {
                    entries.push(close_group(&group));
                    group.clear();
                }
            }
            group.push(x);
        }
        if !group.is_empty() {
            entries.push(close_group(&group));
        }
        Spectrum { entries, tolerance }
    }

    /// Builds a spectrum from already-grouped values (e.g. exact roots with
    /// known multiplicities). Entries are re-sorted and adjacent equal values merged.
    pub fn from_grouped(mut entries: Vec<(f64, usize)>, tolerance: f64) -> Self {
        entries.retain(|&(_, m)| m > 0);
        entries.sort_by(|a, b| b.0.total_cmp(&a.0));
        let mut merged: Vec<(f64, usize)> = Vec::with_capacity(entries.len());
        for (v, m) in entries {
            match merged.last_mut() {
                Some(last) if (last.0 - v).abs() <= tolerance => {
                    last.0 = (last.0 * last.1 as f64 + v * m as f64) / (last.1 + m) as f64;
                    last.1 += m;
                }
                _ => merged.push((v, m)),
            }
        }
        Spectrum {
            entries: merged,
            tolerance,
        }
    }

    pub fn entries(&self) -> &[(f64, usize)] {
        &self.entries
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Number of eigenvalues counted with multiplicity.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Values with repetition, descending.
    pub fn expanded(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }

    pub fn max(&self) -> Option<f64> {
        self.entries.first().map(|e| e.0)
    }

    pub fn min(&self) -> Option<f64> {
        self.entries.last().map(|e| e.0)
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.1).collect()
    }

    /// Total multiplicity of values within `tol` of `x`.
    pub fn multiplicity_near(&self, x: f64, tol: f64) -> usize {
        self.entries
            .iter()
            .filter(|e| (e.0 - x).abs() <= tol)
            .map(|e| e.1)
            .sum()
    }

    /// Largest elementwise gap between the expanded value lists, or `None`
    /// when the lengths differ.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        let (a, b) = (self.expanded(), other.expanded());
        if a.len() != b.len() {
            return None;
        }
        Some(
            a.iter()
                .zip(&b)
                .fold(0.0f64, |m, (x, y)| m.max((x - y).abs())),
        )
    }

    /// Same multiplicity pattern and every value within `tol`.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.multiplicities() == other.multiplicities()
            && self.max_deviation(other).is_some_and(|d| d <= tol)
    }

    /// Adds `shift` to every value.
    pub fn shifted(&self, shift: f64) -> Spectrum {
        Spectrum {
            entries: self.entries.iter().map(|&(v, m)| (v + shift, m)).collect(),
            tolerance: self.tolerance,
        }
    }

    /// Multiset union, regrouped at the larger of the two tolerances.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Spectrum::from_grouped(entries, self.tolerance.max(other.tolerance))
    }
}

fn close_group(group: &[f64]) -> (f64, usize) {
    let mean = group.iter().sum::<f64>() / group.len() as f64;
    (mean, group.len())
}

/// Formats a value as an integer when it is within `1e-9` of one, otherwise
/// with four decimals.
pub fn format_value(v: f64) -> String {
    let r = v.round();
    if (v - r).abs() < 1e-9 {
        format!("{}", r as i64)
    } else {
        format!("{v:.4}")
    }
}

impl fmt::Display for Spectrum {
    /// `8 4^3 2^2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|&(v, m)| {
                if m == 1 {
                    format_value(v)
                } else {
                    format!("{}^{m}", format_value(v))
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for Spectrum {
    /// `[[value, multiplicity], ...]`
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for &(v, m) in &self.entries {
            seq.serialize_element(&(v, m))?;
        }
        seq.end()
    }
}
