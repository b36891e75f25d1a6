//! Uniform result record for executable theorem checks.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Residual {
    pub value: f64,
    pub tolerance: f64,
}

impl Residual {
    pub fn ok(&self) -> bool {
        self.value.is_finite() && self.value <= self.tolerance
    }
}

/// Outcome of one theorem check.
///
/// `pass` implies the hypothesis held, every residual is within tolerance and
/// every named boolean check is true. A report whose hypothesis failed makes
/// no claim and is never counted as a failure.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub inputs: Vec<String>,
    pub hypothesis_check: bool,
    pub predicted: BTreeMap<String, Value>,
    pub computed: BTreeMap<String, Value>,
    pub residuals: BTreeMap<String, Residual>,
    pub checks: BTreeMap<String, bool>,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl TheoremReport {
    pub fn new(theorem_id: &str, inputs: Vec<String>) -> Self {
        TheoremReport {
            theorem_id: theorem_id.to_string(),
            inputs,
            hypothesis_check: true,
            predicted: BTreeMap::new(),
            computed: BTreeMap::new(),
            residuals: BTreeMap::new(),
            checks: BTreeMap::new(),
            notes: Vec::new(),
            pass: false,
        }
    }

    /// Records one hypothesis condition; any false condition makes the report
    /// inapplicable.
    pub fn hypothesis(&mut self, name: &str, holds: bool) -> bool {
        self.computed
            .insert(format!("hypothesis.{name}"), Value::Bool(holds));
        self.hypothesis_check &= holds;
        holds
    }

    pub fn predicted(&mut self, key: impl Into<String>, value: impl Serialize) {
        self.predicted.insert(key.into(), to_value(value));
    }

    pub fn computed(&mut self, key: impl Into<String>, value: impl Serialize) {
        self.computed.insert(key.into(), to_value(value));
    }

    pub fn residual(&mut self, key: impl Into<String>, value: f64, tolerance: f64) -> bool {
        let r = Residual { value, tolerance };
        self.residuals.insert(key.into(), r);
        r.ok()
    }

    pub fn check(&mut self, key: impl Into<String>, holds: bool) -> bool {
        self.checks.insert(key.into(), holds);
        holds
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Predicted and computed spectra side by side plus a deviation residual.
    /// Multiplicity mismatch turns the residual infinite.
    pub fn compare_spectra(
        &mut self,
        key: &str,
        predicted: &Spectrum,
        computed: &Spectrum,
        tol: f64,
    ) -> bool {
        self.predicted(key, predicted.to_string());
        self.computed(key, computed.to_string());
        let dev = if predicted.approx_eq(computed, tol) {
            predicted.max_deviation(computed).unwrap_or(0.0)
        } else {
            f64::INFINITY
        };
        self.residual(key, dev, tol)
    }

    pub fn finish(mut self) -> Self {
        self.pass = self.hypothesis_check
            && self.residuals.values().all(Residual::ok)
            && self.checks.values().all(|&c| c);
        self
    }

    /// The hypothesis held but the conclusion did not.
    pub fn is_discrepancy(&self) -> bool {
        self.hypothesis_check && !self.pass
    }

    /// Names of failed residuals and checks.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .residuals
            .iter()
            .filter(|(_, r)| !r.ok())
            .map(|(k, r)| format!("{k}: {:e} > {:e}", r.value, r.tolerance))
            .collect();
        out.extend(
            self.checks
                .iter()
                .filter(|(_, &c)| !c)
                .map(|(k, _)| k.clone()),
        );
        out
    }
}

fn to_value(value: impl Serialize) -> Value {
    match serde_json::to_value(value) {
        Ok(Value::Number(n)) if n.as_f64().is_some_and(|f| !f.is_finite()) => Value::Null,
        Ok(v) => v,
        Err(e) => Value::String(format!("<unserializable: {e}>")),
    }
}
