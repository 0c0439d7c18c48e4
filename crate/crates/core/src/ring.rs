use std::collections::BTreeSet;
use std::sync::Arc;

use crate::{Error, Result};

/// A polynomial ring over the rationals: an ordered list of variable
/// names together with positive integer weights defining the grading.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    weights: Vec<u32>,
}

impl PolyRing {
    pub fn new<S: Into<String>>(vars: Vec<S>, weights: Vec<u32>) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.len() != weights.len() {
            return Err(Error::Invalid(format!(
                "{} variables but {} weights",
                vars.len(),
                weights.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for v in &vars {
            if v.is_empty() {
                return Err(Error::Invalid("empty variable name".into()));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::Invalid(format!("duplicate variable {v}")));
            }
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::Invalid("weights must be positive".into()));
        }
        Ok(Arc::new(PolyRing { vars, weights }))
    }

    /// Ring with all weights 1.
    pub fn standard<S: Into<String>>(vars: Vec<S>) -> Arc<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let n = vars.len();
        PolyRing::new(vars, vec![1; n]).expect("standard ring construction")
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same ring up to content (names and weights).
    pub fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}
