//! Machine-readable outcomes for lemma/theorem checks.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

/// A concrete witness attached to a report: for `Fail` the offending
/// graph, for `Pass` typically the extremal or tightness instance.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub label: String,
    /// Edge-list serialization of the witness graph, when one applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, serde_json::Value>,
}

impl Witness {
    pub fn new(label: impl Into<String>) -> Self {
        Witness {
            label: label.into(),
            graph: None,
            data: BTreeMap::new(),
        }
    }

    pub fn with_graph(mut self, g: &crate::graph::Graph) -> Self {
        self.graph = Some(g.to_edge_list());
        self
    }

    pub fn with_value(mut self, key: impl Into<String>, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).expect("witness values are plain data");
        self.data.insert(key.into(), v);
        self
    }
}

/// Outcome of one claim check. A `Fail` always carries at least one
/// witness; construct it through [`VerificationReport::fail`].
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub scope: BTreeMap<String, String>,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub margins: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
}

impl VerificationReport {
    pub fn pass(claim: impl Into<String>) -> Self {
        Self::new(claim, Outcome::Pass)
    }

    pub fn fail(claim: impl Into<String>, counterexample: Witness) -> Self {
        let mut r = Self::new(claim, Outcome::Fail);
        r.witnesses.push(counterexample);
        r
    }

    pub fn inconclusive(claim: impl Into<String>) -> Self {
        Self::new(claim, Outcome::Inconclusive)
    }

    fn new(claim: impl Into<String>, outcome: Outcome) -> Self {
        VerificationReport {
            claim: claim.into(),
            scope: BTreeMap::new(),
            outcome,
            witnesses: Vec::new(),
            margins: BTreeMap::new(),
            seed: None,
            trials: None,
        }
    }

    pub fn with_scope(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.scope.insert(key.into(), value.to_string());
        self
    }

    pub fn with_margin(mut self, key: impl Into<String>, value: f64) -> Self {
        self.margins.insert(key.into(), value);
        self
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witnesses.push(w);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = Some(trials);
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports are plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_reports_carry_a_witness() {
        let g = crate::graph::Graph::complete(3);
        let r = VerificationReport::fail("demo", Witness::new("cex").with_graph(&g));
        assert_eq!(r.outcome, Outcome::Fail);
        assert!(!r.witnesses.is_empty());
        let json = r.to_json();
        assert!(json.contains("\"outcome\":\"fail\""));
        assert!(json.contains("p 3"));
    }
}
