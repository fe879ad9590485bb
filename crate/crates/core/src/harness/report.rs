use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::graph6;
use crate::steiner::PackingResult;

/// Witness lists are cut off after this many entries.
pub const WITNESS_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Counterexample,
    Example,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terminals: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trees: Option<Vec<Vec<(usize, usize)>>>,
    pub note: String,
}

impl Witness {
    pub fn counterexample(g: Option<&Graph>, note: impl Into<String>) -> Witness {
        Witness {
            kind: WitnessKind::Counterexample,
            graph6: g.map(graph6::encode),
            terminals: None,
            trees: None,
            note: note.into(),
        }
    }

    pub fn example(g: &Graph, note: impl Into<String>) -> Witness {
        Witness {
            kind: WitnessKind::Example,
            graph6: Some(graph6::encode(g)),
            terminals: None,
            trees: None,
            note: note.into(),
        }
    }

    pub fn with_packing(mut self, r: &PackingResult) -> Witness {
        self.terminals = Some(r.packing.terminals.vertices());
        self.trees = Some(r.packing.trees.iter().map(|t| t.edges.clone()).collect());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub universe: String,
    pub outcome: Outcome,
    pub scanned: usize,
    pub satisfied: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_value: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub members: Vec<String>,
    /// Further named tallies specific to the claim.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub counts: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<Witness>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(claim_id: impl Into<String>, universe: impl Into<String>) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            universe: universe.into(),
            outcome: Outcome::Pass,
            scanned: 0,
            satisfied: 0,
            f_value: None,
            members: Vec::new(),
            counts: BTreeMap::new(),
            witnesses: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failures(&self) -> usize {
        self.witnesses
            .iter()
            .filter(|w| w.kind == WitnessKind::Counterexample)
            .count()
    }

    /// Record a failure; the report fails even when the witness list is full.
    pub fn fail(&mut self, w: Witness) {
        self.outcome = Outcome::Fail;
        if self.failures() < WITNESS_LIMIT {
            self.witnesses.push(w);
        }
    }

    pub fn note(&mut self, w: Witness) {
        let examples = self.witnesses.len() - self.failures();
        if examples < WITNESS_LIMIT {
            self.witnesses.push(w);
        }
    }

    pub fn count(&mut self, name: &str, value: usize) {
        self.counts.insert(name.to_string(), value);
    }

    /// The report as JSON, optionally without the timing field so that
    /// repeated runs print identical bytes.
    pub fn to_json(&self, with_timing: bool) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serialises");
        if !with_timing {
            v.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    }
}
