use serde::Serialize;

use crate::graph::io::encode_graph6;
use crate::graph::{marked_certificate, Certificate, Graph};
use crate::numeric::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params {
            n: Some(n),
            ..Default::default()
        }
    }

    pub fn nl(n: usize, l: usize) -> Self {
        Params {
            n: Some(n),
            l: Some(l),
            ..Default::default()
        }
    }

    pub fn n_max(n_max: usize) -> Self {
        Params {
            n_max: Some(n_max),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub other_vertex: Option<usize>,
    pub quantity: String,
    pub expected: Rational,
    pub actual: Rational,
}

impl Counterexample {
    pub fn new(
        g: &Graph,
        quantity: impl Into<String>,
        expected: Rational,
        actual: Rational,
    ) -> Self {
        Counterexample {
            n: g.n(),
            edges: g.edges().to_vec(),
            vertex: None,
            other_vertex: None,
            quantity: quantity.into(),
            expected,
            actual,
        }
    }

    pub fn at(mut self, x: usize) -> Self {
        self.vertex = Some(x);
        self
    }

    pub fn pair(mut self, x: usize, y: usize) -> Self {
        self.vertex = Some(x);
        self.other_vertex = Some(y);
        self
    }
}

/// One extremal (graph, vertex) witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalRecord {
    pub label: String,
    pub value: Rational,
    /// Certificate of the graph with the witness vertex marked.
    pub certificate: Certificate,
    pub graph6: String,
    pub vertex: usize,
}

impl ExtremalRecord {
    pub fn new(label: impl Into<String>, value: Rational, g: &Graph, vertex: usize) -> Self {
        ExtremalRecord {
            label: label.into(),
            value,
            certificate: marked_certificate(g, vertex).expect("witness graphs are small"),
            graph6: encode_graph6(g),
            vertex,
        }
    }
}

/// Stated lower bound `f1(n)` against computed data for one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F1Row {
    pub n: usize,
    pub stated_f1: Rational,
    /// `CC` on the cycle `C_n`.
    pub cycle_cover_cost: Rational,
    /// Smallest pendant-vertex `CC` over `S_n^l`, `3 <= l <= n - 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pendant_family_min: Option<Rational>,
    pub pendant_family_argmin: Vec<usize>,
    /// Minimum over every unicyclic graph, when enumerated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive_min: Option<Rational>,
    /// Smallest value actually observed among the computed candidates.
    pub observed_min: Rational,
    pub stated_matches_observed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub params: Params,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremal_records: Option<Vec<ExtremalRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f1_comparison: Option<Vec<F1Row>>,
    pub graphs_checked: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(check_name: impl Into<String>, params: Params) -> Self {
        VerificationReport {
            check_name: check_name.into(),
            params,
            status: Status::Pass,
            counterexample: None,
            extremal_records: None,
            f1_comparison: None,
            graphs_checked: 0,
            notes: Vec::new(),
        }
    }

    pub fn not_applicable(
        check_name: impl Into<String>,
        params: Params,
        why: impl Into<String>,
    ) -> Self {
        let mut r = Self::new(check_name, params);
        r.status = Status::NotApplicable;
        r.notes.push(why.into());
        r
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Marks the report failed, keeping the first counterexample.
    pub fn fail(&mut self, counterexample: Counterexample) {
        self.status = Status::Fail;
        if self.counterexample.is_none() {
            self.counterexample = Some(counterexample);
        }
    }

    /// Compares exact values; records a failure on mismatch.
    pub fn expect_eq(
        &mut self,
        expected: &Rational,
        actual: &Rational,
        ce: impl FnOnce() -> Counterexample,
    ) -> bool {
        if expected == actual {
            true
        } else {
            self.fail(ce());
            false
        }
    }

    /// Folds a sub-report: failures propagate with their counterexample.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.graphs_checked += other.graphs_checked;
        if other.status == Status::Fail {
            self.status = Status::Fail;
            if self.counterexample.is_none() {
                self.counterexample = other.counterexample;
            }
            self.notes.push(format!("{} failed", other.check_name));
        }
        self.notes.extend(other.notes);
    }

    pub fn add_records(&mut self, mut records: Vec<ExtremalRecord>) {
        let list = self.extremal_records.get_or_insert_with(Vec::new);
        list.append(&mut records);
        list.sort_by(|a, b| {
            (&a.value, &a.label, &a.certificate).cmp(&(&b.value, &b.label, &b.certificate))
        });
    }
}
