//! Report schema and writers.
//!
//! JSON is the canonical format and must be byte-identical across repeated
//! runs of the same config: struct field order is fixed, histograms use
//! ordered maps, and no timestamps or timings appear anywhere in the payload
//! (wall-clock timing goes to stderr). CSV flattens nested fields with dotted
//! headers for spreadsheet use.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::HarnessError;

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub mode: String,
    pub max_order: Option<usize>,
    pub group_files: Vec<String>,
    pub rings: Vec<String>,
    pub include_trivial_sigma: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WitnessOut {
    pub left_index: usize,
    pub right_index: usize,
    pub left: String,
    pub right: String,
    pub product: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RingConditionsOut {
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LemmaOut {
    pub id: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// One evaluated (group, ring, involution, orientation) instance.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InstanceRecord {
    pub group: String,
    pub ring: String,
    pub involution: Vec<usize>,
    pub orientation: Vec<usize>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicate: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gp14: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring_conditions: Option<RingConditionsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub placement_sensitive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemmas: Option<Vec<LemmaOut>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub evaluated: usize,
    pub rejected_char_two: usize,
    pub trivial_sigma: usize,
    pub holds: usize,
    pub mismatches: usize,
    pub lemma_failures: usize,
    pub structure_histogram: BTreeMap<String, usize>,
    pub gp14_histogram: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: ConfigEcho,
    pub records: Vec<InstanceRecord>,
    pub summary: Summary,
}

pub fn write_json(report: &Report, mut out: impl Write) -> Result<(), HarnessError> {
    let text = serde_json::to_string_pretty(report).expect("report serializes");
    out.write_all(text.as_bytes()).map_err(|source| HarnessError::Io {
        path: "<output>".into(),
        source,
    })?;
    out.write_all(b"\n").map_err(|source| HarnessError::Io {
        path: "<output>".into(),
        source,
    })
}

fn join_usize(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt_bool(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}

pub fn write_csv(report: &Report, out: impl Write) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    let headers = [
        "group",
        "ring",
        "involution",
        "orientation",
        "status",
        "verdict",
        "predicate",
        "agreement",
        "structure",
        "s",
        "t",
        "gp14",
        "ring_conditions.ii",
        "ring_conditions.iii",
        "ring_conditions.iv",
        "placement_sensitive",
        "witness.left",
        "witness.right",
        "witness.product",
        "lemmas",
    ];
    let io_err = |e: csv::Error| HarnessError::BadFile {
        path: "<output>".into(),
        message: e.to_string(),
    };
    w.write_record(headers).map_err(io_err)?;
    for r in &report.records {
        let lemmas = r
            .lemmas
            .as_ref()
            .map(|ls| {
                ls.iter()
                    .map(|l| format!("{}:{}", l.id, if l.holds { "ok" } else { "FAIL" }))
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default();
        let record = [
            r.group.clone(),
            r.ring.clone(),
            join_usize(&r.involution),
            join_usize(&r.orientation),
            r.status.clone(),
            opt_bool(r.verdict),
            opt_bool(r.predicate),
            opt_bool(r.agreement),
            r.structure.clone().unwrap_or_default(),
            r.s.clone().unwrap_or_default(),
            r.t.clone().unwrap_or_default(),
            r.gp14.clone().unwrap_or_default(),
            opt_bool(r.ring_conditions.as_ref().map(|c| c.ii)),
            opt_bool(r.ring_conditions.as_ref().map(|c| c.iii)),
            opt_bool(r.ring_conditions.as_ref().map(|c| c.iv)),
            opt_bool(r.placement_sensitive),
            r.witness.as_ref().map(|w| w.left.clone()).unwrap_or_default(),
            r.witness.as_ref().map(|w| w.right.clone()).unwrap_or_default(),
            r.witness
                .as_ref()
                .map(|w| w.product.clone())
                .unwrap_or_default(),
            lemmas,
        ];
        w.write_record(&record).map_err(io_err)?;
    }
    w.flush().map_err(|source| HarnessError::Io {
        path: "<output>".into(),
        source,
    })
}
