//! Instance enumeration and evaluation.
//!
//! The instance space is the full cross product: every catalog/file group,
//! every ring token, every involution, every compatible nontrivial
//! orientation. No sampling. Records carry a stable enumeration index so
//! parallel evaluation aggregates in exactly the serial order.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Duration;

use serde::Deserialize;

use sigmastar_core::{
    builtin_catalog, check_anticommutative, check_lemma_suite, enumerate_involutions,
    enumerate_orientations, is_compatible, parse_ring_token, symmetric_generators, theorem_predicate,
    FiniteRing, Group, GroupInvolution, Orientation,
};

use crate::report::{
    InstanceRecord, LemmaOut, Report, RingConditionsOut, Summary, WitnessOut,
};
use crate::HarnessError;

pub const DEFAULT_MAX_ORDER: usize = 16;
pub const HARD_CAP_ORDER: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Verify,
    Classify,
    Lemmas,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Verify => "verify",
            Mode::Classify => "classify",
            Mode::Lemmas => "lemmas",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Catalog source: include all built-in groups up to this order.
    pub max_order: Option<usize>,
    /// Additional Cayley-table files.
    pub group_files: Vec<PathBuf>,
    /// Ring tokens (`z4`, `dual-z4`, ...) or paths to ring table files.
    pub rings: Vec<String>,
    pub mode: Mode,
    pub format: ReportFormat,
    /// Worker threads; 0 means one per core.
    pub jobs: usize,
    pub include_trivial_sigma: bool,
    /// Lifts the default order cap of 16 on table files to 32.
    pub allow_order_32: bool,
}

impl SweepConfig {
    pub fn verify(max_order: usize, rings: &[&str]) -> Self {
        SweepConfig {
            max_order: Some(max_order),
            group_files: Vec::new(),
            rings: rings.iter().map(|s| s.to_string()).collect(),
            mode: Mode::Verify,
            format: ReportFormat::Json,
            jobs: 0,
            include_trivial_sigma: false,
            allow_order_32: false,
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

#[derive(Debug)]
pub struct SweepOutcome {
    pub report: Report,
    pub mismatches: usize,
    pub lemma_failures: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Deserialize)]
struct GroupFile {
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    names: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
struct RingFile {
    size: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    #[serde(default)]
    names: Option<Vec<String>>,
}

pub fn load_group_file(path: &Path, cap: usize) -> Result<Arc<Group>, HarnessError> {
    let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let parsed: GroupFile =
        serde_json::from_str(&text).map_err(|e| HarnessError::BadFile {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
    if parsed.order != parsed.table.len() {
        return Err(HarnessError::BadFile {
            path: path.to_path_buf(),
            message: format!(
                "order field is {} but table has {} rows",
                parsed.order,
                parsed.table.len()
            ),
        });
    }
    if parsed.order > cap {
        return Err(HarnessError::BadFile {
            path: path.to_path_buf(),
            message: format!(
                "order {} exceeds the cap of {cap} (use --allow-order-32 to raise it)",
                parsed.order
            ),
        });
    }
    let mut group = Group::from_table(parsed.table).map_err(|source| HarnessError::Group {
        path: Some(path.to_path_buf()),
        source,
    })?;
    if let Some(names) = parsed.names {
        group = group.with_names(names).map_err(|source| HarnessError::Group {
            path: Some(path.to_path_buf()),
            source,
        })?;
    }
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "custom".to_string());
    Ok(Arc::new(group.with_label(label)))
}

pub fn load_ring(token: &str) -> Result<Arc<FiniteRing>, HarnessError> {
    if token.ends_with(".json") || token.contains('/') {
        let path = Path::new(token);
        let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let parsed: RingFile =
            serde_json::from_str(&text).map_err(|e| HarnessError::BadFile {
                path: path.to_path_buf(),
                message: e.to_string(),
            })?;
        if parsed.size != parsed.add.len() {
            return Err(HarnessError::BadFile {
                path: path.to_path_buf(),
                message: format!(
                    "size field is {} but add table has {} rows",
                    parsed.size,
                    parsed.add.len()
                ),
            });
        }
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "custom".to_string());
        let mut ring = FiniteRing::from_tables(parsed.add, parsed.mul, label)?;
        if let Some(names) = parsed.names {
            ring = ring.with_names(names)?;
        }
        Ok(Arc::new(ring))
    } else {
        Ok(Arc::new(parse_ring_token(token)?))
    }
}

struct Task {
    index: usize,
    group: Arc<Group>,
    ring: Arc<FiniteRing>,
    ring_label: String,
    tau: GroupInvolution,
    sigma: Orientation,
}

fn validate(config: &SweepConfig) -> Result<(), HarnessError> {
    if config.max_order.is_none() && config.group_files.is_empty() {
        return Err(HarnessError::Usage(
            "at least one group source is required (--max-order or --group-file)".into(),
        ));
    }
    if let Some(n) = config.max_order {
        if n == 0 || n > DEFAULT_MAX_ORDER {
            return Err(HarnessError::Usage(format!(
                "--max-order must be between 1 and {DEFAULT_MAX_ORDER}"
            )));
        }
    }
    if config.rings.is_empty() {
        return Err(HarnessError::Usage("at least one ring is required".into()));
    }
    Ok(())
}

fn build_tasks(config: &SweepConfig) -> Result<Vec<Task>, HarnessError> {
    let mut groups: Vec<Arc<Group>> = Vec::new();
    if let Some(n) = config.max_order {
        groups.extend(builtin_catalog(n));
    }
    let cap = if config.allow_order_32 {
        HARD_CAP_ORDER
    } else {
        DEFAULT_MAX_ORDER
    };
    for path in &config.group_files {
        groups.push(load_group_file(path, cap)?);
    }

    // records carry the ring's own label (file stem for ring files); the
    // config echo keeps the user's spelling
    let rings: Vec<(String, Arc<FiniteRing>)> = config
        .rings
        .iter()
        .map(|token| load_ring(token).map(|r| (r.token().to_string(), r)))
        .collect::<Result<_, _>>()?;

    let mut tasks = Vec::new();
    let mut index = 0;
    for group in &groups {
        let involutions = enumerate_involutions(group);
        for (ring_label, ring) in &rings {
            let mut orientations = enumerate_orientations(group, ring);
            if config.include_trivial_sigma {
                orientations.push(Orientation::trivial(Arc::clone(group), Arc::clone(ring)));
            }
            for tau in &involutions {
                for sigma in &orientations {
                    if !is_compatible(tau, sigma) {
                        continue;
                    }
                    tasks.push(Task {
                        index,
                        group: Arc::clone(group),
                        ring: Arc::clone(ring),
                        ring_label: ring_label.clone(),
                        tau: tau.clone(),
                        sigma: sigma.clone(),
                    });
                    index += 1;
                }
            }
        }
    }
    Ok(tasks)
}

fn evaluate(task: &Task, mode: Mode) -> InstanceRecord {
    let g = &task.group;
    let r = &task.ring;
    let mut record = InstanceRecord {
        group: g.label().to_string(),
        ring: task.ring_label.clone(),
        involution: task.tau.map().to_vec(),
        orientation: task.sigma.values().to_vec(),
        status: "ok".to_string(),
        verdict: None,
        predicate: None,
        agreement: None,
        structure: None,
        s: None,
        t: None,
        gp14: None,
        ring_conditions: None,
        placement_sensitive: None,
        witness: None,
        lemmas: None,
    };

    if r.characteristic() == 2 {
        record.status = "rejected-char-2".to_string();
        return record;
    }

    let gens = symmetric_generators(&task.tau, &task.sigma);
    let verdict = check_anticommutative(&gens);
    record.verdict = Some(verdict.holds);
    if let Some(w) = &verdict.witness {
        record.witness = Some(WitnessOut {
            left_index: w.left_index,
            right_index: w.right_index,
            left: w.left.to_string(),
            right: w.right.to_string(),
            product: w.product.to_string(),
        });
    }

    if task.sigma.is_trivial() {
        // outside the classification's hypotheses: direct verdict only
        record.status = "trivial-sigma".to_string();
        return record;
    }

    let classification =
        theorem_predicate(&task.tau, &task.sigma).expect("characteristic 2 was filtered above");
    record.predicate = Some(classification.predicate);
    record.agreement = Some(verdict.holds == classification.predicate);
    if matches!(mode, Mode::Classify | Mode::Lemmas) {
        record.structure = Some(classification.structure.tag.as_str().to_string());
        record.s = classification.structure.s.map(|x| g.name(x).to_string());
        record.t = classification.structure.t.map(|x| g.name(x).to_string());
        record.gp14 = Some(classification.gp14.as_str().to_string());
        record.ring_conditions = Some(RingConditionsOut {
            ii: classification.ring_conditions.ii,
            iii: classification.ring_conditions.iii,
            iv: classification.ring_conditions.iv,
        });
        record.placement_sensitive = Some(classification.placement_sensitive);
    }
    if mode == Mode::Lemmas && verdict.holds {
        let report = check_lemma_suite(&task.tau, &task.sigma, &verdict)
            .expect("verdict holds by the branch guard");
        record.lemmas = Some(
            report
                .entries
                .iter()
                .map(|e| LemmaOut {
                    id: e.id.to_string(),
                    holds: e.holds,
                    counterexample: e.counterexample.clone(),
                })
                .collect(),
        );
    }
    record
}

/// Runs the full sweep. Mismatch and lemma-failure counts are surfaced so the
/// binary can map them to its exit status.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome, HarnessError> {
    validate(config)?;
    let start = std::time::Instant::now();
    let tasks = build_tasks(config)?;
    let mode = config.mode;

    let mut indexed: Vec<(usize, InstanceRecord)> = if config.jobs == 1 {
        tasks.iter().map(|t| (t.index, evaluate(t, mode))).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| HarnessError::Usage(format!("thread pool: {e}")))?;
        pool.install(|| {
            use rayon::prelude::*;
            tasks
                .par_iter()
                .map(|t| (t.index, evaluate(t, mode)))
                .collect()
        })
    };
    indexed.sort_by_key(|(i, _)| *i);
    let records: Vec<InstanceRecord> = indexed.into_iter().map(|(_, r)| r).collect();

    let mut summary = Summary {
        instances: records.len(),
        evaluated: 0,
        rejected_char_two: 0,
        trivial_sigma: 0,
        holds: 0,
        mismatches: 0,
        lemma_failures: 0,
        structure_histogram: BTreeMap::new(),
        gp14_histogram: BTreeMap::new(),
    };
    for record in &records {
        match record.status.as_str() {
            "rejected-char-2" => summary.rejected_char_two += 1,
            "trivial-sigma" => summary.trivial_sigma += 1,
            _ => summary.evaluated += 1,
        }
        if record.verdict == Some(true) {
            summary.holds += 1;
        }
        if record.agreement == Some(false) {
            summary.mismatches += 1;
        }
        if let Some(tag) = &record.structure {
            *summary.structure_histogram.entry(tag.clone()).or_insert(0) += 1;
        }
        if let Some(tag) = &record.gp14 {
            *summary.gp14_histogram.entry(tag.clone()).or_insert(0) += 1;
        }
        if let Some(lemmas) = &record.lemmas {
            summary.lemma_failures += lemmas.iter().filter(|l| !l.holds).count();
        }
    }

    let report = Report {
        config: crate::report::ConfigEcho {
            mode: mode.as_str().to_string(),
            max_order: config.max_order,
            group_files: config
                .group_files
                .iter()
                .map(|p| p.display().to_string())
                .collect(),
            rings: config.rings.clone(),
            include_trivial_sigma: config.include_trivial_sigma,
        },
        records,
        summary,
    };
    Ok(SweepOutcome {
        mismatches: report.summary.mismatches,
        lemma_failures: report.summary.lemma_failures,
        report,
        elapsed: start.elapsed(),
    })
}
