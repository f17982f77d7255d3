//! Single-instance deep dive behind the `witness` subcommand: generator
//! lists, the pairwise Jordan table, classification, and the failing pair if
//! one exists.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use sigmastar_core::{
    catalog_group, check_anticommutative, enumerate_involutions, enumerate_orientations,
    is_compatible, symmetric_generators, theorem_predicate, ElementSet, Group, GroupInvolution,
    Orientation,
};

use crate::sweep::{load_group_file, load_ring, DEFAULT_MAX_ORDER};
use crate::HarnessError;

#[derive(Debug, Clone)]
pub struct ExplainRequest {
    /// Catalog name (`C4`, `Q8`, ...) or a path to a table file.
    pub group: String,
    /// Ring token or a path to a ring file.
    pub ring: String,
    /// Index into the enumeration order, or an explicit comma-separated image list.
    pub involution: String,
    /// Index into the enumeration order, or an explicit comma-separated value list.
    pub orientation: String,
}

fn parse_selector(text: &str, what: &str) -> Result<SelectorKind, HarnessError> {
    if text.contains(',') {
        let items = text
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| {
                HarnessError::BadSelector(format!("{what} list {text:?} is not numeric"))
            })?;
        Ok(SelectorKind::Explicit(items))
    } else {
        text.trim()
            .parse::<usize>()
            .map(SelectorKind::Index)
            .map_err(|_| {
                HarnessError::BadSelector(format!(
                    "{what} selector {text:?} is neither an index nor a comma-separated list"
                ))
            })
    }
}

enum SelectorKind {
    Index(usize),
    Explicit(Vec<usize>),
}

fn render_set(g: &Group, set: &ElementSet) -> String {
    let names: Vec<&str> = set.iter().map(|x| g.name(x)).collect();
    format!("{{{}}}", names.join(", "))
}

/// Resolves the request, evaluates the instance, and renders a plain-text
/// report.
pub fn explain_instance(request: &ExplainRequest) -> Result<String, HarnessError> {
    let group: Arc<Group> = if request.group.ends_with(".json") || request.group.contains('/') {
        load_group_file(Path::new(&request.group), DEFAULT_MAX_ORDER)?
    } else {
        catalog_group(&request.group)
            .ok_or_else(|| HarnessError::UnknownCatalogName(request.group.clone()))?
    };
    let ring = load_ring(&request.ring)?;

    let tau = match parse_selector(&request.involution, "involution")? {
        SelectorKind::Index(i) => {
            let all = enumerate_involutions(&group);
            all.get(i)
                .cloned()
                .ok_or_else(|| {
                    HarnessError::BadSelector(format!(
                        "involution index {i} out of range ({} available)",
                        all.len()
                    ))
                })?
        }
        SelectorKind::Explicit(map) => GroupInvolution::new(Arc::clone(&group), map)
            .map_err(|e| HarnessError::BadSelector(e.to_string()))?,
    };
    let sigma = match parse_selector(&request.orientation, "orientation")? {
        SelectorKind::Index(i) => {
            let all = enumerate_orientations(&group, &ring);
            all.get(i)
                .cloned()
                .ok_or_else(|| {
                    HarnessError::BadSelector(format!(
                        "orientation index {i} out of range ({} available)",
                        all.len()
                    ))
                })?
        }
        SelectorKind::Explicit(values) => {
            Orientation::new(Arc::clone(&group), Arc::clone(&ring), values)
                .map_err(|e| HarnessError::BadSelector(e.to_string()))?
        }
    };

    if !is_compatible(&tau, &sigma) {
        return Err(HarnessError::IncompatiblePair);
    }

    let mut out = String::new();
    let g = group.as_ref();
    writeln!(out, "instance: {} over {}", g.label(), ring.token()).unwrap();
    writeln!(out, "involution images: {:?}", tau.map()).unwrap();
    writeln!(out, "orientation values: {:?}", sigma.values()).unwrap();
    writeln!(out, "N = {}", render_set(g, sigma.kernel())).unwrap();
    writeln!(out, "G_* = {}", render_set(g, &tau.symmetric_set())).unwrap();
    writeln!(out, "C = {}", render_set(g, sigma.subgroup_c())).unwrap();

    if ring.characteristic() == 2 {
        writeln!(out, "rejected: characteristic 2").unwrap();
        return Ok(out);
    }

    let gens = symmetric_generators(&tau, &sigma);
    writeln!(out, "N_* = {}", render_set(g, &gens.n_star)).unwrap();
    let render_list = |items: &[sigmastar_core::GroupRingElement]| -> String {
        if items.is_empty() {
            "(none)".to_string()
        } else {
            items
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",  ")
        }
    };
    writeln!(out, "generators 2*S1: {}", render_list(&gens.s1_doubled)).unwrap();
    writeln!(out, "generators S2:   {}", render_list(&gens.s2)).unwrap();
    writeln!(out, "generators S3:   {}", render_list(&gens.s3)).unwrap();

    let items: Vec<_> = gens.iter_all().cloned().collect();
    writeln!(out, "pairwise jordan table:").unwrap();
    for i in 0..items.len() {
        for j in i..items.len() {
            let product = items[i].jordan(&items[j]).expect("one ambient");
            writeln!(
                out,
                "  ({i}, {j}): ({}) o ({}) = {}",
                items[i], items[j], product
            )
            .unwrap();
        }
    }

    let verdict = check_anticommutative(&gens);
    if verdict.holds {
        writeln!(out, "direct verdict: anticommutes").unwrap();
    } else {
        let w = verdict.witness.as_ref().unwrap();
        writeln!(
            out,
            "direct verdict: FAILS at pair ({}, {}): ({}) o ({}) = {}",
            w.left_index, w.right_index, w.left, w.right, w.product
        )
        .unwrap();
    }

    if sigma.is_trivial() {
        writeln!(out, "classification: skipped (trivial orientation)").unwrap();
        return Ok(out);
    }
    let classification = theorem_predicate(&tau, &sigma).expect("characteristic checked above");
    let name_of = |x: Option<usize>| x.map(|i| g.name(i).to_string());
    write!(out, "structure: {}", classification.structure.tag.as_str()).unwrap();
    if let Some(s) = name_of(classification.structure.s) {
        write!(out, " (s = {s}").unwrap();
        if let Some(t) = name_of(classification.structure.t) {
            write!(out, ", t = {t}").unwrap();
        }
        write!(out, ")").unwrap();
    }
    writeln!(out).unwrap();
    writeln!(
        out,
        "ring conditions: ii = {}, iii = {}, iv = {}",
        classification.ring_conditions.ii,
        classification.ring_conditions.iii,
        classification.ring_conditions.iv
    )
    .unwrap();
    writeln!(out, "gp14 case: {}", classification.gp14.as_str()).unwrap();
    writeln!(out, "classification predicate: {}", classification.predicate).unwrap();
    writeln!(
        out,
        "agreement: {}",
        verdict.holds == classification.predicate
    )
    .unwrap();
    Ok(out)
}
