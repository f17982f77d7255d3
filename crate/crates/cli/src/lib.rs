//! Batch sweeps over (group, involution, orientation, ring) instances with
//! cross-verification bookkeeping and deterministic report emission.
//!
//! The library half of the binary: everything here is callable from tests,
//! which is how the acceptance suite drives full sweeps without shelling out.

pub mod explain;
pub mod report;
pub mod sweep;

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    BadFile { path: PathBuf, message: String },
    #[error("invalid group table{}: {source}", context(.path))]
    Group {
        path: Option<PathBuf>,
        #[source]
        source: sigmastar_core::GroupError,
    },
    #[error("invalid ring: {0}")]
    Ring(#[from] sigmastar_core::RingError),
    #[error("unknown catalog name {0:?}")]
    UnknownCatalogName(String),
    #[error("orientation is not compatible with the involution")]
    IncompatiblePair,
    #[error("invalid instance selector: {0}")]
    BadSelector(String),
}

fn context(path: &Option<PathBuf>) -> String {
    match path {
        Some(p) => format!(" in {}", p.display()),
        None => String::new(),
    }
}

pub use explain::{explain_instance, ExplainRequest};
pub use report::{write_csv, write_json, InstanceRecord, Report, Summary};
pub use sweep::{run_sweep, Mode, ReportFormat, SweepConfig, SweepOutcome};
