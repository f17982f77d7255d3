use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sigmastar_cli::{
    explain_instance, run_sweep, write_csv, write_json, ExplainRequest, Mode, ReportFormat,
    SweepConfig,
};

#[derive(Debug, Parser)]
#[command(name = "sigmastar")]
#[command(about = "group-ring symmetric-span anticommutativity: direct checking, classification, and cross-verified sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Include all built-in catalog groups up to this order (1..=16).
    #[arg(long)]
    max_order: Option<usize>,

    /// Additional Cayley-table files (JSON: {"order", "table", "names"?}).
    #[arg(long = "group-file")]
    group_files: Vec<PathBuf>,

    /// Ring tokens (z4, z8, z4xz4, dual-z4, ...) or ring table files.
    #[arg(long, value_delimiter = ',', required = true)]
    rings: Vec<String>,

    /// Report destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Report format.
    #[arg(long, default_value = "json")]
    format: String,

    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,

    /// Also sweep the trivial orientation (recorded outside the
    /// classification's hypotheses).
    #[arg(long)]
    include_trivial_sigma: bool,

    /// Raise the table-file order cap from 16 to 32.
    #[arg(long)]
    allow_order_32: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep instances and cross-verify the direct check against the
    /// classification predicate.
    Verify(SweepArgs),
    /// Verify, plus structure and gp14 tags per record.
    Classify(SweepArgs),
    /// Classify, plus the per-lemma conclusion suite on holding records.
    Lemmas(SweepArgs),
    /// Explain a single instance: generators, Jordan table, classification.
    Witness {
        /// Catalog name or table file.
        #[arg(long)]
        group: String,
        /// Ring token or ring file.
        #[arg(long)]
        ring: String,
        /// Involution: enumeration index or comma-separated image list.
        #[arg(long)]
        involution: String,
        /// Orientation: enumeration index or comma-separated value list.
        #[arg(long)]
        orientation: String,
    },
}

fn to_config(args: &SweepArgs, mode: Mode) -> Result<SweepConfig, String> {
    let format = match args.format.as_str() {
        "json" => ReportFormat::Json,
        "csv" => ReportFormat::Csv,
        other => return Err(format!("unknown format {other:?} (expected json or csv)")),
    };
    Ok(SweepConfig {
        max_order: args.max_order,
        group_files: args.group_files.clone(),
        rings: args.rings.clone(),
        mode,
        format,
        jobs: args.jobs,
        include_trivial_sigma: args.include_trivial_sigma,
        allow_order_32: args.allow_order_32,
    })
}

fn run_sweep_command(args: &SweepArgs, mode: Mode) -> ExitCode {
    let config = match to_config(args, mode) {
        Ok(c) => c,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(1);
        }
    };
    let outcome = match run_sweep(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };

    let write_result = match &args.out {
        Some(path) => File::create(path)
            .map_err(|e| format!("{}: {e}", path.display()))
            .and_then(|f| {
                let w = BufWriter::new(f);
                match config.format {
                    ReportFormat::Json => write_json(&outcome.report, w),
                    ReportFormat::Csv => write_csv(&outcome.report, w),
                }
                .map_err(|e| e.to_string())
            }),
        None => {
            let stdout = io::stdout();
            let w = stdout.lock();
            match config.format {
                ReportFormat::Json => write_json(&outcome.report, w),
                ReportFormat::Csv => write_csv(&outcome.report, w),
            }
            .map_err(|e| e.to_string())
        }
    };
    if let Err(message) = write_result {
        eprintln!("error: {message}");
        return ExitCode::from(1);
    }

    let s = &outcome.report.summary;
    eprintln!(
        "swept {} instances ({} evaluated, {} holds, {} mismatches) in {:.1?}",
        s.instances, s.evaluated, s.holds, s.mismatches, outcome.elapsed
    );
    if outcome.mismatches > 0 || outcome.lemma_failures > 0 {
        for record in &outcome.report.records {
            if record.agreement == Some(false)
                || record
                    .lemmas
                    .as_ref()
                    .is_some_and(|ls| ls.iter().any(|l| !l.holds))
            {
                eprintln!(
                    "MISMATCH: {}",
                    serde_json::to_string(record).expect("record serializes")
                );
            }
        }
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify(args) => run_sweep_command(args, Mode::Verify),
        Command::Classify(args) => run_sweep_command(args, Mode::Classify),
        Command::Lemmas(args) => run_sweep_command(args, Mode::Lemmas),
        Command::Witness {
            group,
            ring,
            involution,
            orientation,
        } => {
            let request = ExplainRequest {
                group: group.clone(),
                ring: ring.clone(),
                involution: involution.clone(),
                orientation: orientation.clone(),
            };
            match explain_instance(&request) {
                Ok(text) => {
                    let mut stdout = io::stdout().lock();
                    stdout.write_all(text.as_bytes()).ok();
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
