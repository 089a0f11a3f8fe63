//! Command-line front end: parse a graph file, run the requested
//! computations, and emit a deterministic table or JSON report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sgcodes::Error;
use sgcodes_cli::{parse_graph, render_json, render_table, run_report, Section};

#[derive(Parser)]
#[command(
    name = "sgcodes",
    about = "Invariants of incidence-matrix codes of signed graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Graph file (`vertices <s>` then `edge <u> <v> <+|->` lines)
    file: PathBuf,
    /// Field characteristic: 0 for the rationals, otherwise a prime
    #[arg(long = "char", default_value_t = 0, value_name = "N")]
    characteristic: u64,
    /// Emit JSON instead of a plain-text table
    #[arg(long)]
    json: bool,
    /// Ground-set size cap for 2^m enumeration sweeps (Betti tables)
    #[arg(long, default_value_t = 16, value_name = "M")]
    max_subset_size: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Graph summary, incidence rank and code dimensions
    Info(CommonArgs),
    /// Circuits and cocircuits of the code matroid
    Circuits(CommonArgs),
    /// Weight hierarchies of the code and its dual
    Ghw(CommonArgs),
    /// Graded Betti tables of the circuit and cocircuit ideals
    Betti(CommonArgs),
    /// Frustration index
    Frustration(CommonArgs),
    /// Minimum distance
    Mindist(CommonArgs),
    /// Run several sections at once
    Report(ReportArgs),
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Comma-separated sections to run
    /// (info,circuits,ghw,betti,frustration,mindist); defaults to every
    /// section that fits the subset guard
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    sections: Vec<String>,
}

fn run(common: &CommonArgs, sections: &[Section]) -> Result<bool, Error> {
    let text = std::fs::read_to_string(&common.file)
        .map_err(|e| Error::Argument(format!("{}: {e}", common.file.display())))?;
    let graph = parse_graph(&text)?;
    let report = run_report(&graph, common.characteristic, sections, common.max_subset_size)?;
    if common.json {
        print!("{}", render_json(&report));
    } else {
        print!("{}", render_table(&report));
    }
    Ok(report.all_agree())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, sections) = match &cli.command {
        Command::Info(c) => (c, vec![Section::Info]),
        Command::Circuits(c) => (c, vec![Section::Circuits]),
        Command::Ghw(c) => (c, vec![Section::Ghw]),
        Command::Betti(c) => (c, vec![Section::Betti]),
        Command::Frustration(c) => (c, vec![Section::Frustration]),
        Command::Mindist(c) => (c, vec![Section::Mindist]),
        Command::Report(r) => {
            let sections: Result<Vec<Section>, Error> = if r.sections.is_empty() {
                Ok(Section::ALL.to_vec())
            } else {
                r.sections.iter().map(|s| Section::parse(s)).collect()
            };
            match sections {
                Ok(mut s) => {
                    if r.sections.is_empty() {
                        // keep default reports within the enumeration guard
                        let text = std::fs::read_to_string(&r.common.file).unwrap_or_default();
                        if let Ok(g) = parse_graph(&text) {
                            if g.edge_count() > r.common.max_subset_size {
                                s.retain(|&sec| sec != Section::Betti);
                            }
                        }
                    }
                    (&r.common, s)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
        }
    };
    match run(common, &sections) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: cross-method disagreement; see the agreement section");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Argument(_) => 2,
                Error::Domain(_) => 3,
                Error::Resource(_) => 4,
            };
            ExitCode::from(code)
        }
    }
}
