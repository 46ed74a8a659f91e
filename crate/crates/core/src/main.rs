use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::json;

use diagflat::{build_stage, verify_family, AnalysisReport, DefiningMatrix, FamilyStage};

#[derive(Parser)]
#[command(name = "diagflat")]
#[command(about = "Stiefel-Whitney classes and spin structures of diagonal flat manifolds")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the defining matrix stored in a file
    Analyze {
        path: PathBuf,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        /// Include every cover with proper holonomy
        #[arg(long)]
        covers: bool,
    },
    /// Print a matrix of the minimal non-spin family
    Construct {
        /// Holonomy rank (at least 2)
        #[arg(short = 'd')]
        d: usize,
        /// One of A0, A1, A, B, C, E, F
        #[arg(long, default_value = "F")]
        stage: FamilyStage,
    },
    /// Check the minimal non-spin property of F_d
    #[command(group(ArgGroup::new("range").required(true).args(["d", "max_d"])))]
    Verify {
        /// A single rank
        #[arg(short = 'd')]
        d: Option<usize>,
        /// Every rank from 2 up to this one
        #[arg(long = "max-d")]
        max_d: Option<usize>,
        /// Emit results as JSON
        #[arg(long)]
        json: bool,
    },
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn analyze(path: &PathBuf, json: bool, covers: bool) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage_error(format!("{}: {e}", path.display())),
    };
    let matrix = match DefiningMatrix::parse(&text) {
        Ok(m) => m,
        Err(e) => return usage_error(format!("{}: {e}", path.display())),
    };
    let report = AnalysisReport::analyze(&matrix, covers);
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::SUCCESS
}

fn construct(d: usize, stage: FamilyStage) -> ExitCode {
    match build_stage(stage, d) {
        Ok(m) => {
            print!("{}", m.to_text());
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn verify(d: Option<usize>, max_d: Option<usize>, json: bool) -> ExitCode {
    let ranks: Vec<usize> = match (d, max_d) {
        (Some(d), _) => vec![d],
        (None, Some(max)) => (2..=max).collect(),
        (None, None) => unreachable!("clap requires one of -d/--max-d"),
    };
    if ranks.is_empty() || ranks.iter().any(|&d| d < 2) {
        return usage_error("rank must be at least 2");
    }
    let mut results = Vec::with_capacity(ranks.len());
    for d in ranks {
        let check = match verify_family(d) {
            Ok(c) => c,
            Err(e) => return usage_error(e),
        };
        if !json {
            println!("{}", check.to_text());
        }
        let failed = !check.pass;
        results.push(check);
        if failed {
            break;
        }
    }
    let pass = results.iter().all(|r| r.pass);
    if json {
        let doc = json!({ "schema": diagflat::report::SCHEMA_VERSION, "pass": pass, "results": results });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { path, json, covers } => analyze(&path, json, covers),
        Command::Construct { d, stage } => construct(d, stage),
        Command::Verify { d, max_d, json } => verify(d, max_d, json),
    }
}
