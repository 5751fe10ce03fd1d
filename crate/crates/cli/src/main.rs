mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "coronoid", version, about = "Coronoids, perforated patches and generalised altans")]
pub struct Args {
    pub verb: Verb,
    /// Input file: .hex.json, .map.json or .edges.
    pub input: PathBuf,
    /// Iteration vector "n1,n2,...", one entry per perimeter.
    #[arg(long)]
    pub n: Option<String>,
    /// Restrict perimeter output to one perimeter.
    #[arg(long)]
    pub hole_index: Option<usize>,
    /// Face kept outside a patch closure.
    #[arg(long)]
    pub forbidden_face: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Seed for randomised choices (the starting 6-cycle of `embed`).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Closure kind for hexagonal systems.
    #[arg(long, value_enum, default_value_t = ClosureKind::Benzenoid)]
    pub kind: ClosureKind,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Classify,
    Holes,
    Closure,
    Perimeters,
    Bbc,
    Altan,
    Kekule,
    Pauling,
    Verify,
    Embed,
    Render,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Svg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureKind {
    Benzenoid,
    Nondeg,
}

#[derive(Debug)]
pub enum CliError {
    /// The input was read but violates a precondition.
    Domain(coronoid::Error),
    /// The input could not be read or parsed.
    Input(String),
}

impl From<coronoid::Error> for CliError {
    fn from(e: coronoid::Error) -> Self {
        CliError::Domain(e)
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match commands::run(&args) {
        Ok(out) => {
            // a closed pipe is not worth a panic
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Domain(e)) => {
            let _ = writeln!(std::io::stdout(), "{}", serde_json::json!({ "error": e.code() }));
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            let _ = writeln!(std::io::stdout(), "{}", serde_json::json!({ "error": "bad_input" }));
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
