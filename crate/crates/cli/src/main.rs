use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use twistop::jordan::{JordanAlgebra, Kind};
use twistop::moyal::{component_table, pairing_table, run_moyal_suite};
use twistop::rep::{show, OpSelector};
use twistop::ring::Scalar;
use twistop::verify::{critical_values, run_suite, SuiteOptions};

const MAX_MATRIX_RANK: usize = 3;
const MAX_SPIN: usize = 6;

#[derive(Parser)]
#[command(name = "twistop", version, about = "Exact checks for twisted differential operators on Jordan algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Seed for the sampled-point checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,

    /// Run independent checks on a thread pool.
    #[arg(long, global = true)]
    parallel: bool,

    /// Allow algebras beyond the default rank limits.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite on one algebra.
    Verify {
        #[arg(long)]
        algebra: String,
        /// `all`, `lemmas`, `jordan`, or a comma-separated list of check names.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Print the two critical twist values.
    Critical {
        #[arg(long)]
        algebra: String,
    },
    /// Star-product tables and the sl(2) identity suite.
    Moyal {
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = MoyalCheck::All)]
        check: MoyalCheck,
    },
    /// Print one operator in canonical text form.
    Show {
        #[arg(long)]
        algebra: String,
        /// `p+:i`, `p-:i`, `idem`, `eta+:i` or `eta-:i` (1-based).
        #[arg(long)]
        op: String,
        /// `formal`, or a rational value such as `1/4`.
        #[arg(long, default_value = "formal")]
        lambda: String,
    },
    /// Supported algebras.
    Algebras {
        #[command(subcommand)]
        action: AlgebrasAction,
    },
}

#[derive(Subcommand)]
enum AlgebrasAction {
    List,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MoyalCheck {
    Pairing,
    Components,
    Suite,
    All,
}

enum Failure {
    Usage(String),
    Checks,
}

fn usage<E: ToString>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn algebra(selector: &str, force: bool) -> Result<JordanAlgebra, Failure> {
    let kind: Kind = selector.parse().map_err(usage)?;
    let within = match kind {
        Kind::Sym(r) | Kind::Full(r) => r <= MAX_MATRIX_RANK,
        Kind::Spin(p) => p <= MAX_SPIN,
    };
    if !within && !force {
        return Err(Failure::Usage(format!(
            "{selector} exceeds the rank limit (r ≤ {MAX_MATRIX_RANK} for sym/full, p ≤ {MAX_SPIN} for spin); pass --force to run anyway"
        )));
    }
    JordanAlgebra::new(kind).map_err(usage)
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serialises");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Verify { algebra: sel, suite } => {
            let j = algebra(sel, cli.force)?;
            let opts = SuiteOptions { seed: cli.seed, parallel: cli.parallel };
            let report = run_suite(&j, suite, &opts).map_err(Failure::Usage)?;
            let text = match cli.format {
                Format::Json => format!("{}\n", report.to_json()),
                Format::Text => report.to_text(),
            };
            emit(cli, &text)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Critical { algebra: sel } => {
            let j = algebra(sel, cli.force)?;
            let (a, b) = critical_values(&j).map_err(|e| {
                eprintln!("error: {e}");
                Failure::Checks
            })?;
            let text = match cli.format {
                Format::Json => json_text(&json!({ "algebra": j.name(), "critical": [a.to_string(), b.to_string()] })),
                Format::Text => format!("{a}, {b}\n"),
            };
            emit(cli, &text)
        }
        Command::Moyal { max_degree, check } => {
            let want = |c: MoyalCheck| *check == c || *check == MoyalCheck::All;
            let pairing = want(MoyalCheck::Pairing).then(|| pairing_table(*max_degree));
            let components = want(MoyalCheck::Components).then(|| component_table(*max_degree));
            let report = want(MoyalCheck::Suite).then(run_moyal_suite);
            let text = match cli.format {
                Format::Json => json_text(&json!({
                    "max_degree": max_degree,
                    "pairing": pairing,
                    "components": components,
                    "report": report,
                })),
                Format::Text => {
                    let mut out = String::new();
                    for (title, rows) in [("pairing", &pairing), ("components", &components)] {
                        if let Some(rows) = rows {
                            out.push_str(&format!("# {title}\n"));
                            for row in rows {
                                out.push_str(row);
                                out.push('\n');
                            }
                        }
                    }
                    if let Some(r) = &report {
                        out.push_str(&r.to_text());
                    }
                    out
                }
            };
            emit(cli, &text)?;
            match report {
                Some(r) if !r.passed() => Err(Failure::Checks),
                _ => Ok(()),
            }
        }
        Command::Show { algebra: sel, op, lambda } => {
            let j = algebra(sel, cli.force)?;
            let op: OpSelector = op.parse().map_err(usage)?;
            let value = match lambda.as_str() {
                "formal" => None,
                v => Some(v.parse::<Scalar>().map_err(usage)?),
            };
            let shown = show(&j, &op, value.as_ref()).map_err(usage)?;
            let text = match cli.format {
                Format::Json => json_text(&json!({ "algebra": j.name(), "operator": shown })),
                Format::Text => format!("{shown}\n"),
            };
            emit(cli, &text)
        }
        Command::Algebras { action: AlgebrasAction::List } => {
            let kinds = (1..=MAX_MATRIX_RANK)
                .map(Kind::Sym)
                .chain((1..=MAX_MATRIX_RANK).map(Kind::Full))
                .chain((2..=MAX_SPIN).map(Kind::Spin));
            let mut rows = Vec::new();
            for kind in kinds {
                let j = JordanAlgebra::new(kind).map_err(usage)?;
                rows.push(json!({
                    "algebra": j.name(),
                    "n": j.n(),
                    "r": j.r(),
                    "m": j.m().to_string(),
                    "lambda_0": j.lambda_0().to_string(),
                    "lambda_0_prime": j.lambda_0_prime().to_string(),
                }));
            }
            let text = match cli.format {
                Format::Json => json_text(&serde_json::Value::Array(rows)),
                Format::Text => {
                    let mut out = format!("{:<8} {:>3} {:>3} {:>5}  {}\n", "algebra", "n", "r", "m", "critical");
                    for row in &rows {
                        out.push_str(&format!(
                            "{:<8} {:>3} {:>3} {:>5}  {}, {}\n",
                            row["algebra"].as_str().unwrap_or_default(),
                            row["n"].as_u64().unwrap_or_default(),
                            row["r"].as_u64().unwrap_or_default(),
                            row["m"].as_str().unwrap_or_default(),
                            row["lambda_0"].as_str().unwrap_or_default(),
                            row["lambda_0_prime"].as_str().unwrap_or_default(),
                        ));
                    }
                    out
                }
            };
            emit(cli, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
