//! Command-line front end for the frame-code verification suite.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fvoa::codes::parse_generator_matrix;
use fvoa::suite::{EnumTarget, SuiteConfig, SuiteContext, VerifyCheck, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "fvoa",
    version,
    about = "Exact verification of the binary codes attached to a Virasoro frame of the moonshine module"
)]
struct Cli {
    /// Generator matrix file overriding the bundled frame code.
    #[arg(long, global = true, value_name = "FILE")]
    matrix: Option<PathBuf>,

    /// Coordinate fixed by the shortening checks (0-based).
    #[arg(long = "fixed-coord", global = true, value_name = "I", default_value_t = 0)]
    fixed_coord: usize,

    /// Seed for the randomized claims; decimal or 0x-prefixed hex.
    /// Falls back to the FVOA_SEED environment variable, then to 0xB5.
    #[arg(long, global = true, value_name = "SEED", value_parser = parse_seed)]
    seed: Option<u64>,

    /// Number of random codewords drawn by each sampled claim.
    #[arg(long, global = true, value_name = "N", default_value_t = 1000)]
    samples: usize,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification check and print its claim report.
    Verify {
        #[arg(value_enum)]
        check: CheckArg,

        /// Restrict the steiner check to the systems on N points (16 or 32).
        #[arg(long, value_name = "N")]
        n: Option<u32>,
    },
    /// Enumerate the weight distribution of one of the four codes.
    WeightEnum {
        /// Which code to enumerate.
        #[arg(long, value_enum)]
        code: CodeArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    All,
    CodeD,
    FrameAxioms,
    MinWeight,
    Span,
    SpanShortened,
    Steiner,
    HammingIdent,
    Generation,
    Fusion,
    Griess,
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeArg {
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "Cprime", alias = "cprime")]
    CPrime,
    #[value(name = "Dprime", alias = "dprime")]
    DPrime,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Request {
    Verify(VerifyCheck),
    Enumerate(EnumTarget),
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|_| format!("invalid seed '{s}': expected decimal or 0x-prefixed hex"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let request = match cli.command {
        Command::Verify { check, n } => {
            if n.is_some() && check != CheckArg::Steiner {
                eprintln!("error: --n applies only to the steiner check");
                return ExitCode::from(2);
            }
            if let Some(n) = n {
                if n != 16 && n != 32 {
                    eprintln!("error: --n must be 16 or 32, got {n}");
                    return ExitCode::from(2);
                }
            }
            Request::Verify(match check {
                CheckArg::All => VerifyCheck::All,
                CheckArg::CodeD => VerifyCheck::CodeD,
                CheckArg::FrameAxioms => VerifyCheck::FrameAxioms,
                CheckArg::MinWeight => VerifyCheck::MinWeight,
                CheckArg::Span => VerifyCheck::Span,
                CheckArg::SpanShortened => VerifyCheck::SpanShortened,
                CheckArg::Steiner => VerifyCheck::Steiner(n),
                CheckArg::HammingIdent => VerifyCheck::HammingIdent,
                CheckArg::Generation => VerifyCheck::Generation,
                CheckArg::Fusion => VerifyCheck::Fusion,
                CheckArg::Griess => VerifyCheck::Griess,
            })
        }
        Command::WeightEnum { code } => Request::Enumerate(match code {
            CodeArg::C => EnumTarget::C,
            CodeArg::D => EnumTarget::D,
            CodeArg::CPrime => EnumTarget::CPrime,
            CodeArg::DPrime => EnumTarget::DPrime,
        }),
    };

    let seed = match cli.seed {
        Some(seed) => seed,
        None => match std::env::var("FVOA_SEED") {
            Ok(value) => match parse_seed(&value) {
                Ok(seed) => seed,
                Err(e) => {
                    eprintln!("error: FVOA_SEED: {e}");
                    return ExitCode::from(2);
                }
            },
            Err(_) => DEFAULT_SEED,
        },
    };

    let matrix = match &cli.matrix {
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(text) => text,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            };
            match parse_generator_matrix(&text) {
                Ok(matrix) => Some(matrix),
                Err(e) => {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
        }
        None => None,
    };

    let config = SuiteConfig {
        seed,
        samples: cli.samples,
        fixed_coord: cli.fixed_coord,
        matrix,
    };
    let ctx = match SuiteContext::new(config) {
        Ok(ctx) => ctx,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let claims = match request {
        Request::Verify(check) => ctx.run_verify(check),
        Request::Enumerate(target) => ctx.run_weight_enum(target),
    };
    let report = ctx.build_report(claims);
    match cli.format {
        Format::Json => print!("{}", report.to_json_string()),
        Format::Text => print!("{}", report.to_text()),
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
