use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use desmic_cli::{is_usage_error, j_report, member_report, run_suite, Suite, VerifyOptions};
use desmic_core::algebra::{parse_rational, Rational};
use desmic_core::Error;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "desmic", version, about = "Exact checks for the F4 root system, the desmic quartic pencil and its elliptic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Number of random parameter samples for the kummer suite.
    #[arg(long, global = true, default_value_t = 50)]
    samples: usize,

    /// Seed for all sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Positivity form ℓ as four comma-separated rationals.
    #[arg(long, global = true, value_name = "L1,L2,L3,L4")]
    ell: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Print the pencil member 8A·x₁x₂x₃x₄ − B·(2Σxᵢ²xⱼ² − Σxₖ⁴).
    Member {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
        /// Look the member up in the tetrahedron face catalog.
        #[arg(long)]
        factor: bool,
    },
    /// λ on both sides and the common j-invariant at (s, t).
    Jinv {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
}

fn parse_ell(text: &str) -> Result<[Rational; 4], Error> {
    let parts: Vec<Rational> = text.split(',').map(parse_rational).collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|_| Error::Parse(format!("--ell needs four values, got {text:?}")))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn usage_failure(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if is_usage_error(e) { 2 } else { 1 })
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Verify { suite } => {
            let ell = match cli.ell.as_deref().map(parse_ell).transpose() {
                Ok(ell) => ell,
                Err(e) => return usage_failure(&e),
            };
            let opts = VerifyOptions {
                samples: cli.samples,
                seed: cli.seed,
                ell,
            };
            let report = match run_suite(suite, &opts) {
                Ok(r) => r,
                Err(e) => return usage_failure(&e),
            };
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Member { a, b, factor } => {
            let report = parse_rational(&a)
                .and_then(|a| Ok((a, parse_rational(&b)?)))
                .and_then(|(a, b)| member_report(&a, &b, factor));
            match report {
                Ok(r) => {
                    match cli.format {
                        Format::Json => print_json(&r),
                        Format::Text => {
                            println!("[{}:{}]: {}", r.a, r.b, r.form);
                            if let Some(f) = &r.factorization {
                                println!("{f}");
                            }
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => usage_failure(&e),
            }
        }
        Command::Jinv { s, t } => {
            let report = parse_rational(&s)
                .and_then(|s| Ok((s, parse_rational(&t)?)))
                .and_then(|(s, t)| j_report(&s, &t));
            match report {
                Ok(r) => {
                    match cli.format {
                        Format::Json => print_json(&r),
                        Format::Text => {
                            println!("(s, t) = ({}, {})", r.s, r.t);
                            println!("λ_curve = {}", r.lambda_curve);
                            println!("λ_periods = {}", r.lambda_periods);
                            println!("j = {}", r.j);
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => usage_failure(&e),
            }
        }
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            ExitCode::from(code)
        }
    }
}
