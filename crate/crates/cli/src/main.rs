use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use jd3_core::asymptotics::{Regime, RegimeId};
use jd3_core::diagrams::{
    catalog, even_closed_form, hilbert_coefficients, odd_target_dim, psi4_image_in, tet_slice,
    tsq_odd_dim, DegreeInfo, GraphId, Parity,
};
use jd3_core::exact::parse_rational;
use jd3_core::verify::{
    run_all, verify_asymptotics, verify_even_dims, verify_lemma, verify_odd_vanishing,
    with_threads, Report, RunConfig,
};
use jd3_core::{BigRational, Error};

/// Exact verification of odd-degree vanishing and related dimension
/// formulas for 3-loop Jacobi diagrams.
#[derive(Parser)]
#[command(name = "jd3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Print slice dimensions for one degree.
    Dims(DimsArgs),
    /// Run every suite and the property checks.
    All(AllArgs),
}

#[derive(Args)]
struct Output {
    /// Write the JSON report to PATH; without PATH, print it instead of the table.
    #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
    json: Option<PathBuf>,
    /// Write a CSV report to PATH.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Worker threads for independent degrees.
    #[arg(long, value_name = "N", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
}

#[derive(Subcommand)]
enum Suite {
    /// Odd-degree vanishing.
    Odd {
        #[arg(long, value_name = "N", default_value_t = 29)]
        max_legs: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Even-degree dimensions, three ways.
    Even {
        #[arg(long, value_name = "N", default_value_t = 30)]
        max_legs: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Independence and span of the Q-family.
    Lemma {
        #[arg(long, value_name = "D", default_value_t = 8)]
        max_d: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Leading terms of the Q-family under the two regimes.
    Asymptotics {
        #[arg(long, value_name = "D", default_value_t = 6)]
        max_d: u32,
        #[arg(long, value_enum, default_value_t = RegimeChoice::Both)]
        regime: RegimeChoice,
        /// Exponents a b c as integers or fractions, e.g. `2 8/5 1`.
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], value_parser = rational)]
        abc: Option<Vec<BigRational>>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RegimeChoice {
    One,
    Two,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

#[derive(Args)]
struct DimsArgs {
    #[arg(long, value_enum)]
    parity: ParityArg,
    #[arg(long, value_name = "L")]
    legs: u32,
}

#[derive(Args)]
struct AllArgs {
    #[command(flatten)]
    out: Output,
    #[arg(long, value_name = "N", default_value_t = 29)]
    max_odd_legs: u32,
    #[arg(long, value_name = "N", default_value_t = 30)]
    max_even_legs: u32,
    #[arg(long, value_name = "D", default_value_t = 8)]
    max_lemma_d: u32,
    #[arg(long, value_name = "D", default_value_t = 6)]
    max_asym_d: u32,
    /// Seed of the property checks.
    #[arg(long, default_value_t = RunConfig::default().seed)]
    seed: u64,
    #[arg(long, hide = true)]
    corrupt_closed_form: bool,
}

fn rational(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, msg).exit()
}

fn regimes(choice: RegimeChoice, abc: Option<Vec<BigRational>>) -> Vec<Regime> {
    let ids = match choice {
        RegimeChoice::One => vec![RegimeId::One],
        RegimeChoice::Two => vec![RegimeId::Two],
        RegimeChoice::Both => vec![RegimeId::One, RegimeId::Two],
    };
    match abc {
        None => ids.into_iter().map(Regime::default_for).collect(),
        Some(_) if ids.len() > 1 => usage_error(
            ErrorKind::ArgumentConflict,
            "--abc applies to a single regime; pass --regime one or --regime two",
        ),
        Some(v) => {
            let [a, b, c]: [BigRational; 3] = v.try_into().expect("clap enforces three values");
            match Regime::new(ids[0], a, b, c) {
                Ok(r) => vec![r],
                Err(e) => usage_error(ErrorKind::ValueValidation, e),
            }
        }
    }
}

fn emit(report: &Report, out: &Output) -> Result<ExitCode, Error> {
    match out.json.as_deref() {
        Some(p) if p.as_os_str() == "-" => print!("{}", report.to_json()),
        Some(p) => {
            report.write_json(p)?;
            print!("{}", report.to_text());
        }
        None => print!("{}", report.to_text()),
    }
    if let Some(p) = &out.csv {
        report.write_csv(p)?;
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn dims(args: &DimsArgs) -> Result<ExitCode, Error> {
    let l = args.legs;
    let parity = match args.parity {
        ParityArg::Odd => Parity::Odd,
        ParityArg::Even => Parity::Even,
    };
    if parity.check(l).is_err() {
        usage_error(
            ErrorKind::ValueValidation,
            format!("--legs {l} does not have parity {parity}"),
        );
    }
    let info = DegreeInfo::new(l);
    println!("legs {l}, degree {}, {parity}", info.jacobi_degree);
    let ambient = tet_slice(l, parity)?;
    for g in catalog() {
        let value = match (g.id, parity) {
            (GraphId::Tet, _) => ambient.dim.to_string(),
            (GraphId::Tsq, Parity::Odd) => tsq_odd_dim(l)?.to_string(),
            _ => "not computed; handled by reduction to tet".to_string(),
        };
        println!("  {:<4} {value}", g.id.label());
    }
    match parity {
        Parity::Odd => {
            let image = psi4_image_in(&ambient)?;
            println!("  target  {}", odd_target_dim(l)?);
            println!("  series  {}", hilbert_coefficients(l, 9)[l as usize]);
            println!("  psi4 image  {}", image.dim);
            println!("  quotient  {}", tsq_odd_dim(l)? + ambient.dim - image.dim);
        }
        Parity::Even => {
            println!("  closed form  {}", even_closed_form(l)?);
            println!("  series  {}", hilbert_coefficients(l, 0)[l as usize]);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Verify { suite } => match suite {
            Suite::Odd { max_legs, out } => {
                let r = with_threads(out.threads.into(), || verify_odd_vanishing(max_legs))?;
                emit(&r, &out)
            }
            Suite::Even { max_legs, out } => {
                let r = with_threads(out.threads.into(), || verify_even_dims(max_legs))?;
                emit(&r, &out)
            }
            Suite::Lemma { max_d, out } => {
                let r = with_threads(out.threads.into(), || verify_lemma(max_d))?;
                emit(&r, &out)
            }
            Suite::Asymptotics {
                max_d,
                regime,
                abc,
                out,
            } => {
                let rs = regimes(regime, abc);
                let r = with_threads(out.threads.into(), || verify_asymptotics(max_d, &rs))?;
                emit(&r, &out)
            }
        },
        Command::Dims(args) => dims(&args),
        Command::All(args) => {
            let cfg = RunConfig {
                max_odd_legs: args.max_odd_legs,
                max_even_legs: args.max_even_legs,
                max_lemma_d: args.max_lemma_d,
                max_asym_d: args.max_asym_d,
                threads: args.out.threads.into(),
                seed: args.seed,
                corrupt_closed_form: args.corrupt_closed_form,
                ..RunConfig::default()
            };
            emit(&run_all(&cfg)?, &args.out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e @ Error::Output(_)) => {
            eprintln!("jd3: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("jd3: {e}");
            ExitCode::from(1)
        }
    }
}
