use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use twining_characters::{demazure_character, freudenthal_character};
use twining_core::{parse_csv_i64, DiagramAutomorphism, Error, Weight, WeylGroup, WeylWord};
use twining_engine::{HighestWeightModule, DEFAULT_WORD_CAP};
use twining_harness::{
    exit, run_battery, verify_resolved, BatteryConfig, GcmSpec, Instance, BATTERY_WORD_CAP,
};

/// Twining characters of Demazure modules, checked two independent ways.
#[derive(Parser)]
#[command(name = "twining", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an instance file and print its folded and unfolded data.
    Validate {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Print the folded matrix, orbits, P* and the Θ table for an instance file.
    Fold {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Full character of L(λ); the Demazure character at w₀ unless --freudenthal.
    Character {
        #[arg(long)]
        gcm: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        freudenthal: bool,
    },
    /// Demazure character D_{i1}⋯D_{ik} e(λ).
    Demazure {
        #[arg(long)]
        gcm: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Twining character computed in the word model of L(λ).
    Twining {
        #[arg(long)]
        gcm: String,
        #[arg(long)]
        auto: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
        word_cap: u64,
    },
    /// Compute both sides for an instance file and compare them.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
        word_cap: u64,
    },
    /// Run the fixed battery, plus sweeps when either sweep flag is given.
    Battery {
        /// Sweep every ŵ up to this length (default 2 when sweeping).
        #[arg(long)]
        max_word_len: Option<usize>,
        /// Sweep every λ̂ in {0..M}^rank (default 1 when sweeping).
        #[arg(long)]
        lambda_box: Option<i64>,
        #[arg(long, default_value_t = BATTERY_WORD_CAP)]
        word_cap: u64,
        /// Skip the fixed battery and run only the sweeps.
        #[arg(long)]
        no_fixed: bool,
        #[arg(long)]
        json: bool,
    },
}

fn usize_list(s: &str) -> twining_core::Result<Vec<usize>> {
    parse_csv_i64(s.trim_matches(|c| c == '[' || c == ']'))?
        .into_iter()
        .map(|x| usize::try_from(x).map_err(|_| Error::Parse(format!("negative index {x}"))))
        .collect()
}

fn weight(s: &str) -> twining_core::Result<Weight> {
    Ok(Weight::new(parse_csv_i64(
        s.trim_matches(|c| c == '(' || c == ')'),
    )?))
}

fn run(cli: Cli) -> twining_core::Result<i32> {
    match cli.command {
        Command::Validate { input } => {
            let r = Instance::read(&input)?.resolve()?;
            println!("valid: {}", r.instance);
            println!("unfolded: lambda={} w=({})", r.lambda, r.w);
            println!(
                "folded: lambda_hat={} w_hat=({}) over {}",
                r.lambda_hat,
                r.w_hat,
                r.folding.folded()
            );
            Ok(exit::OK)
        }
        Command::Fold { input } => {
            let r = Instance::read(&input)?.resolve()?;
            println!("{}", r.folding);
            Ok(exit::OK)
        }
        Command::Character {
            gcm,
            lambda,
            freudenthal,
        } => {
            let a = GcmSpec::parse(&gcm)?.build()?;
            let lambda = weight(&lambda)?;
            let ch = if freudenthal {
                freudenthal_character(&a, &lambda)?
            } else {
                let w0 = WeylGroup::new(&a)?.longest_element()?;
                demazure_character(&a, &lambda, &w0)?
            };
            println!("{}", ch.canonical_text());
            Ok(exit::OK)
        }
        Command::Demazure { gcm, lambda, word } => {
            let a = GcmSpec::parse(&gcm)?.build()?;
            let word = WeylWord::new(usize_list(&word)?);
            println!(
                "{}",
                demazure_character(&a, &weight(&lambda)?, &word)?.canonical_text()
            );
            Ok(exit::OK)
        }
        Command::Twining {
            gcm,
            auto,
            lambda,
            word,
            word_cap,
        } => {
            let a = GcmSpec::parse(&gcm)?.build()?;
            let omega = DiagramAutomorphism::new(&a, usize_list(&auto)?)?;
            let module = HighestWeightModule::new(&a, weight(&lambda)?)?.with_word_cap(word_cap);
            let ch = module.twining_character(&WeylWord::new(usize_list(&word)?), &omega)?;
            println!("{}", ch.canonical_text());
            Ok(exit::OK)
        }
        Command::Verify {
            input,
            json,
            word_cap,
        } => {
            let report = verify_resolved(Instance::read(&input)?.resolve()?, word_cap)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.canonical_text());
            }
            Ok(if report.equal {
                exit::OK
            } else {
                exit::FALSIFIED
            })
        }
        Command::Battery {
            max_word_len,
            lambda_box,
            word_cap,
            no_fixed,
            json,
        } => {
            let config = BatteryConfig {
                fixed: !no_fixed,
                max_word_len,
                lambda_box,
                word_cap,
                mutation: None,
            };
            let result = run_battery(&config)?;
            if json {
                println!("{}", result.to_json());
            } else {
                print!("{}", result.canonical_text());
            }
            Ok(result.summary.exit_code)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit::code_for(&e)
        }
    };
    ExitCode::from(code as u8)
}
