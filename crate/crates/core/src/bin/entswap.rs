// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Command-line front end: `verify`, `figure2`, `figure3`, `report`.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use entswap::strategies::SwapInputs;
use entswap::sweep::{self, DEFAULT_FIGURE2_C_AC1, DEFAULT_FIGURE3_C_AC1, DEFAULT_STEPS};
use entswap::verify::{self, ClosedForms, VerifyConfig};
use entswap::{report, Error};

#[derive(Parser)]
#[command(
    name = "entswap",
    version,
    about = "Probabilistic entanglement swapping simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Randomized simulation-versus-closed-form verification.
    Verify {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Strategy 1 and 2 success probabilities versus C_BC2 (CSV).
    Figure2 {
        /// Concurrence of the AC1 pair; repeat for several curves.
        #[arg(long = "c-ac1")]
        c_ac1: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Strategy 4 success probability over (C_BC2, C_C1C2) (CSV).
    Figure3 {
        #[arg(long = "c-ac1", default_value_t = DEFAULT_FIGURE3_C_AC1)]
        c_ac1: f64,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Branch-level report of all four strategies.
    Report {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        gamma: f64,
        /// Measuring-basis parameter for strategy 4; defaults to min(x2, x3).
        #[arg(long)]
        x: Option<f64>,
    },
}

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::BadParameter { .. } | Error::BadConcurrence(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn emit<F>(out: Option<PathBuf>, write: F) -> Result<(), Error>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match out {
        Some(path) => sweep::write_file(&path, |w| write(w)),
        None => write(&mut io::stdout().lock()).map_err(|e| Error::Io {
            path: "<stdout>".into(),
            message: e.to_string(),
        }),
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Verify { trials, seed } => {
            let config = VerifyConfig {
                trials: trials as usize,
                seed,
                ..VerifyConfig::default()
            };
            let report = verify::run(&config, &ClosedForms::default())?;
            print!("{report}");
            if let Some((check, tuple)) = report.first_counterexample() {
                eprintln!("verification failed: {check}: {tuple}");
                return Ok(ExitCode::from(EXIT_FAILURE));
            }
        }
        Command::Figure2 { c_ac1, steps, out } => {
            let c_ac1 = if c_ac1.is_empty() {
                DEFAULT_FIGURE2_C_AC1.to_vec()
            } else {
                c_ac1
            };
            let rows = sweep::figure2(&c_ac1, steps)?;
            emit(out, |w| sweep::write_figure2_csv(&rows, w))?;
        }
        Command::Figure3 { c_ac1, steps, out } => {
            let rows = sweep::figure3(c_ac1, steps)?;
            emit(out, |w| sweep::write_figure3_csv(&rows, w))?;
        }
        Command::Report { alpha, gamma, x } => {
            let inputs = SwapInputs::new(alpha, gamma)?;
            print!("{}", report::render(&inputs, x)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
