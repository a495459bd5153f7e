use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kostant::checks;
use kostant::report::{self, Engine, Limits, ParabolicSpec};
use kostant::{CliError, CliResult, DEFAULT_N_LIMIT};
use kostant_core::Permutation;

/// Classification of Kostant-positive parabolic Verma modules for sl_n.
#[derive(Parser)]
#[command(name = "kostant", version)]
struct Cli {
    /// Lift the size limits (n <= 8 overall, n <= 6 for Kazhdan-Lusztig tables).
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every shortest coset representative for one parabolic.
    Classify {
        #[arg(long)]
        n: usize,
        /// min:k, max:k or comp:μ (e.g. comp:2,1,3).
        #[arg(long)]
        parabolic: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Graded composition multiplicities of Δ_x for the maximal parabolic q_k.
    Mult {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Shortest coset representative, e.g. 1324.
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value = "both")]
        engine: Engine,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Maximal bigrassmannian elements below w.
    Socle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: String,
    },
    /// RSK tableaux and cells of w, or the two-sided cells of S_n.
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: Option<String>,
    },
    /// Run the acceptance checks up to n_max.
    Selftest {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

fn permutation(n: usize, text: &str) -> CliResult<Permutation> {
    let p: Permutation = text.parse()?;
    if p.n() != n {
        return Err(CliError::Usage(format!(
            "{text} is not a permutation of 1..{n}"
        )));
    }
    Ok(p)
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let limits = Limits {
        force: cli.force,
        ..Limits::default()
    };
    if cli.force {
        eprintln!("warning: size limits lifted; large n may exhaust time or memory");
    }
    match cli.command {
        Command::Classify {
            n,
            parabolic,
            format,
        } => {
            let spec: ParabolicSpec = parabolic.parse()?;
            let r = report::classify(n, &spec, &limits)?;
            match format {
                Format::Json => print!("{}", r.to_json()?),
                Format::Tsv => print!("{}", r.to_tsv()),
            }
        }
        Command::Mult {
            n,
            k,
            x,
            engine,
            format,
        } => {
            let t = report::multiplicities(n, k, &permutation(n, &x)?, engine, &limits)?;
            match format {
                Format::Json => print!("{}", t.to_json()?),
                Format::Tsv => print!("{}", t.to_tsv()),
            }
        }
        Command::Socle { n, w } => {
            let gens = report::socle(&permutation(n, &w)?, &limits)?;
            println!("{}", serde_json::to_string(&gens)?);
        }
        Command::Cells { n, w } => {
            let json = match w {
                Some(w) => serde_json::to_string_pretty(&report::cell_info(
                    &permutation(n, &w)?,
                    &limits,
                )?)?,
                None => serde_json::to_string_pretty(&report::cell_summary(n, &limits)?)?,
            };
            println!("{json}");
        }
        Command::Selftest { n_max } => {
            if n_max > DEFAULT_N_LIMIT {
                return Err(CliError::Limit {
                    n: n_max,
                    limit: DEFAULT_N_LIMIT,
                    what: "selftest",
                });
            }
            let outcomes = checks::run_all(n_max);
            for o in &outcomes {
                println!("{o}");
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            println!("{} passed, {failed} failed", outcomes.len() - failed);
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
