use clap::{Parser, Subcommand, ValueEnum};
use lambek_cli::{run_axioms, run_check, run_gen, run_lambek, Format, ModelTag, RunConfig};
use std::process::ExitCode;

/// Kernels, cokernels and Lambek invariants in three executable model
/// categories, with independent elementwise oracles.
#[derive(Parser)]
#[command(name = "lambek", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for every randomized suite; fixed seed, identical output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Trials per sampled suite.
    #[arg(long, global = true, default_value_t = 200)]
    trials: usize,

    /// Size budget: set sizes, presentation ranks, group orders.
    #[arg(long, global = true, default_value_t = 8)]
    max_size: usize,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Ptset,
    Abgroup,
    Grp,
}

impl From<ModelArg> for ModelTag {
    fn from(m: ModelArg) -> ModelTag {
        match m {
            ModelArg::Ptset => ModelTag::Ptset,
            ModelArg::Abgroup => ModelTag::Abgroup,
            ModelArg::Grp => ModelTag::Grp,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate a diagram file and run the hypothesis and lemma checks.
    Check { file: String },
    /// Build the Lambek invariants and morphism and compare with the oracle.
    Lambek { file: String },
    /// Run the sampled axiom and lemma suites.
    Axioms {
        /// Restrict to one model; all three when omitted.
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
    },
    /// Generate a seeded diagram document on stdout.
    Gen {
        #[arg(long, value_enum)]
        model: ModelArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        seed: cli.seed,
        trials: cli.trials,
        max_size: cli.max_size,
        format: match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Machine => Format::Machine,
        },
    };

    let (code, output) = match cli.command {
        Command::Check { file } => match std::fs::read_to_string(&file) {
            Ok(text) => run_check(&text, &cfg),
            Err(e) => (1, format!("error: cannot read {file}: {e}\n")),
        },
        Command::Lambek { file } => match std::fs::read_to_string(&file) {
            Ok(text) => run_lambek(&text, &cfg),
            Err(e) => (1, format!("error: cannot read {file}: {e}\n")),
        },
        Command::Axioms { model } => run_axioms(model.map(Into::into), &cfg),
        Command::Gen { model } => run_gen(model.into(), &cfg),
    };

    print!("{output}");
    ExitCode::from(code as u8)
}
