mod commands;
mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use commands::{exit, Format, Outcome};
use splitpre::fuzz::FuzzConfig;
use splitpre::termlang::Category;

/// Split preorder terms: evaluation, normal forms, equality and separation.
#[derive(Parser)]
#[command(name = "splitpre", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// PF, EF or RB; overrides inference and any `%category` header.
    #[arg(long, short)]
    category: Option<Category>,
    #[arg(long, short, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct Input {
    /// Term text; read from --file or stdin when absent.
    term: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the semantic value of a term.
    Eval {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
    /// Decide equality of two terms; exit 0 if equal, 1 if not.
    Eq {
        f: String,
        g: String,
        /// Attach a separating context when the terms differ.
        #[arg(long)]
        separate: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print the normal-form payload and its canonical term.
    Normalize {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
    /// Instantiate and check the equation catalog.
    CheckAxioms {
        #[arg(long, default_value_t = 3)]
        max_param: usize,
        /// Print the catalog as JSON instead of checking it.
        #[arg(long)]
        catalog: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Build a separating context for two unequal terms.
    Separate {
        f: String,
        g: String,
        #[command(flatten)]
        common: Common,
    },
    /// Draw the semantic value (ascii or dot).
    Render {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
    /// Seeded random checks of normal forms, equality and separation.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_depth: usize,
        /// Largest padding on a generator.
        #[arg(long, default_value_t = 3)]
        max_param: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn read_input(input: &Input) -> Result<String, Outcome> {
    if let Some(t) = &input.term {
        return Ok(t.clone());
    }
    if let Some(path) = &input.file {
        return std::fs::read_to_string(path)
            .map_err(|e| Outcome::fail(exit::PARSE, format!("{}: {e}", path.display())));
    }
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Outcome::fail(exit::PARSE, e))?;
    Ok(s)
}

fn categories(c: Option<Category>) -> Vec<Category> {
    c.map_or_else(|| Category::ALL.to_vec(), |c| vec![c])
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Eval { input, common } => match read_input(&input) {
            Ok(text) => commands::eval_cmd(
                &text,
                common.category,
                common.format.unwrap_or(Format::Json),
            ),
            Err(o) => o,
        },
        Command::Render { input, common } => match read_input(&input) {
            Ok(text) => commands::render_cmd(
                &text,
                common.category,
                common.format.unwrap_or(Format::Ascii),
            ),
            Err(o) => o,
        },
        Command::Normalize { input, common } => match read_input(&input) {
            Ok(text) => commands::normalize_cmd(
                &text,
                common.category,
                common.format.unwrap_or(Format::Json),
            ),
            Err(o) => o,
        },
        Command::Eq {
            f,
            g,
            separate,
            common,
        } => commands::eq_cmd(
            &f,
            &g,
            common.category,
            separate,
            common.format.unwrap_or(Format::Text),
        ),
        Command::Separate { f, g, common } => commands::separate_cmd(&f, &g, common.category),
        Command::CheckAxioms {
            max_param,
            catalog,
            common,
        } => commands::check_axioms_cmd(
            &categories(common.category),
            max_param,
            catalog,
            common.format.unwrap_or(Format::Text),
        ),
        Command::Fuzz {
            seed,
            count,
            max_depth,
            max_param,
            common,
        } => {
            let cfg = FuzzConfig {
                max_depth,
                max_pad: max_param,
                ..FuzzConfig::default()
            };
            commands::fuzz_cmd(
                &categories(common.category),
                seed,
                count,
                cfg,
                common.format.unwrap_or(Format::Text),
            )
        }
    }
}

fn main() -> ExitCode {
    let out = run(Cli::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
