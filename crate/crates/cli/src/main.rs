use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use log::{debug, info};
use zonoforge::report::{
    cmd_matroid, cmd_search_r37, cmd_space, cmd_verify, error_exit_code, error_report, render,
    ConfigDocument, Outcome, RunOptions, SearchBounds, Theorem,
};
use zonoforge::zonotopal::BundleKind;
use zonoforge::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Command {
    /// Bases, independent sets, facets and valuations.
    Matroid,
    /// Build one of the zonotopal spaces with its ideals.
    Space,
    /// Run the certificates for one theorem.
    Verify,
    /// Search small configurations for violations of the semi-internal sum formula.
    SearchR37,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Matroid => "matroid",
            Command::Space => "space",
            Command::Verify => "verify",
            Command::SearchR37 => "search-r37",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Kind {
    Central,
    External,
    SemiExternal,
    SemiInternal,
    Internal,
}

impl From<Kind> for BundleKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Central => BundleKind::Central,
            Kind::External => BundleKind::External,
            Kind::SemiExternal => BundleKind::SemiExternal,
            Kind::SemiInternal => BundleKind::SemiInternal,
            Kind::Internal => BundleKind::Internal,
        }
    }
}

/// Exact zonotopal algebra: spaces, ideals and theorem certificates for a
/// rational vector configuration. Set ZONOFORGE_LOG=debug for progress logs.
#[derive(Parser, Debug)]
#[command(name = "zonoforge", version)]
struct Cli {
    command: Command,
    /// JSON configuration document.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Theorem for `verify`: th1, exzono, pi, plus, basis, explus, t26, t28, t33, t34, r37.
    #[arg(long)]
    theorem: Option<String>,
    /// Space for `space`.
    #[arg(long, value_enum, default_value = "central")]
    kind: Kind,
    /// Seed for sampled arrangement offsets (overrides the document).
    #[arg(long)]
    seed: Option<u64>,
    /// Top degree for direct-sum certificates.
    #[arg(long)]
    dmax: Option<usize>,
    /// Largest dimension searched by `search-r37`.
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    /// Largest number of columns searched by `search-r37`.
    #[arg(long, default_value_t = 5)]
    max_cols: usize,
    /// Entries range over -E..=E in `search-r37`.
    #[arg(long, default_value_t = 1)]
    max_entry: i64,
    /// Restrict `search-r37` to entries in 0..=E.
    #[arg(long)]
    nonnegative: bool,
}

fn load(cli: &Cli) -> Result<ConfigDocument, Error> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| Error::Input("--input FILE is required for this command".into()))?;
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    ConfigDocument::parse(&text)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let opts = RunOptions {
        seed: cli.seed,
        dmax: cli.dmax,
    };
    match cli.command {
        Command::Matroid => cmd_matroid(&load(cli)?),
        Command::Space => cmd_space(&load(cli)?, cli.kind.into()),
        Command::Verify => {
            let name = cli
                .theorem
                .as_deref()
                .ok_or_else(|| Error::Input("verify needs --theorem NAME".into()))?;
            let theorem = Theorem::parse(name)
                .ok_or_else(|| Error::Input(format!("unknown theorem {name:?}")))?;
            cmd_verify(&load(cli)?, theorem, &opts)
        }
        Command::SearchR37 => cmd_search_r37(&SearchBounds {
            max_n: cli.max_n,
            max_cols: cli.max_cols,
            max_entry: cli.max_entry,
            nonnegative: cli.nonnegative,
        }),
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(p) => fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("ZONOFORGE_LOG")).init();
    let cli = Cli::parse();
    debug!("{cli:?}");
    let (text, code) = match run(&cli) {
        Ok(o) => {
            info!("{} finished, pass = {}", cli.command.name(), o.pass);
            (render(&o.report), o.exit_code())
        }
        Err(e) => {
            eprintln!("zonoforge: {e}");
            (render(&error_report(cli.command.name(), &e)), error_exit_code(&e))
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("zonoforge: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code as u8)
}
