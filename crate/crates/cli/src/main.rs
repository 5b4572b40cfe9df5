use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ucfam_cli::commands::{self, EnumerateOptions, Exit, Io};
use ucfam_core::enumerate::MAX_DIRECT_GROUND;
use ucfam_core::{Method, RemovalOrder};

/// Experiments with finite union-closed set families.
#[derive(Parser)]
#[command(name = "ucf", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report union-closedness, purity, size, union, minimal and redundant elements.
    Check { path: PathBuf },
    /// Remove redundant elements until the family is pure.
    Purify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Order::Smallest)]
        order: Order,
    },
    /// Find an isomorphism between two pure families and print the ground bijection inducing it.
    Lift { first: PathBuf, second: PathBuf },
    /// List elements contained in at least half of the members.
    Frankl { path: PathBuf },
    /// Build the inclusion lattice and render its Hasse diagram as DOT.
    Lattice {
        path: PathBuf,
        /// Write DOT here instead of standard output.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Enumerate union-closed families over [n].
    Enumerate {
        /// Ground size, at most 6.
        n: u32,
        /// Only pure families whose union is all of [n].
        #[arg(long)]
        pure: bool,
        /// Only families containing the empty set.
        #[arg(long)]
        require_empty: bool,
        /// Print the number of classes up to relabeling instead of the families.
        #[arg(long)]
        canonical: bool,
        /// Defaults to direct filtering up to n = 4, the generator walk above.
        #[arg(long, value_enum)]
        method: Option<EnumMethod>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Smallest,
    Largest,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumMethod {
    Direct,
    Generator,
}

fn run(cli: Cli, io: &mut Io) -> io::Result<Exit> {
    let json = cli.json;
    match cli.command {
        Command::Check { path } => commands::check(&path, json, io),
        Command::Purify { path, order } => {
            let order = match order {
                Order::Smallest => RemovalOrder::Smallest,
                Order::Largest => RemovalOrder::Largest,
            };
            commands::purify_cmd(&path, order, json, io)
        }
        Command::Lift { first, second } => commands::lift(&first, &second, json, io),
        Command::Frankl { path } => commands::frankl(&path, json, io),
        Command::Lattice { path, dot } => commands::lattice(&path, dot.as_deref(), json, io),
        Command::Enumerate {
            n,
            pure,
            require_empty,
            canonical,
            method,
        } => {
            let opts = EnumerateOptions {
                n,
                pure,
                require_empty,
                canonical,
                method: match method {
                    Some(EnumMethod::Direct) => Method::Direct,
                    Some(EnumMethod::Generator) => Method::Generator,
                    None if n <= MAX_DIRECT_GROUND => Method::Direct,
                    None => Method::Generator,
                },
                json,
            };
            commands::enumerate(&opts, io)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = stderr.lock();
    let result = run(
        cli,
        &mut Io {
            out: &mut out,
            err: &mut err,
        },
    );
    let result = result.and_then(|exit| out.flush().map(|_| exit));
    match result {
        Ok(exit) => ExitCode::from(exit.code()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitCode::from(Exit::InputError.code())
        }
    }
}
