use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use duskin_cli::{
    cmd_appendix_example, cmd_bijection, cmd_enumerate, cmd_freecell_list, cmd_freecell_relations, cmd_reconstruct,
    cmd_theta2, cmd_verify, Budget, CommandResult, EnumerateFlags, VerifyArgs,
};

#[derive(Parser)]
#[command(name = "duskin")]
#[command(about = "Enumerate and cross-check simplices of Duskin nerves through matrices")]
#[command(version)]
struct Cli {
    /// Print the full result record as a single JSON line
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest dimension to enumerate (the nerve is capped at 4 regardless)
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Stream the simplices of Mat(D) or of a theta object as JSON lines
    Enumerate {
        /// ordinal:m, square, theta:[r|n1,...,nr] or file:path.json
        spec: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        nondegenerate: bool,
        /// Print only the number of simplices
        #[arg(long)]
        count_only: bool,
    },
    /// Run an exhaustive check
    Verify {
        /// simplicial-identities, coskeletal, phi-oracle, pullback,
        /// freecell-relations, freecell-uniqueness, bijection,
        /// degeneracy-retraction or functor-mutations
        suite: String,
        #[arg(long)]
        cat: Option<String>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Mutations per shape for functor-mutations
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Triangulations of the (n+1)-gon against shuffles
    Bijection {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        verify: bool,
    },
    /// Rebuild a matrix from labeled monotone paths
    Reconstruct {
        #[arg(long)]
        input: String,
    },
    /// Run the worked example over [1] x [2]^op
    AppendixExample,
    /// Enumerate over [r|n1,...,nr]
    Theta2 {
        /// Comma-separated widths n1,...,nr
        #[arg(long, value_delimiter = ',', required = true)]
        widths: Vec<usize>,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        nondegenerate: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// The free 2-cell Mat([1])
    Freecell {
        #[arg(long, conflicts_with = "list_nondegenerate", requires = "max_m")]
        check_relations: bool,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long, requires = "dim")]
        list_nondegenerate: bool,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Shuffles, triangulations and path reconstruction
    Paths {
        #[command(subcommand)]
        command: PathsCommand,
    },
}

#[derive(Subcommand)]
enum PathsCommand {
    Bijection {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        verify: bool,
    },
    Reconstruct {
        #[arg(long)]
        input: String,
    },
}

fn read_input(path: &str) -> Result<String, CommandResult> {
    std::fs::read_to_string(path).map_err(|e| CommandResult::error(format!("{path}: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = cli.budget.map_or_else(Budget::default, Budget::with_max_dim);
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());

    let mut streamed = false;
    let result = match cli.command {
        Commands::Enumerate { spec, dim, nondegenerate, count_only } => {
            streamed = true;
            cmd_enumerate(&spec, dim, EnumerateFlags { nondegenerate, count_only }, budget, &mut out)
        }
        Commands::Theta2 { widths, dim, nondegenerate, count_only } => {
            streamed = true;
            cmd_theta2(&widths, dim, EnumerateFlags { nondegenerate, count_only }, budget, &mut out)
        }
        Commands::Verify { suite, cat, dim, max_m, n, trials } => {
            let args = VerifyArgs { cat, dim, max_m, n, trials, seed: cli.seed };
            cmd_verify(&suite, &args, budget)
        }
        Commands::Bijection { n, k, verify }
        | Commands::Paths { command: PathsCommand::Bijection { n, k, verify } } => cmd_bijection(n, k, verify),
        Commands::Reconstruct { input } | Commands::Paths { command: PathsCommand::Reconstruct { input } } => {
            read_input(&input).map_or_else(|e| e, |text| cmd_reconstruct(&text))
        }
        Commands::AppendixExample => cmd_appendix_example(),
        Commands::Freecell { check_relations, max_m, list_nondegenerate, dim } => {
            if check_relations {
                cmd_freecell_relations(max_m.unwrap_or(4))
            } else if list_nondegenerate {
                cmd_freecell_list(dim.unwrap_or(0), budget)
            } else {
                CommandResult::error("freecell needs --check-relations or --list-nondegenerate")
            }
        }
    };

    let written = if cli.json {
        serde_json::to_string(&result).map_err(io::Error::from).and_then(|line| writeln!(out, "{line}"))
    } else if streamed {
        Ok(())
    } else {
        serde_json::to_string_pretty(&result.payload).map_err(io::Error::from).and_then(|text| writeln!(out, "{text}"))
    };
    if let Err(e) = written.and_then(|()| out.flush()) {
        // a closed pipe is not a failure of the command
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if !cli.json {
        for d in &result.diagnostics {
            eprintln!("{d}");
        }
    }
    ExitCode::from(result.exit_code() as u8)
}
