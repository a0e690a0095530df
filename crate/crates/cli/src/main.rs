use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rootfold::{Bounds, DEFAULT_MAX_ORDER};
use rootfold_cli::{cmd_fold, cmd_gram, cmd_h1, cmd_lemma34, cmd_verify, cmd_weyl, timed, Format};

/// Root lattices, Weyl groups, diagram folding and non-abelian H1.
///
/// Diagrams are written like `D4` or `A2+A2`; permutations in 1-based
/// cycle notation like `(1 3 4)` or `()`.
#[derive(Parser)]
#[command(name = "rootfold", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Largest Weyl group to enumerate.
    #[arg(long, global = true, env = "ROOTFOLD_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER as u64)]
    max_order: u64,
    /// Largest acting group of diagram automorphisms.
    #[arg(long, global = true, env = "ROOTFOLD_MAX_GROUP", default_value_t = 48)]
    max_group: usize,
    /// Report wall-clock time (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Intersection matrix of a diagram.
    Gram { diagram: String },
    /// Enumerate a Weyl group.
    Weyl {
        diagram: String,
        /// List conjugacy classes of involutions.
        #[arg(long)]
        involutions: bool,
        /// Report whether -I lies in the group.
        #[arg(long)]
        minus_identity: bool,
    },
    /// Involution classes of a Weyl group (same as `weyl --involutions`).
    Involutions { diagram: String },
    /// Fold a diagram by a group of automorphisms.
    Fold {
        diagram: String,
        /// Generator of the acting group; repeat for more.
        #[arg(long = "action", required = true)]
        actions: Vec<String>,
    },
    /// Integrality of (C - I) A^-1 for every ADE automorphism.
    Lemma34 {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Non-abelian H1(G, W).
    H1 {
        diagram: String,
        #[arg(long = "action", required = true)]
        actions: Vec<String>,
        /// Also compute the kernel of H1(G, W) -> H1(G, GL).
        #[arg(long)]
        kernel: bool,
    },
    /// Run a kernel verification suite: `default`, `appendix-a`, or a path.
    Verify {
        #[arg(long, default_value = "default")]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = &cli.common;
    let bounds = Bounds {
        max_order: c.max_order as u128,
        max_group: c.max_group,
    };
    let result = timed(c.timing, || match &cli.command {
        Command::Gram { diagram } => cmd_gram(diagram),
        Command::Weyl {
            diagram,
            involutions,
            minus_identity,
        } => cmd_weyl(diagram, bounds, *involutions, *minus_identity),
        Command::Involutions { diagram } => cmd_weyl(diagram, bounds, true, false),
        Command::Fold { diagram, actions } => cmd_fold(diagram, actions, bounds),
        Command::Lemma34 { max_rank } => cmd_lemma34(*max_rank),
        Command::H1 {
            diagram,
            actions,
            kernel,
        } => cmd_h1(diagram, actions, *kernel, bounds),
        Command::Verify { suite } => cmd_verify(suite, bounds),
    });
    match result {
        Ok(report) => {
            print!("{}", report.render(c.format));
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
