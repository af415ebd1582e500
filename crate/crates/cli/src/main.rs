use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod lists;

/// Exact verification of trig identities in cyclotomic fields.
#[derive(Parser)]
#[command(name = "cyclotrig", version, about)]
struct Cli {
    /// Emit JSON lines instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide "<lhs> = <rhs>" exactly.
    Verify {
        identity: String,
    },
    /// Find the sign s with lhs = s q sqrt(m), if any.
    Sign {
        lhs: String,
        #[arg(long)]
        surd: u64,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        q: String,
    },
    /// Quadratic Gauss sums against their closed form.
    Gauss(GaussArgs),
    /// Nonzero squares mod n.
    Residues {
        #[arg(long)]
        n: u64,
    },
    /// Rebuild the two solution families and check every member.
    Families,
    /// Search for identities; one JSON object per line.
    Discover(DiscoverArgs),
    /// Double-precision value of an expression. Not certified.
    Eval {
        expr: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = true)]
struct GaussArgs {
    #[arg(long)]
    n: Option<u64>,
    /// Check every n from 1 to MAX.
    #[arg(long, value_name = "MAX")]
    table: Option<u64>,
}

#[derive(Args)]
struct DiscoverArgs {
    /// Denominators, e.g. 7,11.
    #[arg(long = "n", value_name = "LIST")]
    denominators: String,
    /// Sine coefficients, e.g. 4,-4 or ±4.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true, default_value = "±4")]
    coeffs: String,
    #[arg(long, value_name = "K", default_value_t = 1)]
    max_sin: usize,
    /// Squarefree odd m for the right-hand side.
    #[arg(long, value_name = "LIST")]
    surd: String,
    /// Rational multipliers of sqrt(m).
    #[arg(long, value_name = "LIST", allow_hyphen_values = true, default_value = "±1")]
    q: String,
    #[arg(long, value_name = "T", default_value_t = 1e-9)]
    tol: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = commands::Output { json: cli.json };
    let result = match cli.command {
        Command::Verify { identity } => commands::verify(&out, &identity),
        Command::Sign { lhs, surd, q } => commands::sign(&out, &lhs, surd, &q),
        Command::Gauss(g) => commands::gauss(&out, g.n, g.table),
        Command::Residues { n } => commands::residues(&out, n),
        Command::Families => commands::families(&out),
        Command::Discover(d) => commands::discover(&out, &d),
        Command::Eval { expr } => commands::eval(&out, &expr),
    };
    match result {
        Ok(ok) => ExitCode::from(if ok { 0 } else { 1 }),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
