use clap::{Parser, Subcommand};

use closed_vertex::cli;

/// Exact local invariants of three rational curves through a triple point.
#[derive(Parser)]
#[command(name = "closed-vertex", version, about)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant for one genus and degree triple.
    Vertex {
        g: u32,
        d1: u64,
        d2: u64,
        d3: u64,
        /// Include the reduction trace in the output.
        #[arg(long)]
        trace: bool,
        /// Output format: json (default), plain. The CLOSED_VERTEX_FORMAT
        /// environment variable sets the default.
        #[arg(long)]
        format: Option<String>,
    },
    /// Table of invariants for all g <= gmax, dmax >= d1 >= d2 >= d3 >= 0.
    Table {
        #[arg(long)]
        gmax: u32,
        #[arg(long)]
        dmax: u64,
        /// Output format: json (default), csv, plain.
        #[arg(long)]
        format: Option<String>,
    },
    /// Apply the Cremona involution to a curve class given as JSON.
    Cremona {
        /// Class JSON: {"d": int, "c": [6 ints]} on x, with an additional
        /// "f" object keyed "12".."34" on xhat.
        class_json: String,
        /// Which lattice the class lives in: x or xhat.
        #[arg(long, default_value = "x")]
        space: String,
    },
    /// Check that the configuration class decomposes only into the three
    /// central invariant curves.
    Oracle {
        d1: u64,
        d2: u64,
        d3: u64,
        /// List every decomposition found.
        #[arg(long)]
        list: bool,
    },
    /// Run a seeded nef certification: 6.1 for the anticanonical divisor,
    /// 6.2 for the pair divisors on the line blowup.
    Nef {
        #[arg(long)]
        lemma: String,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() {
    let args = Args::parse();
    let outcome = match &args.command {
        Command::Vertex {
            g,
            d1,
            d2,
            d3,
            trace,
            format,
        } => cli::cmd_vertex(*g, *d1, *d2, *d3, *trace, format.as_deref()),
        Command::Table { gmax, dmax, format } => cli::cmd_table(*gmax, *dmax, format.as_deref()),
        Command::Cremona { class_json, space } => cli::cmd_cremona(class_json, space),
        Command::Oracle { d1, d2, d3, list } => cli::cmd_oracle(*d1, *d2, *d3, *list),
        Command::Nef {
            lemma,
            samples,
            seed,
        } => cli::cmd_nef(lemma, *samples, *seed),
    };
    match outcome {
        Ok(stdout) => println!("{stdout}"),
        Err(cli::CliError::VerificationFailed(report)) => {
            println!("{report}");
            eprintln!("verification failed");
            std::process::exit(1);
        }
        Err(err) => {
            eprintln!("{err}");
            std::process::exit(err.exit_code());
        }
    }
}
