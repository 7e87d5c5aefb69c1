use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use convspace::suite::Instance;

/// Law checking, barycenters, hull splitting and convexity checks over
/// exact rationals.
#[derive(Debug, Parser)]
#[command(name = "convspace", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Sampling {
    /// Seed for the case generator.
    #[arg(long, env = "CONVSPACE_SEED", default_value_t = 42)]
    pub seed: u64,

    /// Cases per law.
    #[arg(long, default_value_t = 500)]
    pub cases: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every law checker on an instance; exit 1 on a counterexample.
    Laws {
        #[arg(long, value_parser = PossibleValuesParser::new(Instance::NAMES))]
        instance: String,

        #[command(flatten)]
        sampling: Sampling,
    },

    /// Evaluate the multiary combination of points:
    /// {"weights": [...], "points": [...]}.
    Barycenter {
        /// JSON file, inline JSON, or `-` for stdin.
        #[arg(long)]
        input: String,
    },

    /// Split a hull witness {"weights": [...], "generators": [...]} into an X
    /// part and a Y part.
    HullSplit {
        /// JSON file, inline JSON, or `-` for stdin. May also carry
        /// "x_indices", "default_x" and "default_y".
        #[arg(long)]
        input: String,

        /// Indices of the generators that lie in X.
        #[arg(long = "x", value_delimiter = ',')]
        x_indices: Option<Vec<usize>>,

        /// Point (inline JSON) used for X when it receives no mass.
        #[arg(long, allow_hyphen_values = true)]
        default_x: Option<String>,

        /// Point (inline JSON) used for Y when it receives no mass.
        #[arg(long, allow_hyphen_values = true)]
        default_y: Option<String>,
    },

    /// Divergence D(P || Q) of two distributions, given as JSON files or
    /// inline JSON ({"weights": [...]} or a bare array).
    Divergence {
        #[arg(long)]
        p: String,

        #[arg(long)]
        q: String,

        /// Logarithm base.
        #[arg(long, value_enum, default_value_t = Base::Two)]
        base: Base,
    },

    /// Sample the convexity (or concavity) inequality of a catalog function
    /// and run a finite-difference test on a grid.
    ConvexCheck {
        /// One of log_ext, ln_ext, neg_log_ext, square, abs, xlogx, sin,
        /// linear, exp.
        #[arg(long = "fn")]
        function: String,

        #[arg(long, value_enum, default_value_t = ModeArg::Convex)]
        mode: ModeArg,

        /// Open interval `lo:hi`; defaults to the function's natural domain.
        #[arg(long, value_parser = parse_interval, allow_hyphen_values = true)]
        interval: Option<(f64, f64)>,

        /// Grid points for the second-difference test.
        #[arg(long, default_value_t = 1000)]
        grid: usize,

        /// Additive slack for comparisons.
        #[arg(long, default_value_t = 1e-9, allow_hyphen_values = true)]
        slack: f64,

        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Base {
    #[value(name = "2")]
    Two,
    #[value(name = "e")]
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Convex,
    Concave,
}

fn parse_interval(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got `{s}`"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|e| format!("`{t}` is not a number: {e}"))
    };
    Ok((num(lo)?, num(hi)?))
}
