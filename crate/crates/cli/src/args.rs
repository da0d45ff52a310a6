//! Argument definitions. Configuration is flags only.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, Parser)]
#[command(name = "trinorm", version, about = "Equilateral ideal triangles on H/Γ(2) and norms of primes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a prime as a norm from Z[ω] or Z[i].
    Represent {
        #[arg(value_parser = positive_integer)]
        p: BigInt,
        #[arg(long, value_enum)]
        ring: RingArg,
        /// Print the witness and its certificate as JSON.
        #[arg(long)]
        json: bool,
    },
    /// List the triangles of λ-length p incident to ∞.
    Triangles {
        #[arg(value_parser = positive_integer)]
        p: BigInt,
        /// Group the triangles into ψ-orbits and show barycenters of fixed ones.
        #[arg(long)]
        orbits: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check everything for all primes up to --max. Without --out the CSV goes to stdout.
    Verify {
        #[arg(long)]
        max: u64,
        /// Directory for report.csv and summary.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw Ford circles, the lifts of the arcs at ∞ and the triangles as SVG.
    Render {
        #[arg(value_parser = positive_integer)]
        p: BigInt,
        #[arg(long)]
        out: PathBuf,
        /// Real interval to draw, e.g. `--window 0 2` or `--window 1/3 5/3`.
        #[arg(long, num_args = 2, allow_hyphen_values = true, value_names = ["A", "B"], value_parser = rational)]
        window: Option<Vec<BigRational>>,
        /// Largest denominator of the Ford circles drawn.
        #[arg(long = "den-limit")]
        den_limit: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Eisenstein,
    Gaussian,
}

fn positive_integer(s: &str) -> Result<BigInt, String> {
    let n: BigInt = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if n < BigInt::from(1) {
        return Err(format!("`{s}` is not positive"));
    }
    Ok(n)
}

fn rational(s: &str) -> Result<BigRational, String> {
    s.parse().map_err(|_| format!("`{s}` is not a rational number"))
}
