//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kurlab_core::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "kurlab",
    version,
    about = "Kuratowski monoids of polytopological spaces"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    #[command(flatten)]
    pub caps: Caps,

    #[command(subcommand)]
    pub command: Command,
}

/// Overrides for the resource caps; unset fields keep the library defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct Caps {
    /// Largest ground set of a space.
    #[arg(long, env = "KURLAB_MAX_GROUND", global = true, value_parser = clap::value_parser!(u32).range(1..=16))]
    pub max_ground: Option<u32>,

    /// Largest generated operator monoid.
    #[arg(long, global = true, value_parser = positive)]
    pub max_monoid: Option<usize>,

    /// Largest number of negative or positive letters in an enumeration.
    #[arg(long, global = true, value_parser = positive)]
    pub max_chain_side: Option<usize>,

    /// Largest free monoid materialized with its tables.
    #[arg(long, global = true, value_parser = positive)]
    pub max_free_monoid: Option<usize>,

    /// Largest number of witness components materialized at once.
    #[arg(long, global = true, value_parser = positive)]
    pub max_witness_pairs: Option<usize>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

impl Caps {
    pub fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_ground: self.max_ground.map_or(d.max_ground, |g| g as usize),
            max_monoid: self.max_monoid.unwrap_or(d.max_monoid),
            max_chain_side: self.max_chain_side.unwrap_or(d.max_chain_side),
            max_free_monoid: self.max_free_monoid.unwrap_or(d.max_free_monoid),
            max_witness_pairs: self.max_witness_pairs.unwrap_or(d.max_witness_pairs),
            ..d
        }
    }
}

/// A chain with `n` interiors and `p` closures.
#[derive(Debug, Clone, Copy, Args)]
pub struct ChainArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// K(n,p), or the grid of K(i,j) for i ≤ n, j ≤ p.
    Count {
        #[arg(long, required_unless_present = "grid")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "grid")]
        p: Option<usize>,
        /// Print the whole grid (defaults to 9 × 9).
        #[arg(long)]
        grid: bool,
    },
    /// List the Kuratowski words of a chain.
    Enumerate {
        #[command(flatten)]
        chain: ChainArgs,
        /// Also list the complemented words.
        #[arg(long)]
        full: bool,
    },
    /// Reduce a word to its normal form.
    Normalize {
        #[command(flatten)]
        chain: ChainArgs,
        word: String,
    },
    /// Decide whether two words are equal in the free monoid.
    Equal {
        #[command(flatten)]
        chain: ChainArgs,
        first: String,
        second: String,
    },
    /// Build the free Kuratowski monoid of a chain.
    Free {
        #[command(flatten)]
        chain: ChainArgs,
        /// Write the Hasse diagram as DOT to this file.
        #[arg(long, value_name = "FILE")]
        hasse: Option<PathBuf>,
        /// Fail unless every element is idempotent.
        #[arg(long)]
        check_idempotent: bool,
    },
    /// Generate the operator monoid of a space.
    Monoid {
        #[arg(long, value_name = "FILE")]
        space: PathBuf,
        /// Include the complement among the generators.
        #[arg(long)]
        complement: bool,
        #[arg(long, value_parser = positive)]
        max_size: Option<usize>,
    },
    /// Compare the monoids of a space with K(n) and 2 K(n).
    VerifyBound {
        #[arg(long, value_name = "FILE")]
        space: PathBuf,
    },
    /// Check saturation and the bound 1 + 6 m for m distinct topologies.
    Saturated {
        #[arg(long, value_name = "FILE")]
        space: PathBuf,
    },
    /// Separating witness spaces for the star chain of size n.
    Witness {
        #[arg(long)]
        n: usize,
        /// Check every pair of full words on its component.
        #[arg(long, conflicts_with = "separate")]
        certify: bool,
        /// Export the component separating two full words.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        separate: Option<Vec<String>>,
    },
    /// Exact checks of k(n) = K(n) / C(2n,n)² and its limit.
    Asympt {
        #[arg(long)]
        max: usize,
        /// Also bracket π · 9 n K(n) / 16^(n+1).
        #[arg(long)]
        stirling: bool,
    },
    /// Largest orbit of a set under the closures of two incomparable topologies.
    Search {
        #[arg(long)]
        ground: usize,
        /// Random samples for ground sets of more than three points.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Separate the 63 elements of FK(2,2) by four morphism images.
    Quadruples,
}
