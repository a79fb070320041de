use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bracekit::enumeration::Method;

#[derive(Parser, Debug)]
#[command(
    name = "bracekit",
    version,
    about = "Finite skew braces and Yang-Baxter solutions"
)]
pub struct Cli {
    #[command(flatten)]
    pub bounds: Bounds,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Bounds {
    /// Largest order for lattice, automorphism and weight searches.
    #[arg(long, global = true, default_value_t = bracekit::group::DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Largest order a product construction may produce.
    #[arg(long, global = true, default_value_t = bracekit::brace::DEFAULT_MAX_PRODUCT_ORDER)]
    pub max_product_order: usize,
    /// Largest permutation group `ybe group` will close.
    #[arg(long, global = true, default_value_t = bracekit::ybe::DEFAULT_MAX_PERMUTATION_GROUP)]
    pub max_perm_group: usize,
}

impl Bounds {
    pub fn limits(&self) -> bracekit::Limits {
        bracekit::Limits {
            max_order: self.max_order,
            max_product_order: self.max_product_order,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the skew brace axioms of a brace JSON file.
    Verify { brace: PathBuf },
    /// Print the invariants of a brace.
    Report {
        brace: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the ideal lattice with flags.
    Ideals {
        brace: PathBuf,
        /// Also write the Hasse diagram as a Graphviz file.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print Rad, Rad′, non-generators and the sum of small ideals.
    Radical {
        brace: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compute the weight with a generating-set certificate.
    Weight {
        brace: PathBuf,
        /// Search the brace itself instead of A/Rad(A).
        #[arg(long)]
        no_opt: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decompose A/Rad(A) into simple braces.
    Decompose {
        brace: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run every theorem check on a brace file or an enumerated directory.
    Theoremcheck {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all braces of order n.
    Enumerate {
        n: usize,
        #[arg(long, default_value = "holomorph", value_parser = parse_method)]
        method: Method,
        /// Write one brace JSON per class plus manifest.json.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
    },
    /// Invariants and theorem checks for every brace of order n.
    Sweep {
        n: usize,
        #[arg(long, default_value = "holomorph", value_parser = parse_method)]
        method: Method,
        /// Worker threads; output does not depend on it.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        no_cache: bool,
    },
    /// Set-theoretic solutions of the Yang-Baxter equation.
    #[command(subcommand)]
    Ybe(YbeCommand),
}

#[derive(Subcommand, Debug)]
pub enum YbeCommand {
    /// Check bijectivity, the braid relation, non-degeneracy and involutivity.
    Check {
        solution: PathBuf,
        /// Print failure witnesses.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// The solution associated with a brace.
    FromBrace {
        brace: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// The derived solution, with quandle and indecomposability flags.
    Derived {
        solution: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// The permutation group generated by the σ maps and the solution orbits.
    Group {
        solution: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}
