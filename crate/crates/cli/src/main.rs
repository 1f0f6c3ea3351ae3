//! `k4c`: JSON front-end to k4c-core.
//!
//! Exit codes: 0 success, 1 a negative answer (a property fails, a formula
//! is refuted, a sentence fails), 2 bad input.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use input::{FormulaArgs, SentenceArgs};

#[derive(Parser, Debug)]
#[command(
    name = "k4c",
    version,
    about = "Transitive modal logics of bounded circumference"
)]
pub struct Cli {
    /// Print compact rather than indented JSON.
    #[arg(long, global = true)]
    pub compact: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a formula and report its primitive form and subformulas.
    Parse(FormulaArgs),
    /// Frame properties, validity and clusters.
    #[command(subcommand)]
    Frame(FrameCommand),
    /// Filter a model through the subformula closure of some formulas, and
    /// optionally refine clusters down to size n.
    Filter(FilterArgs),
    /// Search for a countermodel in a logic.
    Decide(DecideArgs),
    /// A cycle-axiom instance separating two logics, with its countermodel.
    Separate(SeparateArgs),
    /// Finite topological spaces.
    #[command(subcommand)]
    Topo(TopoCommand),
    /// Finite modal algebras.
    #[command(subcommand)]
    Alg(AlgCommand),
}

#[derive(Args, Debug)]
pub struct LogicArgs {
    /// Circumference bound.
    #[arg(long)]
    pub n: usize,
    /// Extensions: d, t, three, m, e (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub ext: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum FrameCommand {
    /// Check a frame property.
    Check {
        #[arg(long)]
        file: PathBuf,
        /// transitive, weaklyTransitive, reflexive, irreflexive, serial,
        /// antisymmetric, weaklyConnected, connected, pointGenerated
        #[arg(long)]
        prop: String,
    },
    /// Validity of a formula on a frame, or membership of the frame in a
    /// logic when only --n is given.
    Validate {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        formula: FormulaArgs,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        ext: Vec<String>,
        #[arg(long, default_value_t = k4c_core::kripke::DEFAULT_VALUATION_CAP)]
        valuation_cap: u128,
    },
    /// Cluster decomposition.
    Clusters {
        #[arg(long)]
        file: PathBuf,
        /// Print the frame in DOT instead.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Base,
    Reflexive,
    Linear,
}

#[derive(Args, Debug)]
pub struct FilterArgs {
    /// Model file.
    #[arg(long)]
    pub file: PathBuf,
    /// Formulas whose subformula closure is filtered through (repeatable).
    #[arg(long = "phi", required = true)]
    pub phi: Vec<String>,
    /// Refine clusters to at most n classes.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = VariantArg::Base)]
    pub variant: VariantArg,
    /// Shuffle the linear variant's chain with this seed; ascending otherwise.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundArg {
    Primitive,
    Reduced,
}

#[derive(Args, Debug)]
pub struct DecideArgs {
    #[command(flatten)]
    pub logic: LogicArgs,
    #[command(flatten)]
    pub formula: FormulaArgs,
    #[arg(long, default_value_t = 5)]
    pub max_worlds: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_frames: usize,
    #[arg(long, default_value_t = k4c_core::kripke::DEFAULT_VALUATION_CAP)]
    pub valuation_cap: u128,
    /// Search up to the completeness bound and allow a Theorem verdict.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, value_enum, default_value_t = BoundArg::Primitive)]
    pub bound: BoundArg,
    /// Print the countermodel frame in DOT instead.
    #[arg(long)]
    pub dot: bool,
}

#[derive(Args, Debug)]
pub struct SeparateArgs {
    #[arg(long)]
    pub n: usize,
    /// The larger logic; defaults to n + 1.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub dot: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SemanticsArg {
    /// Diamond as closure.
    C,
    /// Diamond as derived set.
    D,
}

#[derive(Subcommand, Debug)]
pub enum TopoCommand {
    /// A separation property or hereditary irresolvability.
    Check {
        /// Space file, or a quasi-order frame file.
        #[arg(long)]
        file: PathBuf,
        /// T0, TD, T1, scattered, weaklyScattered
        #[arg(long, conflicts_with = "hered_irresolvable")]
        prop: Option<String>,
        /// No non-empty subspace is k-resolvable.
        #[arg(long)]
        hered_irresolvable: Option<usize>,
        #[arg(long, default_value_t = k4c_core::topology::DEFAULT_SEARCH_CAP)]
        cap: u128,
    },
    /// Validity of a formula on a space.
    Validate {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        formula: FormulaArgs,
        #[arg(long, value_enum, default_value_t = SemanticsArg::C)]
        semantics: SemanticsArg,
        #[arg(long, default_value_t = k4c_core::kripke::DEFAULT_VALUATION_CAP)]
        valuation_cap: u128,
    },
    /// Whether a subspace splits into n disjoint dense subsets.
    Resolvable {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        n: usize,
        /// Points of the subspace (comma separated); the whole space by default.
        #[arg(long, value_delimiter = ',')]
        subspace: Option<Vec<usize>>,
        #[arg(long, default_value_t = k4c_core::topology::DEFAULT_SEARCH_CAP)]
        cap: u128,
    },
}

#[derive(Subcommand, Debug)]
pub enum AlgCommand {
    /// Validity of a formula, or truth of a universal sentence.
    Validate {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        formula: FormulaArgs,
        #[command(flatten)]
        sentence: SentenceArgs,
        #[arg(long, default_value_t = k4c_core::algebra::DEFAULT_TUPLE_CAP)]
        cap: u128,
    },
    /// Atom structure of an algebra.
    Dual {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Move a failure of a sentence to a complex algebra of a frame of
    /// circumference at most n.
    Transfer {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sentence: SentenceArgs,
        /// Witness file; found by search when absent.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, default_value_t = k4c_core::algebra::DEFAULT_TUPLE_CAP)]
        cap: u128,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(out) => {
            let text = match &out.body {
                commands::Body::Json(v) if cli.compact => serde_json::to_string(v),
                commands::Body::Json(v) => serde_json::to_string_pretty(v),
                commands::Body::Text(t) => Ok(t.clone()),
            }
            .expect("values serialize");
            println!("{text}");
            if out.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("k4c: {e}");
            ExitCode::from(2)
        }
    }
}
