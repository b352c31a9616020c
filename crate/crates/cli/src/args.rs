use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, Parser)]
#[command(name = "cubic3", version, about = "Exact computations with integral cubic forms")]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for searches (overridden by CUBIC3_THREADS).
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, clap::Args)]
pub struct FormArg {
    /// A homogeneous cubic, e.g. "x^3 + y^3 + z^3" or "x0^2*x1 - 3*x1^3".
    #[arg(allow_hyphen_values = true)]
    pub form: String,

    /// Number of variables, when the form does not mention all of them.
    #[arg(long)]
    pub nvars: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Discriminant of a binary cubic; S, T and the discriminant of a ternary one.
    Invariants(FormArg),
    /// Rank of the Hessian matrix at a point.
    Rank {
        #[command(flatten)]
        form: FormArg,
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        point: Ints,
    },
    /// Substitute x -> M x.
    Act {
        #[command(flatten)]
        form: FormArg,
        /// Rows separated by ';', entries by ','.
        #[arg(long, value_parser = parse_matrix, allow_hyphen_values = true)]
        matrix: Rows,
    },
    /// Read off the reduced triple, or search for triples with --radius.
    Reduce {
        #[command(flatten)]
        form: FormArg,
        #[arg(long)]
        radius: Option<u32>,
    },
    /// Decide whether two forms in reduced shape have equivalent triples.
    Equiv {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[arg(long, default_value_t = 5)]
        radius: u32,
    },
    /// Reduced forms of a x^3 + b x^2 y + c y^3 reachable with bounded entries.
    EnumerateBinary {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        c: BigInt,
        #[arg(long, default_value_t = 20)]
        bound: u32,
    },
    /// Primitive points of small Hessian rank in a box.
    Lowrank {
        #[command(flatten)]
        form: FormArg,
        #[arg(long, default_value_t = 1)]
        max_rank: usize,
        #[arg(long, default_value_t = 5)]
        bound: u32,
    },
    /// Normalize a form along the line x2 = .. = xn = 0.
    NormalizeLine(FormArg),
    /// Largest |a| over reduced triples found within the radius.
    EstimateS {
        #[command(flatten)]
        form: FormArg,
        #[arg(long, default_value_t = 3)]
        radius: u32,
        /// Also group the triples into equivalence classes.
        #[arg(long)]
        classes: bool,
    },
    /// Split off a x0^3 at a point of Hessian rank at most 1.
    ExtractPoint {
        #[command(flatten)]
        form: FormArg,
        /// Without a point, every candidate in the box of --radius is tried.
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        point: Option<Ints>,
        #[arg(long, default_value_t = 3)]
        radius: u32,
    },
    /// Reduced forms of a x^3 + b x^2 y + x^2 z - 3 y^2 z from Pell solutions.
    Pell {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Built-in worked examples.
    Fixtures {
        #[arg(default_value = "blowup-p3")]
        name: String,
    },
    /// Replay a scenario file of blow-ups and contractions.
    Simulate { file: PathBuf },
    /// Topological bounds, basket statistics and Riemann-Roch.
    Bounds {
        #[arg(long)]
        b2: BigInt,
        #[arg(long)]
        b3: BigInt,
        #[arg(long, default_value = "0")]
        s: BigInt,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        k3: BigRational,
        /// K . c2
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        kc2: BigRational,
        /// Comma-separated indices.
        #[arg(long, value_parser = parse_indices)]
        basket: Option<Indices>,
    },
}

#[derive(Clone, Debug)]
pub struct Ints(pub Vec<BigInt>);

#[derive(Clone, Debug)]
pub struct Rows(pub Vec<Vec<BigInt>>);

#[derive(Clone, Debug)]
pub struct Indices(pub Vec<u32>);

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("not an integer: {t:?}")))
        .collect()
}

fn parse_ints(s: &str) -> Result<Ints, String> {
    parse_list(s).map(Ints)
}

fn parse_indices(s: &str) -> Result<Indices, String> {
    parse_list(s).map(Indices)
}

fn parse_matrix(s: &str) -> Result<Rows, String> {
    s.split(';').map(parse_list).collect::<Result<_, _>>().map(Rows)
}
