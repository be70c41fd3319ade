use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use gitquot::exact::DEFAULT_SUBSPACE_CAP;

#[derive(Parser, Debug)]
#[command(name = "gitquot", version, about = "Semistability and quotient certificates for morphisms of sums of line bundles")]
pub struct Cli {
    /// Prime field used by the decision procedures.
    #[arg(long, global = true, default_value_t = 2)]
    pub prime: u32,
    /// Seed for randomized steps; recorded in every report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on the number of subspaces any single enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSPACE_CAP)]
    pub budget: u64,
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Irregular values and chambers of a morphism type.
    Chambers(ShapeArgs),
    /// King's criterion, cross-checked against the block-form test.
    Check(CheckArgs),
    /// The reductive embedding and the semistability test on that side.
    Embed(CheckArgs),
    /// Linear-algebra constants by subspace search.
    Constants(ConstantsArgs),
    /// Evaluate a quotient-existence criterion.
    Certify(CertifyArgs),
    /// Explicit morphism O(-d1) + O(-d2) -> n O.
    Construct(ConstructArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Chambers(_) => "chambers",
            Command::Check(_) => "check",
            Command::Embed(_) => "embed",
            Command::Constants(_) => "constants",
            Command::Certify(_) => "certify",
            Command::Construct(_) => "construct",
        }
    }
}

/// A morphism type, from a JSON file or from the individual parameters.
#[derive(Args, Debug, Clone, Default)]
pub struct ShapeArgs {
    /// JSON file `{"r": .., "blocks": [{"degree": .., "mult": ..}], "n": ..}`.
    #[arg(long = "type")]
    pub type_file: Option<PathBuf>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',')]
    pub mults: Option<Vec<usize>>,
    #[arg(long)]
    pub d1: Option<u32>,
    #[arg(long)]
    pub d2: Option<u32>,
    #[arg(long)]
    pub d3: Option<u32>,
    /// Multiplicity of the first block.
    #[arg(long)]
    pub m: Option<usize>,
    /// Multiplicity of the second block (two-block types).
    #[arg(long)]
    pub m2: Option<usize>,
    /// Degree parameter of the plane shapes.
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct PolarizationArgs {
    #[arg(long)]
    pub lambda1: Option<String>,
    #[arg(long)]
    pub lambda2: Option<String>,
    /// All weights, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub lambdas: Option<Vec<String>>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Morphism JSON, bare or as written by `construct`.
    #[arg(long)]
    pub morphism: PathBuf,
    #[command(flatten)]
    pub polarization: PolarizationArgs,
}

#[derive(Args, Debug)]
pub struct ConstantsArgs {
    /// `s7` for O(-d-2) + 3 O(-d) on the plane; otherwise give a type.
    #[arg(long)]
    pub shape: Option<String>,
    #[command(flatten)]
    pub ty: ShapeArgs,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    /// JSON file `{"type", "polarization", "claim", "constants"?}`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub claim: Option<String>,
    /// Constant table JSON for the general two-block criterion.
    #[arg(long)]
    pub constants: Option<PathBuf>,
    #[command(flatten)]
    pub ty: ShapeArgs,
    #[command(flatten)]
    pub polarization: PolarizationArgs,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long)]
    pub d1: u32,
    #[arg(long)]
    pub d2: u32,
    #[arg(long)]
    pub n: usize,
    /// Build the properly semistable variant with this many nonzero entries.
    #[arg(long)]
    pub kappa: Option<usize>,
}
