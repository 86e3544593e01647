use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Majorana-star decomposition of geodesics and null phase curves.
///
/// Angles are in radians. Exit status: 0 success or pass, 1 verification
/// failure, 2 usage or input error.
#[derive(Debug, Parser)]
#[command(name = "msr", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stars of a single state
    Decompose(DecomposeArgs),
    /// Geodesic between two states and its star tracks
    Geodesic(GeodesicArgs),
    /// Null phase curve with star tracks and verification report
    Npc(NpcArgs),
    /// Null-phase test of a curve file
    Verify(VerifyArgs),
    /// SVG picture of a track or constellation file
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write here instead of stdout
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// State JSON `{"dim", "re", "im"}`
    #[arg(conflicts_with = "coeffs", required_unless_present = "coeffs")]
    pub state: Option<PathBuf>,
    /// Comma-separated amplitudes such as "0.6,0.8i" or "1,0,0"
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct GeodesicArgs {
    /// Hilbert-space dimension (canonical end states)
    #[arg(long)]
    pub dim: Option<usize>,
    /// Angle θ = arccos⟨ψ1|ψ2⟩ in (0, π/2) (canonical end states)
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    #[arg(long, default_value_t = 401)]
    pub samples: usize,
    /// JSON `{"psi1": state, "psi2": state}` with arbitrary end states
    #[arg(long, conflicts_with_all = ["dim", "theta"])]
    pub end_states: Option<PathBuf>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NpcKind {
    Dual,
    Selfdual,
    Example,
}

#[derive(Debug, Args)]
pub struct NpcArgs {
    #[arg(long, value_enum)]
    pub kind: NpcKind,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: f64,
    /// Phase on the third component of the example curve
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub chi: f64,
    /// CSV with header `s,g` sampled on a uniform grid over [0, θ]
    #[arg(long)]
    pub g: Option<PathBuf>,
    /// Profile JSON `{"s", "eta", "gamma"}` for dual and self-dual curves
    #[arg(long, conflicts_with = "g")]
    pub profile: Option<PathBuf>,
    #[arg(long, default_value_t = 401)]
    pub samples: usize,
    #[arg(long, default_value_t = 10_000)]
    pub triples: usize,
    /// Verification seed; defaults to $MSR_SEED, then a fixed value
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Curve JSON `{"params", "states"}` or any JSON with a "curve" field
    pub curve: PathBuf,
    #[arg(long, default_value_t = 10_000)]
    pub triples: usize,
    /// Defaults to $MSR_SEED, then a fixed value
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Track JSON (from `geodesic` or `npc`) or constellation JSON
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
    /// Direction towards the viewer, "x,y,z"
    #[arg(long, default_value = "1,0.6,0.4", allow_hyphen_values = true)]
    pub view: String,
    #[arg(long, default_value_t = 480)]
    pub size: u32,
    /// Leave out the sphere outline and reference circles
    #[arg(long)]
    pub no_sphere: bool,
}
