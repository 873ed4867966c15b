//! Command-line surface.

use clap::{Args, Parser, Subcommand, ValueEnum};

use catconv::verify::{IdentityId, Mode};

#[derive(Debug, Parser)]
#[command(
    name = "catconv",
    about = "Exact verification of Catalan / central-binomial convolution identities on lattice paths",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run identity checks and report each index
    Verify(VerifyArgs),
    /// List one path family in lexicographic order
    Enumerate(EnumerateArgs),
    /// Apply a decomposition map (or, with --invert, its inverse)
    Decompose(DecomposeArgs),
    /// Print the even-zeroed path-counting triangle
    Triangle(TriangleArgs),
    /// Write an SVG rendering of a decomposition or of the triangle
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity to check: thm1, thm2, thm8, thm9, lemma3, lemma4, lemma5,
    /// lemma6a, lemma6b, lemma7, cor10, equiv-1-2, z-recursion,
    /// sixteen-recursion or wrong-extensions
    #[arg(long, value_parser = parse_identity)]
    pub identity: IdentityId,

    /// Single index to check (shorthand for --range N..N)
    #[arg(long, conflicts_with = "range", required_unless_present = "range")]
    pub n: Option<u64>,

    /// Inclusive index range A..B
    #[arg(long, value_parser = parse_range)]
    pub range: Option<(u64, u64)>,

    /// numeric, exhaustive, or both (runs every mode the identity has)
    #[arg(long, default_value = "both", value_parser = parse_mode)]
    pub mode: Mode,

    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    pub family: Family,

    /// Length for --family paths; parameter for balanced/dyck; family
    /// index for even-zeroed (paths of length 4n)
    #[arg(long)]
    pub n: usize,

    /// Stop after this many paths
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long, value_enum)]
    pub map: MapKind,

    /// One UD-string for chi/psi, two for theorem9. With --invert: signed
    /// items such as '+(UD)' '-()' for chi/psi, two UD-strings for theorem9.
    /// Items may start with '-', so put --invert before --input
    #[arg(long, num_args = 1.., required = true, allow_hyphen_values = true)]
    pub input: Vec<String>,

    /// Apply the inverse map
    #[arg(long)]
    pub invert: bool,
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    /// Number of length-4 blocks: the grid covers positions t <= 4 * rows
    #[arg(long)]
    pub rows: usize,

    #[arg(long, value_enum, default_value_t = TriangleFormat::Table)]
    pub format: TriangleFormat,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long, value_enum)]
    pub what: RenderWhat,

    /// UD-string to decompose (required for --what decomposition)
    #[arg(long)]
    pub input: Option<String>,

    /// Decomposition map to draw
    #[arg(long, value_enum, default_value_t = DecompositionMap::Chi)]
    pub map: DecompositionMap,

    /// Triangle size (required for --what triangle)
    #[arg(long)]
    pub rows: Option<usize>,

    /// Output file
    #[arg(long)]
    pub out: std::path::PathBuf,

    /// Omit forbidden triangle nodes instead of striking them through
    #[arg(long)]
    pub hide_forbidden: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Paths,
    Balanced,
    Dyck,
    #[value(name = "even-zeroed")]
    EvenZeroed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    Chi,
    Psi,
    Theorem9,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TriangleFormat {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderWhat {
    Decomposition,
    Triangle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecompositionMap {
    Chi,
    Psi,
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse()
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

/// Inclusive range `A..B`.
fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (from, to) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got '{s}'"))?;
    let from = from
        .trim()
        .parse::<u64>()
        .map_err(|e| format!("bad range start '{from}': {e}"))?;
    let to = to
        .trim()
        .parse::<u64>()
        .map_err(|e| format!("bad range end '{to}': {e}"))?;
    Ok((from, to))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("0..10").unwrap(), (0, 10));
        assert_eq!(parse_range("7..7").unwrap(), (7, 7));
        assert!(parse_range("3").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn verify_requires_index_or_range() {
        use clap::Parser;
        assert!(Cli::try_parse_from(["catconv", "verify", "--identity", "thm1"]).is_err());
        assert!(Cli::try_parse_from([
            "catconv", "verify", "--identity", "thm1", "--n", "2", "--range", "0..3"
        ])
        .is_err());
        assert!(Cli::try_parse_from([
            "catconv", "verify", "--identity", "thm1", "--range", "0..3"
        ])
        .is_ok());
    }
}
