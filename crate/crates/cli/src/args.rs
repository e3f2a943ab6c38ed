use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "conicgin", version, about = "Gins, Betti tables and limiting shapes of fat points on a conic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reverse-lex generic initial ideal of I^(m).
    Gin(GinArgs),
    /// Betti table of I^(m) from the closed form and/or the recursion.
    Resolve(ResolveArgs),
    /// Scaled staircases for m = 1..m_max against the limiting shape.
    Limit(LimitArgs),
    /// Run every check family for one r and exit nonzero on failure.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GinMethod {
    Oracle,
    Hilbert,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ResolveMethod {
    Closed,
    Recursion,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, default_value_t = 32003)]
    pub prime: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub trials: u32,
    /// Worker threads for sweeps (rayon pool size).
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, default_value = "out")]
    pub out_dir: PathBuf,
    /// Artifacts to write; all applicable ones when omitted.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub format: Vec<Format>,
}

#[derive(Debug, Clone, Args)]
pub struct GinArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long, value_enum, default_value_t = GinMethod::Both)]
    pub method: GinMethod,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ResolveArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long, value_enum, default_value_t = ResolveMethod::Both)]
    pub method: ResolveMethod,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LimitArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub m_max: u32,
    /// Keep only cells with a closed-form certificate (even m for odd r)
    /// and require the certificate to hold.
    #[arg(long)]
    pub certify: bool,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 4)]
    pub r: u32,
    #[arg(long, default_value_t = 4)]
    pub m_max: u32,
    #[command(flatten)]
    pub common: CommonArgs,
}
