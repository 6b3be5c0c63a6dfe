use clap::{Args, Parser, Subcommand, ValueEnum};
use qpart_core::Theorem;

/// Exact q-series expansion of prod (1 - q^n)^(-r) and congruence checks
/// for its coefficients p_r(n).
#[derive(Debug, Parser)]
#[command(name = "qpart", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityName {
    Dissection5,
    LemmaH5,
    Frobenius,
    Jacobi,
    RamanujanPm4,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print p_r(0), ..., p_r(terms - 1).
    Expand(ExpandArgs),
    /// Check p_r(A n + B) = 0 (mod M) for 0 <= n <= nmax.
    Verify(VerifyArgs),
    /// Check every claim of one theorem family over a range of lambda.
    Theorem(TheoremArgs),
    /// Check one of the built-in q-series identities.
    Identity(IdentityArgs),
    /// Search offsets B with p_r(A n + B) = 0 (mod M) for every n <= nmax.
    Scan(ScanArgs),
    /// Count p_r(n) by brute force, without series arithmetic.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub r: i64,
    #[arg(long, env = "QPART_DEFAULT_TERMS", default_value_t = 500)]
    pub terms: i64,
    /// Reduce coefficients modulo this value.
    #[arg(long = "mod", allow_negative_numbers = true)]
    pub modulus: Option<i64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub r: i64,
    #[arg(long = "A", allow_negative_numbers = true)]
    pub step: i64,
    #[arg(long = "B", allow_negative_numbers = true)]
    pub offset: i64,
    #[arg(long = "M", allow_negative_numbers = true)]
    pub modulus: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub nmax: i64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    /// T1 to T5.
    #[arg(long)]
    pub id: Theorem,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda_min: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda_max: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub nmax: i64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    #[arg(long, value_enum)]
    pub name: IdentityName,
    #[arg(long, env = "QPART_DEFAULT_TERMS", default_value_t = 500)]
    pub terms: i64,
    /// Power of the eta quotient, for lemma-h5.
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
    /// Prime, for frobenius.
    #[arg(long, allow_negative_numbers = true)]
    pub p: Option<i64>,
    /// Primes congruent to 5 mod 6, for ramanujan-pm4.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub w: Vec<i64>,
    /// Largest n checked, for ramanujan-pm4.
    #[arg(long, default_value_t = 50, allow_negative_numbers = true)]
    pub nmax: i64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub r_min: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub r_max: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub modulus: i64,
    #[arg(long = "A", allow_negative_numbers = true)]
    pub step: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub nmax: i64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub n: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub r: i64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

impl Command {
    pub fn format(&self) -> Format {
        match self {
            Command::Expand(a) => a.format,
            Command::Verify(a) => a.format,
            Command::Theorem(a) => a.format,
            Command::Identity(a) => a.format,
            Command::Scan(a) => a.format,
            Command::Oracle(a) => a.format,
        }
    }
}
