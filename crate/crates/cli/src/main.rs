use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "loopcohom", version, about = "Exact F2 derived functors of de Rham type functors")]
struct Cli {
    /// Worker threads for per-degree computations.
    #[arg(long, global = true, env = "LOOPCOHOM_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension table of H_i(Lambda; F)^t through a total degree.
    Homology(HomologyArgs),
    /// Compare the assembled series of ell with the closed forms.
    VerifyCollapse(SphereArgs),
    /// Dimensions of the truncated ell presentation against the filtration.
    EllDims(EllArgs),
    /// Print a closed form or the series of a computed table.
    Series(SeriesArgs),
    /// Print the resolution or a functor applied to an algebra.
    Dump(DumpArgs),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct SphereArgs {
    /// Degree of the sphere class.
    #[arg(long = "s", default_value_t = 2)]
    pub s: u32,
    /// Largest total degree.
    #[arg(long = "N", default_value_t = 10)]
    pub n: u32,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Normalized,
    Moore,
    Unnormalized,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct HomologyArgs {
    /// omegabar | z | b | h | omegatilde
    #[arg(long, default_value = "omegabar")]
    pub functor: String,
    #[command(flatten)]
    pub sphere: SphereArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Normalized)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct EllArgs {
    /// Algebra spec JSON; defaults to F2[x] with |x| = 2.
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    #[arg(long = "N", default_value_t = 10)]
    pub n: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Closed form: omegabar | omegatilde | b | ell | freeloop | borelCC.
    #[arg(long, conflicts_with = "functor")]
    pub name: Option<String>,
    /// Computed table to sum by total degree instead.
    #[arg(long)]
    pub functor: Option<String>,
    #[command(flatten)]
    pub sphere: SphereArgs,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct DumpArgs {
    #[command(subcommand)]
    pub what: DumpWhat,
}

#[derive(Subcommand, Debug)]
pub enum DumpWhat {
    /// Generators, faces and degeneracies of the resolution.
    Resolution {
        #[arg(long = "s", default_value_t = 2)]
        s: u32,
        /// Highest level.
        #[arg(long, default_value_t = 2)]
        level: usize,
    },
    /// Basis of a functor applied to an algebra, degree by degree.
    Functor {
        /// omegabar | omegatilde | omegatw | ell | z | b | h
        #[arg(long, default_value = "omegabar")]
        functor: String,
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long = "N", default_value_t = 6)]
        n: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Homology(a) => commands::homology(&a),
        Command::VerifyCollapse(a) => commands::verify_collapse(a),
        Command::EllDims(a) => commands::ell_dims(&a),
        Command::Series(a) => commands::series(&a),
        Command::Dump(a) => commands::dump(&a),
    };
    match result {
        Ok(commands::Outcome::Pass) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
