mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "arcsphere", version, about = "Arc complexes of bordered surfaces")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the arc complex of a surface, e.g. "F g=0 s=2 d=1,1".
    Classify { spec: String },
    /// Arc complex of the n-gon.
    Polygon {
        n: usize,
        /// Also compute integral homology.
        #[arg(long)]
        homology: bool,
        /// Largest polygon accepted.
        #[arg(long, default_value_t = arcsphere::polygon::DEFAULT_CAP)]
        cap: usize,
    },
    /// Built-in complexes of small surfaces.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Dehn-Thurston coordinates on the pair of pants, as "m1,m2,m3;t1,t2,t3".
    Dt {
        #[command(subcommand)]
        action: DtAction,
    },
    /// Integral homology of a complex file ("-" reads stdin).
    Homology { file: String },
    /// Join of two complex files.
    Join { first: String, second: String },
    /// Suspension of a complex file.
    Suspend { file: String },
    /// Barycentric subdivision of a simplicial complex file.
    Subdivide { file: String },
    /// Split the boundary of a rank-annotated complex file.
    Split { file: String },
    /// Run every acceptance check and print the report.
    VerifyAll(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Names with surface, dimension and verdict.
    List,
    /// Emit an entry as complex JSON.
    Build { name: String },
    /// Check an entry, or "all".
    Verify { name: String },
}

#[derive(Subcommand, Debug)]
enum DtAction {
    /// Canonical representative and the twists removed.
    Normalize { coords: String },
    /// Check the coordinate constraints.
    Validate { coords: String },
    /// Weights of the arc types realizing the intersection numbers.
    ArcTypes { coords: String },
    /// Point of the three-fold circle join.
    JoinPoint { coords: String },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = arcsphere::verify::VerifyOptions::default().seed)]
    seed: u64,
    /// Largest polygon used.
    #[arg(long, default_value_t = arcsphere::polygon::DEFAULT_CAP)]
    cap: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::run(&cli);
    match outcome {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
