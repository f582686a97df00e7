use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use k3poly::correspondence::{amoeba_map, derive_iso, search_sub_reflexive, verify_record, SearchLimits};
use k3poly::picard::picard_rank;
use k3poly::polytope::text::{format_lattice_points, format_points, parse_points};
use k3poly::{BigInt, Dataset, Error, Polytope, VerificationReport, WeightSystem};
use rayon::prelude::*;

// Infallible: writes into a String.
macro_rules! wln {
    ($($t:tt)*) => {{ let _ = writeln!($($t)*); }};
}
macro_rules! w {
    ($($t:tt)*) => {{ let _ = write!($($t)*); }};
}

#[derive(Parser)]
#[command(name = "k3poly", version, about = "Lattice polytopes of weighted K3 hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the correspondence table
    VerifyTable {
        /// Only records containing this family number
        #[arg(long)]
        row: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Dataset file to use instead of the built-in table
        #[arg(long)]
        data: Option<PathBuf>,
        /// Verify records concurrently
        #[arg(long)]
        parallel: bool,
    },
    /// Vertices of the full Newton polytope of a weight system
    Newton { weights: String },
    /// Vertices of the polar dual of the hull of a point file
    Dual { file: PathBuf },
    /// Whether the hull of a point file is reflexive
    Reflexive { file: PathBuf },
    /// Lattice points of the hull of a point file
    Points { file: PathBuf },
    /// Picard rank for a reflexive point file or a weight system
    Picard { input: String },
    /// Reflexive subpolytopes reachable by deleting vertices
    SearchSub {
        weights: String,
        #[arg(long, default_value_t = SearchLimits::default().max_depth)]
        max_depth: usize,
        #[arg(long, default_value_t = SearchLimits::default().max_results)]
        max_results: usize,
    },
    /// Linear map between the log spaces of two families of a row
    Amoeba {
        #[arg(long)]
        row: u32,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long)]
        data: Option<PathBuf>,
    },
}

/// Failures mapped to exit codes: 1 for verification, 2 for input.
enum Failure {
    Verification,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_polytope(path: &Path) -> Result<Polytope, Failure> {
    let pts = parse_points::<BigInt>(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(Polytope::hull(&pts)?)
}

fn load_dataset(path: Option<&Path>) -> Result<Dataset, Failure> {
    match path {
        None => Ok(Dataset::embedded()),
        Some(p) => Dataset::parse(&read(p)?).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
    }
}

fn available_ids(d: &Dataset) -> String {
    let ids: Vec<String> = d.ids().iter().map(u32::to_string).collect();
    format!("available ids: {}", ids.join(" "))
}

fn verify_table(row: Option<u32>, format: Format, data: Option<&Path>, parallel: bool, out: &mut String) -> Outcome {
    let dataset = load_dataset(data)?;
    let records: Vec<_> = match row {
        Some(id) => dataset.select(id),
        None => dataset.rows().iter().collect(),
    };
    if records.is_empty() {
        let what = row.map_or("the dataset is empty".to_string(), |id| format!("no record contains {id}"));
        return Err(Failure::Input(format!("{what}\n{}", available_ids(&dataset))));
    }
    let reports: Vec<VerificationReport> = if parallel {
        records.par_iter().map(|r| verify_record::<BigInt>(r)).collect()
    } else {
        records.iter().map(|r| verify_record::<BigInt>(r)).collect()
    };
    let passed = reports.iter().filter(|r| r.passed()).count();
    for r in &reports {
        match format {
            Format::Text => wln!(out, "{}", r.to_text()),
            Format::Kv => w!(out, "{}", r.to_kv()),
        }
    }
    match format {
        Format::Text => wln!(out, "{} reports, {passed} passed, {} failed", reports.len(), reports.len() - passed),
        Format::Kv => wln!(out, "summary.reports={}\nsummary.passed={passed}", reports.len()),
    }
    if passed == reports.len() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn newton(weights: &str, out: &mut String) -> Outcome {
    let p: Polytope = WeightSystem::parse(weights)?.newton_polytope()?;
    w!(out, "{}", format_points(p.vertices()));
    Ok(())
}

fn picard(input: &str, out: &mut String) -> Outcome {
    let p = if Path::new(input).exists() {
        load_polytope(Path::new(input))?
    } else {
        WeightSystem::parse(input)?.newton_polytope()?
    };
    let b = picard_rank(&p)?;
    wln!(out, "rho={} toric={} correction={}", b.rho, b.toric_part, b.correction);
    Ok(())
}

fn search_sub(weights: &str, limits: SearchLimits, out: &mut String) -> Outcome {
    let ws = WeightSystem::parse(weights)?;
    let p: Polytope = ws.newton_polytope()?;
    let found = search_sub_reflexive(&p, limits)?;
    wln!(out, "# start N({ws}): {} vertices, {} lattice points", p.vertices().len(), p.lattice_points().len());
    for (i, s) in found.results.iter().enumerate() {
        wln!(out, "# result {} depth={} rho={} l0={}", i + 1, s.depth, s.rho, s.l0);
        w!(out, "{}", format_points(s.polytope.vertices()));
    }
    wln!(out, "# results={} explored={} truncated={}", found.results.len(), found.explored, found.truncated);
    Ok(())
}

fn amoeba(row: u32, from: u32, to: u32, data: Option<&Path>, out: &mut String) -> Outcome {
    let dataset = load_dataset(data)?;
    let candidates = dataset.select(row);
    if candidates.is_empty() {
        return Err(Failure::Input(format!("no record contains {row}\n{}", available_ids(&dataset))));
    }
    let Some((r, i, j)) = candidates.iter().find_map(|r| Some((*r, r.position(from)?, r.position(to)?))) else {
        let rows: Vec<String> = candidates.iter().map(|r| r.name()).collect();
        return Err(Failure::Input(format!(
            "no record with {row} lists both {from} and {to}; candidates: {}",
            rows.join(" ")
        )));
    };
    let iso = derive_iso::<BigInt>(r, i, j)?;
    let m = amoeba_map(&iso);
    wln!(out, "# log map {} -> {} from row {}", r.weights[i], r.weights[j], r.name());
    for k in 0..3 {
        let row: Vec<String> = m.row(k).iter().map(BigInt::to_string).collect();
        wln!(out, "{}", row.join(" "));
    }
    Ok(())
}

fn run(cli: Cli, out: &mut String) -> Outcome {
    match cli.command {
        Command::VerifyTable { row, format, data, parallel } => {
            verify_table(row, format, data.as_deref(), parallel, out)
        }
        Command::Newton { weights } => newton(&weights, out),
        Command::Dual { file } => {
            let p = load_polytope(&file)?;
            w!(out, "{}", format_points(p.polar_dual()?.vertices()));
            Ok(())
        }
        Command::Reflexive { file } => {
            let p = load_polytope(&file)?;
            match p.is_reflexive() {
                Ok(r) => wln!(out, "reflexive={r}"),
                Err(Error::OriginNotInterior) => wln!(out, "reflexive=false origin not interior"),
                Err(e) => return Err(e.into()),
            }
            Ok(())
        }
        Command::Points { file } => {
            w!(out, "{}", format_lattice_points(&load_polytope(&file)?.lattice_points()));
            Ok(())
        }
        Command::Picard { input } => picard(&input, out),
        Command::SearchSub { weights, max_depth, max_results } => {
            search_sub(&weights, SearchLimits { max_depth, max_results }, out)
        }
        Command::Amoeba { row, from, to, data } => amoeba(row, from, to, data.as_deref(), out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
