//! The `tits` command line.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use tits_core::catalog;
use tits_core::chamber::{
    adjacency_dot, incidence_dot, infer_type_matrix, is_simplicial, orbit_quotient, quotient, ChamberSystem,
};
use tits_core::covers::{universal_cover, DEFAULT_MAX_CHAMBERS};
use tits_core::coxeter::CoxeterMatrix;
use tits_core::groups::Perm;
use tits_core::verify::{check_star, is_building, is_building_inferred, is_c3_geometry, ll_verdict};
use tits_core::Error;

#[derive(Parser)]
#[command(name = "tits", version, about = "Finite chamber systems, buildings and 2-covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Build a catalog entry, validating its expected statistics.
    Build {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one verification on a chamber system.
    Check(CheckArgs),
    /// Universal 2-cover of a chamber system.
    Cover {
        /// Chamber system JSON; `-` or absent reads standard input.
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        base_chamber: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_CHAMBERS)]
        max_chambers: usize,
        /// Write the full result (cover, map, deck group) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quotient by a group of automorphisms.
    Quotient {
        file: PathBuf,
        /// JSON list of generators as image arrays.
        #[arg(long)]
        auto: PathBuf,
        /// Skip the residue condition and take the plain orbit quotient.
        #[arg(long)]
        orbit: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coxeter group of a matrix.
    Coxeter {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        what: CoxeterWhat,
    },
    /// Summary statistics or a DOT graph.
    Report {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// DOT output of the point-line incidence graph (rank 2).
        #[arg(long)]
        incidence: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// Chamber system JSON; `-` or absent reads standard input.
    file: Option<PathBuf>,
    /// Build this catalog entry instead of reading a file.
    #[arg(long, conflicts_with = "file")]
    catalog: Option<String>,
    #[command(flatten)]
    what: CheckWhat,
    /// Coxeter matrix for --building instead of the inferred type.
    #[arg(long, requires = "building")]
    matrix: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CheckWhat {
    #[arg(long)]
    building: bool,
    #[arg(long)]
    ll: bool,
    #[arg(long)]
    c3: bool,
    #[arg(long)]
    simplicial: bool,
    /// Criterion ⋆ on a coset catalog entry (needs --catalog).
    #[arg(long, requires = "catalog")]
    star: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CoxeterWhat {
    #[arg(long)]
    order: bool,
    #[arg(long)]
    complex: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

/// How a command ended: verified, refuted (with a verdict already printed)
/// or failed on its input.
enum Outcome {
    Verified,
    Refuted,
}

type CliResult = Result<Outcome, Error>;

/// `println!` that ignores a closed standard output.
macro_rules! outln {
    ($($arg:tt)*) => {{
        let _ = writeln!(io::stdout(), $($arg)*);
    }};
}

fn read_input(file: Option<&Path>) -> Result<String, Error> {
    match file {
        Some(p) if p != Path::new("-") => Ok(fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_system(file: Option<&Path>) -> Result<ChamberSystem, Error> {
    ChamberSystem::from_json_str(&read_input(file)?)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixInput {
    Tagged(CoxeterMatrix),
    Rows(Vec<Vec<u32>>),
}

fn read_matrix(path: &Path) -> Result<CoxeterMatrix, Error> {
    match serde_json::from_str(&fs::read_to_string(path)?)? {
        MatrixInput::Tagged(m) => Ok(m),
        MatrixInput::Rows(rows) => CoxeterMatrix::from_rows(&rows),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GeneratorsInput {
    Tagged { generators: Vec<Vec<u32>> },
    List(Vec<Vec<u32>>),
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(p) => fs::write(p, text + "\n")?,
        None => outln!("{text}"),
    }
    Ok(())
}

/// Compact JSON for chamber-system data.
fn emit_data<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), Error> {
    let text = serde_json::to_string(value)?;
    match out {
        Some(p) => fs::write(p, text + "\n")?,
        None => outln!("{text}"),
    }
    Ok(())
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Verified
    } else {
        Outcome::Refuted
    }
}

fn catalog_list(json: bool) -> CliResult {
    if json {
        emit(&catalog::entries(), None)?;
    } else {
        for e in catalog::entries() {
            outln!("{:<22} {:>4}  {:<5} {}", e.name, e.chambers, e.r#type.unwrap_or("-"), e.description);
        }
    }
    Ok(Outcome::Verified)
}

fn build(name: &str, out: Option<&Path>) -> CliResult {
    let entry = catalog::entry(name)?;
    match entry.build_verified() {
        Ok(sys) => {
            emit_data(&entry.to_json(&sys), out)?;
            Ok(Outcome::Verified)
        }
        Err(e @ Error::CatalogMismatch { .. }) => {
            emit(&json!({ "catalog": name, "valid": false, "error": e.to_string() }), None)?;
            Ok(Outcome::Refuted)
        }
        Err(e) => Err(e),
    }
}

fn check(args: &CheckArgs) -> CliResult {
    let w = &args.what;
    if w.star {
        let name = args.catalog.as_deref().unwrap_or_default();
        let spec = catalog::homogeneous(name)?;
        let report = check_star(&spec, 0, 1)?;
        emit(&report, None)?;
        return Ok(verdict(report.holds));
    }
    let sys = match &args.catalog {
        Some(name) => catalog::build(name)?,
        None => read_system(args.file.as_deref())?,
    };
    if w.building {
        let report = match &args.matrix {
            Some(p) => is_building(&sys, &read_matrix(p)?)?,
            None => is_building_inferred(&sys)?,
        };
        emit(&report, None)?;
        Ok(verdict(report.building))
    } else if w.ll {
        match ll_verdict(&sys) {
            Ok(v) => {
                emit(&v, None)?;
                Ok(verdict(v.holds))
            }
            Err(e @ (Error::ResidueNotPolygon(..) | Error::InconsistentResidues { .. } | Error::InvalidInput(_))) => {
                emit(&json!({ "holds": false, "reason": e.to_string() }), None)?;
                Ok(Outcome::Refuted)
            }
            Err(e) => Err(e),
        }
    } else if w.c3 {
        let report = is_c3_geometry(&sys)?;
        emit(&report, None)?;
        Ok(verdict(report.c3))
    } else {
        let report = is_simplicial(&sys)?;
        emit(&report, None)?;
        Ok(verdict(report.simplicial))
    }
}

fn cover(file: Option<&Path>, base_chamber: usize, max_chambers: usize, out: Option<&Path>) -> CliResult {
    let sys = read_system(file)?;
    let r = universal_cover(&sys, base_chamber, max_chambers)?;
    let full = r.to_json();
    if let Some(p) = out {
        emit_data(&full, Some(p))?;
    }
    emit(
        &json!({
            "chambers": full.chambers,
            "base_chambers": sys.len(),
            "fiber_size": full.fiber_size,
            "deck_order": full.deck_order,
            "regular": full.regular,
            "truncated": full.truncated,
            "base_chamber": base_chamber,
        }),
        None,
    )?;
    Ok(verdict(!r.truncated))
}

fn quotient_cmd(file: &Path, auto: &Path, orbit: bool, out: Option<&Path>) -> CliResult {
    let sys = read_system(Some(file))?;
    let gens = match serde_json::from_str(&fs::read_to_string(auto)?)? {
        GeneratorsInput::Tagged { generators } | GeneratorsInput::List(generators) => generators,
    };
    let gens: Vec<Perm> = gens.into_iter().map(Perm::from_images).collect::<Result<_, _>>()?;
    let result = if orbit { orbit_quotient(&sys, &gens) } else { quotient(&sys, &gens) };
    match result {
        Ok(q) => {
            emit_data(&json!({ "group_order": q.group.order(), "projection": q.projection, "system": q.system }), out)?;
            Ok(Outcome::Verified)
        }
        Err(e @ (Error::ResidueCollision(..) | Error::ActionNotFree(_) | Error::NotAutomorphism(_))) => {
            emit(&json!({ "quotient": false, "reason": e.to_string() }), None)?;
            Ok(Outcome::Refuted)
        }
        Err(e) => Err(e),
    }
}

fn coxeter(matrix: &Path, what: &CoxeterWhat) -> CliResult {
    let m = read_matrix(matrix)?;
    if what.order {
        match m.order_by_type() {
            Some(order) => {
                outln!("{order}");
                Ok(Outcome::Verified)
            }
            None => {
                outln!("infinite");
                Ok(Outcome::Refuted)
            }
        }
    } else {
        emit_data(&m.coxeter_complex()?, None)?;
        Ok(Outcome::Verified)
    }
}

fn report(file: Option<&Path>, format: Format, incidence: bool) -> CliResult {
    let sys = read_system(file)?;
    match format {
        Format::Dot => {
            let dot = if incidence { incidence_dot(&sys)? } else { adjacency_dot(&sys) };
            let _ = write!(io::stdout(), "{dot}");
        }
        Format::Json => {
            let m = infer_type_matrix(&sys).ok();
            let residues: Vec<_> = (0..sys.rank())
                .flat_map(|i| (i + 1..sys.rank()).map(move |j| (i, j)))
                .map(|(i, j)| json!({ "types": [i + 1, j + 1], "count": sys.residues(&[i, j]).len() }))
                .collect();
            emit(
                &json!({
                    "chambers": sys.len(),
                    "rank": sys.rank(),
                    "panel_sizes": sys.panel_size_profile(),
                    "thin": sys.is_thin(),
                    "thick": sys.is_thick(),
                    "connected": sys.is_connected(),
                    "type": m.as_ref().and_then(CoxeterMatrix::type_name),
                    "type_matrix": m,
                    "rank2_residues": residues,
                }),
                None,
            )?;
        }
    }
    Ok(Outcome::Verified)
}

fn dispatch(cli: Cli) -> CliResult {
    match cli.command {
        Command::Catalog { action: CatalogAction::List { json } } => catalog_list(json),
        Command::Build { name, out } => build(&name, out.as_deref()),
        Command::Check(args) => check(&args),
        Command::Cover { file, base_chamber, max_chambers, out } => {
            cover(file.as_deref(), base_chamber, max_chambers, out.as_deref())
        }
        Command::Quotient { file, auto, orbit, out } => quotient_cmd(&file, &auto, orbit, out.as_deref()),
        Command::Coxeter { matrix, what } => coxeter(&matrix, &what),
        Command::Report { file, format, incidence } => report(file.as_deref(), format, incidence),
    }
}

/// Runs the CLI and returns the process exit code: 0 verified, 1 refuted
/// or undecided within budget, 2 usage or input error.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let code = match dispatch(cli) {
        Ok(Outcome::Verified) => 0,
        Ok(Outcome::Refuted) => 1,
        Err(e @ Error::BudgetExceeded { .. }) => {
            let _ = writeln!(io::stdout(), "{}", json!({ "decided": false, "reason": e.to_string() }));
            let _ = writeln!(io::stderr(), "tits: {e}");
            1
        }
        Err(e) => {
            let _ = writeln!(io::stderr(), "tits: {e}");
            2
        }
    };
    let _ = io::stdout().flush();
    code
}
