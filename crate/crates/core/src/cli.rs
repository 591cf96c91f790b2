//! The `nestkit` command line. Exit codes: 0 on success, 1 when a
//! verification fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::blowup::blowup;
use crate::building::{
    check_building, enumerate_building_sets, max_building, min_building, nested_complex, BuildingCheck,
    BuildingSet,
};
use crate::catalog;
use crate::error::Error;
use crate::fan::{fan_from_nested, sample_support_equality, stellar_subdivide, subdivision_sequence, SubdivisionStep};
use crate::homology::reduced_homology;
use crate::io;
use crate::semilattice::{validate_meet_semilattice, Semilattice};
use crate::verify::{verify, Selection, VerifyOptions};

#[derive(Parser, Debug)]
#[command(name = "nestkit", version, about = "Building sets, nested set complexes, blowups and fans")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a poset is a meet-semilattice and summarize it
    Validate { poset: PathBuf },
    /// Print a semilattice from the built-in catalog as poset JSON
    Catalog(CatalogArgs),
    /// Building set operations
    #[command(subcommand)]
    Building(BuildingCommand),
    /// Print the nested set complex
    Nested { poset: PathBuf, building: PathBuf },
    /// Print the combinatorial blowup at an element
    Blowup { poset: PathBuf, element: String },
    /// Print the fan spanned by characteristic vectors of nested sets
    Fan { poset: PathBuf, building: PathBuf },
    /// Run the stellar subdivision sequence from H up to G
    Chain {
        poset: PathBuf,
        g: PathBuf,
        h: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long)]
        json: bool,
    },
    /// Stellar subdivision of a fan at a cone
    Subdivide {
        fan: PathBuf,
        /// Ray indices of the cone, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        cone: Vec<usize>,
        /// The new ray, comma separated; defaults to the sum of the cone's rays
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        ray: Option<Vec<i64>>,
    },
    /// Reduced integral homology of a complex
    Homology { complex: PathBuf },
    /// Run all structural checks
    Verify {
        poset: PathBuf,
        #[arg(long, conflicts_with = "building")]
        all_building: bool,
        #[arg(long)]
        building: Option<PathBuf>,
        /// Allow semilattices with more than 32 elements
        #[arg(long)]
        slow: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct CatalogArgs {
    #[command(subcommand)]
    kind: CatalogKind,
    /// Drop the top element
    #[arg(long, global = true)]
    remove_top: bool,
}

#[derive(Subcommand, Debug)]
enum CatalogKind {
    /// Subsets of an n-set
    Boolean { n: usize },
    /// Set partitions of an n-set
    Partition { n: usize },
    /// A chain with n elements
    Chain { n: usize },
    /// Connected partitions of a graph on vertices 1..=n
    Bond {
        #[arg(long)]
        vertices: usize,
        /// Edges such as 1-2, comma separated
        #[arg(long, value_delimiter = ',')]
        edges: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum BuildingCommand {
    /// Check whether a set of labels is a building set
    Check {
        poset: PathBuf,
        set: PathBuf,
        /// Search all product isomorphisms instead of the canonical join map
        #[arg(long)]
        exhaustive: bool,
    },
    /// The minimal building set
    Min { poset: PathBuf },
    /// The maximal building set
    Max { poset: PathBuf },
    /// All building sets
    Enumerate {
        poset: PathBuf,
        #[arg(long, default_value_t = crate::building::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
    /// The reader went away; stop quietly.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Falsified(_) => Failure::Verification(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// Runs the command line, writing results to `out` and diagnostics to `err`,
/// and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Verification(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Closed) => 0,
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_semilattice(path: &Path) -> std::result::Result<Semilattice, Failure> {
    Ok(io::semilattice_from_json(&read(path)?)?)
}

fn load_building(s: &Semilattice, path: &Path) -> std::result::Result<BuildingSet, Failure> {
    let set = io::element_set_from_json(s, &read(path)?)?;
    check_building(s, &set, BuildingCheck::Canonical)
        .map_err(|f| Failure::Usage(format!("{} is not a building set: {}", path.display(), f.reason)))
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| match e.kind() {
        std::io::ErrorKind::BrokenPipe => Failure::Closed,
        _ => Failure::Usage(e.to_string()),
    })
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { poset } => {
            let p = io::poset_from_json(&read(&poset)?)?;
            match validate_meet_semilattice(p) {
                Ok(s) => {
                    let top = s.top().map_or("none".to_string(), |t| s.label(t).to_string());
                    emit(
                        out,
                        &format!(
                            "meet-semilattice: {} elements, bottom {}, top {}, {} atoms, atomic: {}",
                            s.len(),
                            s.label(s.bottom()),
                            top,
                            s.atoms().len(),
                            s.is_atomic()
                        ),
                    )?;
                    Ok(true)
                }
                Err(e) => {
                    emit(out, &format!("not a meet-semilattice: {e}"))?;
                    Ok(false)
                }
            }
        }
        Command::Catalog(args) => {
            let mut s = match args.kind {
                CatalogKind::Boolean { n } => catalog::boolean(n)?,
                CatalogKind::Partition { n } => catalog::partition(n)?,
                CatalogKind::Chain { n } => catalog::chain(n)?,
                CatalogKind::Bond { vertices, edges } => {
                    let edges = edges.iter().map(|e| parse_edge(e)).collect::<Result<Vec<_>, _>>()?;
                    catalog::bond_lattice(vertices, &edges)?
                }
            };
            if args.remove_top {
                s = catalog::remove_top(&s)?;
            }
            emit(out, &io::poset_to_json(s.poset()))?;
            Ok(true)
        }
        Command::Building(cmd) => building_command(cmd, out),
        Command::Nested { poset, building } => {
            let s = load_semilattice(&poset)?;
            let g = load_building(&s, &building)?;
            emit(out, &io::complex_to_json(&nested_complex(&s, &g)?))?;
            Ok(true)
        }
        Command::Blowup { poset, element } => {
            let s = load_semilattice(&poset)?;
            let x = s.index_of(&element)?;
            emit(out, &io::poset_to_json(blowup(&s, x)?.lattice.poset()))?;
            Ok(true)
        }
        Command::Fan { poset, building } => {
            let s = load_semilattice(&poset)?;
            let g = load_building(&s, &building)?;
            emit(out, &io::fan_to_json(&fan_from_nested(&s, &g)?))?;
            Ok(true)
        }
        Command::Chain {
            poset,
            g,
            h,
            seed,
            trials,
            json,
        } => {
            let s = load_semilattice(&poset)?;
            let (g, h) = (load_building(&s, &g)?, load_building(&s, &h)?);
            let report = subdivision_sequence(&s, &g, &h)?;
            let support = sample_support_equality(&report.fans[0], report.fans.last().unwrap(), trials, seed)?;
            let passed = report.passed() && support.all_agree();
            if json {
                #[derive(Serialize)]
                struct ChainJson<'a> {
                    chain: &'a [Vec<String>],
                    steps: &'a [SubdivisionStep],
                    seed: u64,
                    trials: usize,
                    agreements: usize,
                    passed: bool,
                }
                let j = ChainJson {
                    chain: &report.chain,
                    steps: &report.steps,
                    seed,
                    trials,
                    agreements: support.agreements,
                    passed,
                };
                emit(out, &serde_json::to_string_pretty(&j).expect("plain data serializes"))?;
            } else {
                for (i, step) in report.steps.iter().enumerate() {
                    let mark = |b: bool| if b { "ok" } else { "FAILED" };
                    let mut line = format!(
                        "step {}: add {} at cone {{{}}}: factor sum {}, stellar subdivision {}, blowup {}, euler {}",
                        i + 1,
                        step.element,
                        step.factors.join(", "),
                        mark(step.factor_sum),
                        mark(step.fan_equal),
                        mark(step.blowup_equal),
                        mark(step.euler_preserved),
                    );
                    if let Some(d) = &step.detail {
                        line.push_str(&format!(" ({d})"));
                    }
                    emit(out, &line)?;
                }
                emit(
                    out,
                    &format!(
                        "{} steps; support sampling: {}/{} points agree (seed {seed})",
                        report.steps.len(),
                        support.agreements,
                        support.trials
                    ),
                )?;
            }
            Ok(passed)
        }
        Command::Subdivide { fan, cone, ray } => {
            let f = io::fan_from_json(&read(&fan)?)?;
            let v = match ray {
                Some(v) => v,
                None => {
                    let mut v = vec![0i64; f.dim()];
                    for &r in &cone {
                        let ray = f.rays().get(r).ok_or(Error::IndexOutOfRange(r))?;
                        for (acc, &x) in v.iter_mut().zip(ray) {
                            *acc += x;
                        }
                    }
                    v
                }
            };
            emit(out, &io::fan_to_json(&stellar_subdivide(&f, &cone, &v)?))?;
            Ok(true)
        }
        Command::Homology { complex } => {
            let c = io::complex_from_json(&read(&complex)?)?;
            emit(out, &io::homology_to_json(&reduced_homology(&c)?))?;
            Ok(true)
        }
        Command::Verify {
            poset,
            all_building,
            building,
            slow,
            seed,
            trials,
            json,
        } => {
            let s = load_semilattice(&poset)?;
            let selection = match (all_building, building) {
                (true, _) => Selection::All,
                (false, Some(path)) => Selection::Given(io::element_set_from_json(&s, &read(&path)?)?),
                (false, None) => Selection::Extremes,
            };
            let opts = VerifyOptions {
                selection,
                slow,
                seed,
                trials,
            };
            let report = match verify(&s, &opts) {
                Ok(r) => r,
                Err(e @ Error::NotBuilding(..)) => return Err(Failure::Verification(e.to_string())),
                Err(e) => return Err(e.into()),
            };
            emit(out, if json { report.to_json() } else { report.to_text() }.trim_end())?;
            Ok(report.passed())
        }
    }
}

fn building_command(cmd: BuildingCommand, out: &mut dyn Write) -> Outcome {
    match cmd {
        BuildingCommand::Check { poset, set, exhaustive } => {
            let s = load_semilattice(&poset)?;
            let cand = io::element_set_from_json(&s, &read(&set)?)?;
            let mode = if exhaustive {
                BuildingCheck::Exhaustive
            } else {
                BuildingCheck::Canonical
            };
            match check_building(&s, &cand, mode) {
                Ok(_) => {
                    emit(out, "building set")?;
                    Ok(true)
                }
                Err(f) => {
                    emit(out, &format!("not a building set: {}", f.reason))?;
                    Ok(false)
                }
            }
        }
        BuildingCommand::Min { poset } => {
            let s = load_semilattice(&poset)?;
            emit(out, &io::building_to_json(&s, &min_building(&s)?))?;
            Ok(true)
        }
        BuildingCommand::Max { poset } => {
            let s = load_semilattice(&poset)?;
            emit(out, &io::building_to_json(&s, &max_building(&s)?))?;
            Ok(true)
        }
        BuildingCommand::Enumerate { poset, cap } => {
            let s = load_semilattice(&poset)?;
            let all: Vec<Vec<String>> = enumerate_building_sets(&s, cap)?
                .iter()
                .map(|g| s.labels_of(g.carrier()))
                .collect();
            emit(out, &serde_json::to_string_pretty(&all).expect("plain data serializes"))?;
            Ok(true)
        }
    }
}

fn parse_edge(text: &str) -> std::result::Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("edge `{text}` is not of the form u-v"));
    let (u, v) = text.split_once('-').ok_or_else(bad)?;
    Ok((u.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?))
}
