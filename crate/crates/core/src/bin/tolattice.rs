use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tolattice::blocks::{blocks, factor_lattice};
use tolattice::fca::{concepts, dm_completion, tolerance_context, ConceptLattice};
use tolattice::io::{self, LatticeFile};
use tolattice::relation::{alpha, beta};
use tolattice::tolerance::enumerate_tolerances;
use tolattice::verify::{generate_corpus, run_theorem_suite, CheckId, Provenance, SuiteConfig};
use tolattice::{are_isomorphic, Error, FiniteLattice, Poset, Relation};

#[derive(Parser)]
#[command(name = "tolattice", version, about = "Tolerances, factor lattices and concept lattices of finite lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a lattice file describes a lattice
    Validate { lattice: PathBuf },
    /// Enumerate all tolerances
    Tolerances {
        lattice: PathBuf,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// Map a tolerance to its weak ordered relation (beta) or back (alpha)
    Rel { map: RelMap, lattice: PathBuf, relation: PathBuf },
    /// Blocks of a tolerance
    Blocks {
        lattice: PathBuf,
        #[arg(long)]
        tolerance: PathBuf,
    },
    /// Factor lattice L/T
    Factor {
        lattice: PathBuf,
        #[arg(long)]
        tolerance: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Concepts of a .cxt context, or of (L, L, <= . T . <=)
    Concepts(ConceptsArgs),
    /// Dedekind–MacNeille completion of an order given in lattice-file format
    Dm {
        order: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the property suite over all small lattices
    Verify {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Comma-separated check ids (default: all)
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Extra lattice files added to the corpus
        #[arg(long = "lattice")]
        lattices: Vec<PathBuf>,
        /// List the registered checks and exit
        #[arg(long)]
        list_checks: bool,
    },
    /// Write every lattice with at most N elements as a JSON file
    Gen {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the Hasse diagram of a lattice in DOT
    ExportDot { lattice: PathBuf, out: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum RelMap {
    Beta,
    Alpha,
}

#[derive(Args)]
struct ConceptsArgs {
    #[arg(required_unless_present = "lattice", conflicts_with = "lattice")]
    context: Option<PathBuf>,
    #[arg(long, requires = "tolerance")]
    lattice: Option<PathBuf>,
    #[arg(long, requires = "lattice")]
    tolerance: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

/// An input error tied to the file it came from.
struct Failure {
    path: Option<PathBuf>,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { path: None, error }
    }
}

trait At<T> {
    fn at(self, path: &Path) -> Result<T, Failure>;
}

impl<T> At<T> for tolattice::Result<T> {
    fn at(self, path: &Path) -> Result<T, Failure> {
        self.map_err(|error| Failure { path: Some(path.to_path_buf()), error })
    }
}

enum Outcome {
    Ok,
    ChecksFailed,
}

fn load_lattice(path: &Path) -> Result<FiniteLattice, Failure> {
    io::lattice_from_json(&io::read_file(path).at(path)?).at(path)
}

fn load_relation(path: &Path, lat: &FiniteLattice) -> Result<Relation, Failure> {
    io::relation_from_json(&io::read_file(path).at(path)?, lat).at(path)
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    io::write_file(path, contents).at(path)
}

fn print_concepts(cl: &ConceptLattice) {
    println!("{} concepts", cl.len());
    for i in 0..cl.len() {
        println!("{}", cl.label(i));
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Validate { lattice } => {
            let lat = load_lattice(&lattice)?;
            println!("{}: lattice with {} elements and {} covers", lat.name(), lat.n(), lat.covers().len());
        }
        Command::Tolerances { lattice, count, list: _ } => {
            let lat = load_lattice(&lattice)?;
            let tols = enumerate_tolerances(&lat).at(&lattice)?;
            if count {
                println!("{}", tols.len());
            } else {
                for t in &tols {
                    let pairs: Vec<String> =
                        t.upper_pairs().map(|(x, y)| format!("{}~{}", lat.names()[x], lat.names()[y])).collect();
                    println!("{{{}}}", pairs.join(", "));
                }
            }
        }
        Command::Rel { map, lattice, relation } => {
            let lat = load_lattice(&lattice)?;
            let r = load_relation(&relation, &lat)?;
            let image = match map {
                RelMap::Beta => beta(&lat, &r),
                RelMap::Alpha => alpha(&lat, &r),
            }
            .at(&relation)?;
            print!("{}", io::relation_to_json(&lat, &image));
        }
        Command::Blocks { lattice, tolerance } => {
            let lat = load_lattice(&lattice)?;
            let t = load_relation(&tolerance, &lat)?;
            for b in blocks(&lat, &t).at(&tolerance)? {
                println!("{} {}", b.label(&lat), lat.format_subset(&b.members));
            }
        }
        Command::Factor { lattice, tolerance, dot } => {
            let lat = load_lattice(&lattice)?;
            let t = load_relation(&tolerance, &lat)?;
            let f = factor_lattice(&lat, &t).at(&tolerance)?;
            println!("{} blocks", f.len());
            for b in &f.blocks {
                println!("{} {}", b.label(&lat), lat.format_subset(&b.members));
            }
            let names = f.lattice.names();
            for &(a, b) in f.lattice.covers() {
                println!("{} < {}", names[a], names[b]);
            }
            if let Some(out) = dot {
                write(&out, &io::factor_to_dot(&f))?;
            }
        }
        Command::Concepts(args) => {
            let ctx = match (&args.context, &args.lattice, &args.tolerance) {
                (Some(path), _, _) => io::read_cxt(&io::read_file(path).at(path)?).at(path)?,
                (None, Some(l), Some(t)) => {
                    let lat = load_lattice(l)?;
                    tolerance_context(&lat, &load_relation(t, &lat)?).at(t)?
                }
                _ => unreachable!("clap enforces an input"),
            };
            let cl = concepts(&ctx)?;
            print_concepts(&cl);
            if let Some(out) = args.dot {
                write(&out, &io::concepts_to_dot(&cl))?;
            }
        }
        Command::Dm { order, dot } => {
            let file: LatticeFile = serde_json::from_str(&io::read_file(&order).at(&order)?)
                .map_err(|e| Error::Parse(e.to_string()))
                .at(&order)?;
            let poset = Poset::from_covers(file.elements.clone(), &file.covers).at(&order)?;
            let cl = dm_completion(&poset).at(&order)?;
            print_concepts(&cl);
            if let Ok(lat) = file.build() {
                let same = are_isomorphic(&cl.lattice, &lat).is_some();
                println!("isomorphic to input: {}", if same { "yes" } else { "no" });
            }
            if let Some(out) = dot {
                write(&out, &io::concepts_to_dot(&cl))?;
            }
        }
        Command::Verify { nmax, checks, json, seed, lattices, list_checks } => {
            if list_checks {
                for c in CheckId::ALL {
                    println!("{:<28} {}", c.as_str(), c.description());
                }
                return Ok(Outcome::Ok);
            }
            let mut config = SuiteConfig::default();
            if !checks.is_empty() {
                config.checks = checks.iter().map(|c| c.trim().parse()).collect::<tolattice::Result<_>>()?;
            }
            if let Some(seed) = seed {
                config.sampling.seed = seed;
            }
            let mut corpus = generate_corpus(nmax)?;
            for path in &lattices {
                corpus.push(load_lattice(path)?, Provenance::Loaded);
            }
            let report = run_theorem_suite(&corpus, &config)?;
            print!("{}", report.to_text());
            if let Some(out) = json {
                write(&out, &report.to_json())?;
            }
            if !report.passed() {
                return Ok(Outcome::ChecksFailed);
            }
        }
        Command::Gen { nmax, out } => {
            let corpus = generate_corpus(nmax)?;
            std::fs::create_dir_all(&out)
                .map_err(|e| Error::Io { path: out.display().to_string(), message: e.to_string() })
                .at(&out)?;
            for lat in corpus.enumerated() {
                write(&out.join(format!("{}.json", lat.name())), &io::lattice_to_json(lat))?;
            }
            println!("{} lattices written to {}", corpus.enumerated().count(), out.display());
        }
        Command::ExportDot { lattice, out } => {
            let lat = load_lattice(&lattice)?;
            write(&out, &io::lattice_to_dot(&lat))?;
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(Failure { path, error }) => {
            match path {
                Some(p) => eprintln!("error: {}: {error}", p.display()),
                None => eprintln!("error: {error}"),
            }
            ExitCode::from(2)
        }
    }
}
