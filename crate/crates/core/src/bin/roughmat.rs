use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rough_matroid::cli::{format_set_family, parse_document, parse_set};
use rough_matroid::enumeration::{EntryKind, VerificationReport};
use rough_matroid::{
    matroid_from_relation, relation_from_matroid, run_all, run_theorem, BinaryRelation, Error,
    Matroid,
};

const EXIT_INPUT: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

/// Rough-set approximations and matroids induced by binary relations.
#[derive(Parser)]
#[command(name = "roughmat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Relation queries.
    #[command(subcommand)]
    Rel(RelCommand),
    /// Lower or upper approximation of a set.
    Approx {
        #[arg(value_enum)]
        which: Approx,
        /// Relation file, or `-` for stdin.
        file: PathBuf,
        /// Elements of X, whitespace separated.
        #[arg(long = "set", allow_hyphen_values = true)]
        set: String,
    },
    /// Matroid queries.
    #[command(subcommand)]
    Matroid(MatroidCommand),
    /// Run the exhaustive verification catalog.
    Verify {
        /// Run a single catalog entry.
        #[arg(long)]
        theorem: Option<String>,
        /// Largest universe size to sweep.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Print every witness instead of the first ten.
        #[arg(long)]
        all_witnesses: bool,
        /// Append elapsed time to each report line.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Subcommand)]
enum RelCommand {
    /// Print the serial, transitive, reflexive, symmetric and equivalence flags.
    Props { file: PathBuf },
    /// Print the successor neighborhood of every element.
    Neighborhoods { file: PathBuf },
    /// Print the relation induced by a matroid file.
    FromMatroid { file: PathBuf },
}

#[derive(Subcommand)]
enum MatroidCommand {
    /// Print the circuits of the matroid induced by a relation file.
    FromRel {
        file: PathBuf,
        /// Also print the independent sets.
        #[arg(long)]
        independents: bool,
    },
    /// Print the closure of a set.
    Closure {
        file: PathBuf,
        #[arg(long = "set", allow_hyphen_values = true)]
        set: String,
    },
    /// Print the rank of a set.
    Rank {
        file: PathBuf,
        #[arg(long = "set", allow_hyphen_values = true)]
        set: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Approx {
    Lower,
    Upper,
}

const SHOWN_WITNESSES: usize = 10;

fn read_input(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

enum Failure {
    Input(String),
    Io(io::Error),
    Library(Error),
    Counterexample,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

fn load_relation(path: &Path) -> Result<BinaryRelation, Failure> {
    let text = read_input(path).map_err(Failure::Input)?;
    Ok(parse_document(&text)?.into_relation()?)
}

fn load_matroid(path: &Path) -> Result<Matroid, Failure> {
    let text = read_input(path).map_err(Failure::Input)?;
    Ok(parse_document(&text)?.into_matroid()?)
}

fn print_report(
    out: &mut impl Write,
    report: &VerificationReport,
    all_witnesses: bool,
    timing: bool,
) -> io::Result<()> {
    let mut line = report.summary_line();
    if timing {
        line.push_str(&format!(" elapsed={:.3}s", report.elapsed.as_secs_f64()));
    }
    writeln!(out, "{line}")?;
    let limit = if all_witnesses {
        usize::MAX
    } else {
        SHOWN_WITNESSES
    };
    for w in report.witnesses.iter().take(limit) {
        writeln!(out, "  witness {w}")?;
    }
    if report.witnesses.len() > limit {
        writeln!(out, "  ... {} more", report.witnesses.len() - limit)?;
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Rel(RelCommand::Props { file }) => {
            let p = load_relation(&file)?.properties();
            writeln!(out, "serial: {}", p.serial)?;
            writeln!(out, "transitive: {}", p.transitive)?;
            writeln!(out, "reflexive: {}", p.reflexive)?;
            writeln!(out, "symmetric: {}", p.symmetric)?;
            writeln!(out, "equivalence: {}", p.equivalence)?;
        }
        Command::Rel(RelCommand::Neighborhoods { file }) => {
            let r = load_relation(&file)?;
            for x in 0..r.universe().len() {
                writeln!(
                    out,
                    "RN({}) = {}",
                    r.universe().label(x),
                    r.neighborhood(x)?
                )?;
            }
        }
        Command::Rel(RelCommand::FromMatroid { file }) => {
            let r = relation_from_matroid(&load_matroid(&file)?);
            writeln!(out, "{r}")?;
        }
        Command::Approx { which, file, set } => {
            let r = load_relation(&file)?;
            let x = parse_set(r.universe(), &set)?;
            let result = match which {
                Approx::Lower => r.lower_approx(&x)?,
                Approx::Upper => r.upper_approx(&x)?,
            };
            writeln!(out, "{result}")?;
        }
        Command::Matroid(MatroidCommand::FromRel { file, independents }) => {
            let m = matroid_from_relation(&load_relation(&file)?)?;
            writeln!(out, "circuits:")?;
            writeln!(out, "{}", format_set_family(m.circuits()))?;
            if independents {
                writeln!(out, "independents:")?;
                writeln!(out, "{}", format_set_family(m.independents()))?;
            }
        }
        Command::Matroid(MatroidCommand::Closure { file, set }) => {
            let m = load_matroid(&file)?;
            let x = parse_set(m.universe(), &set)?;
            writeln!(out, "{}", m.closure(&x)?)?;
        }
        Command::Matroid(MatroidCommand::Rank { file, set }) => {
            let m = load_matroid(&file)?;
            let x = parse_set(m.universe(), &set)?;
            writeln!(out, "{}", m.rank(&x)?)?;
        }
        Command::Verify {
            theorem,
            max_n,
            all_witnesses,
            timing,
        } => {
            let reports = match theorem {
                Some(id) => vec![run_theorem(&id, max_n)?],
                None => run_all(max_n)?,
            };
            let mut refuted = false;
            for report in &reports {
                print_report(out, report, all_witnesses, timing)?;
                refuted |= report.kind == EntryKind::Positive && !report.passed();
            }
            if refuted {
                return Err(Failure::Counterexample);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out = io::stdout().lock();
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            if e.is_precondition() {
                ExitCode::from(EXIT_PRECONDITION)
            } else {
                ExitCode::from(EXIT_INPUT)
            }
        }
        Err(Failure::Counterexample) => ExitCode::from(EXIT_COUNTEREXAMPLE),
    }
}
