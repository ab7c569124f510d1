use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use normform::cohomology::coverage_certificate;
use normform::generic::{det_poly_report, generic_canonical_search, generic_rank_test};
use normform::grassmann::{member_x, Subspace2, DEFAULT_MEMBER_TOL};
use normform::io::{
    ClassifyReport, CohomologyReport, DecomposeReport, GenericReport, MatrixDocument, NormalFormReport,
    SubspaceDocument,
};
use normform::normal_form::normal_form;
use normform::orbit::{decompose_with_tol, stabilizer_elements_in_n0};
use normform::survey::{run_survey, write_csv, Execution, SurveySummary};
use normform::verify::{self, Suite, VerifyConfig};
use normform::Error;

/// Tolerance on symmetry and trace of input matrices.
const INPUT_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "normform", version, about = "Normal forms of traceless 3x3 symmetric matrices and SO(3)-orbits of 2-planes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rotate a traceless symmetric matrix to (mu, 0, lambda; 0, -mu, 0; lambda, 0, 0).
    NormalForm {
        /// JSON {"matrix": [[..],[..],[..]]}; standard input when omitted.
        input: Option<PathBuf>,
        /// Subtract the trace part instead of rejecting the input.
        #[arg(long)]
        project_traceless: bool,
        /// Symmetry/trace tolerance.
        #[arg(long, default_value_t = INPUT_TOL)]
        tol: f64,
    },
    /// Compute f(W) and decide membership in X and genericity.
    Classify {
        /// JSON {"generators": [matrix, matrix]}; standard input when omitted.
        input: Option<PathBuf>,
        /// Membership tolerance on 54^-1/2 - f(W).
        #[arg(long, default_value_t = DEFAULT_MEMBER_TOL)]
        tol: f64,
    },
    /// Write W in X as k.W_Y with Y in canonical form.
    Decompose {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MEMBER_TOL)]
        tol: f64,
    },
    /// Test [k, Z] + L = p for some Z in L.
    Generic { input: Option<PathBuf> },
    /// Coverage certificate K.L = p from the stabilizer's first cohomology.
    Cohomology { input: Option<PathBuf> },
    /// Sample random 2-planes and write one CSV row per sample.
    Survey {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MEMBER_TOL)]
        tol: f64,
        /// Disable the thread pool.
        #[arg(long)]
        sequential: bool,
    },
    /// Run the property suites; exit 1 on any failure.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Print a JSON summary instead of text lines.
        #[arg(long)]
        json: bool,
        /// Samples per randomized check.
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Fault {
    SwappedSort,
}

enum Failure {
    Verify,
    Parse(String),
    Validation(String),
    Precondition(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify => 1,
            Failure::Parse(_) => 2,
            Failure::Validation(_) => 3,
            Failure::Precondition(_) => 4,
            Failure::Io(_) => 5,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInX { .. } | Error::UnknownStabilizer | Error::OutsideYprime | Error::DegenerateCertificate(_) => {
                Failure::Precondition(e.to_string())
            }
            _ => Failure::Validation(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn read_doc<T: DeserializeOwned>(input: Option<&Path>) -> Result<T, Failure> {
    let mut text = String::new();
    match input {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        }
    }
    serde_json::from_str(&text).map_err(|e| Failure::Parse(e.to_string()))
}

fn read_subspace(input: Option<&Path>) -> Result<Subspace2, Failure> {
    let doc: SubspaceDocument = read_doc(input)?;
    Ok(doc.to_subspace(INPUT_TOL, false)?)
}

fn emit<T: Serialize>(v: &T) -> CliResult {
    let s = serde_json::to_string_pretty(v).map_err(|e| Failure::Io(e.to_string()))?;
    let mut out = io::stdout().lock();
    writeln!(out, "{s}").map_err(|e| Failure::Io(e.to_string()))
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::NormalForm {
            input,
            project_traceless,
            tol,
        } => {
            let doc: MatrixDocument = read_doc(input.as_deref())?;
            let a = doc.to_sym(tol, project_traceless)?;
            emit(&NormalFormReport::new(&normal_form(&a), &a))
        }
        Command::Classify { input, tol } => {
            let w = read_subspace(input.as_deref())?;
            emit(&ClassifyReport::new(&member_x(&w, tol), &generic_rank_test(&w)))
        }
        Command::Decompose { input, tol } => {
            let w = read_subspace(input.as_deref())?;
            let d = decompose_with_tol(&w, tol)?;
            let order = stabilizer_elements_in_n0(&d.y).ok().map(|s| s.len());
            emit(&DecomposeReport::new(&d, order))
        }
        Command::Generic { input } => {
            let w = read_subspace(input.as_deref())?;
            let rank = generic_rank_test(&w);
            let lemma = generic_canonical_search(&w);
            let det_poly = decompose_with_tol(&w, DEFAULT_MEMBER_TOL)
                .ok()
                .and_then(|d| det_poly_report(&d.y).det_poly_coeffs);
            emit(&GenericReport::new(&rank, &lemma, det_poly))
        }
        Command::Cohomology { input } => {
            let w = read_subspace(input.as_deref())?;
            emit(&CohomologyReport::new(&coverage_certificate(&w)?))
        }
        Command::Survey {
            n,
            seed,
            out,
            tol,
            sequential,
        } => {
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let io_err = |e: io::Error| Failure::Io(e.to_string());
            let mut sink: Box<dyn Write> = match &out {
                Some(p) => Box::new(BufWriter::new(
                    File::create(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
                )),
                None => Box::new(BufWriter::new(io::stdout().lock())),
            };
            let rows = run_survey(n as usize, seed, tol, exec);
            write_csv(&rows, &mut sink).map_err(io_err)?;
            eprintln!("{}", SurveySummary::of(&rows).line());
            Ok(())
        }
        Command::Verify {
            suite,
            json,
            n,
            seed,
            inject_fault,
        } => {
            let solver = match inject_fault {
                Some(Fault::SwappedSort) => verify::swapped_sort_solver,
                None => normform::symmat::eigen_sym,
            };
            let cfg = VerifyConfig {
                solver,
                samples: n,
                seed,
            };
            let results = verify::run(suite, &cfg);
            if json {
                emit(&results)?;
            } else {
                for r in &results {
                    let mark = if r.passed { "PASS" } else { "FAIL" };
                    if r.detail.is_empty() {
                        println!("{mark} {}::{}", r.suite, r.name);
                    } else {
                        println!("{mark} {}::{} ({})", r.suite, r.name, r.detail);
                    }
                }
            }
            if verify::all_passed(&results) {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Verify => eprintln!("verification failed"),
                Failure::Parse(m) => eprintln!("parse error: {m}"),
                Failure::Validation(m) => eprintln!("invalid input: {m}"),
                Failure::Precondition(m) => eprintln!("precondition failed: {m}"),
                Failure::Io(m) => eprintln!("I/O error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
