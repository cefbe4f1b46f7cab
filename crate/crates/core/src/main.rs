//! Command-line front door. Commands read quad/sequence text from a file or
//! standard input and write to standard output, so they chain in pipelines:
//!
//! ```text
//! williamson search 3 | williamson double | williamson verify
//! ```
//!
//! Exit codes: 0 = success/verified, 1 = well-formed input that fails
//! verification, 2 = malformed input or usage error.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use williamson::machine::{
    DoubleDoc, HadamardDoc, MatrixDoc, QuadDoc, QuadVerdictDoc, SearchDoc, SpectraDoc,
    SpectrumDoc, VerifyDoc,
};
use williamson::text;
use williamson::{search_williamson, williamson_array, SearchOptions, WilliamsonQuad};

const EXIT_FAILED_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "williamson",
    about = "Verify, double, search, and expand Williamson sequences",
    version
)]
struct Cli {
    /// Emit one JSON document instead of human-readable text.
    #[arg(long, global = true)]
    machine: bool,

    /// Suppress summaries and verdict lines; payload and exit codes only.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check quads against the Williamson criterion and list all violations.
    Verify {
        /// Quad text file; standard input when omitted.
        file: Option<PathBuf>,
    },
    /// Double odd-order Williamson quads to order 2n.
    Double {
        file: Option<PathBuf>,
    },
    /// Exhaustively find all Williamson quads of an odd order.
    Search {
        /// The (odd) order to search.
        n: usize,
        /// Largest order accepted.
        #[arg(long, default_value_t = 13)]
        limit: usize,
        /// Disable pruning; verify every tuple with the dense reference.
        #[arg(long)]
        no_prune: bool,
        /// Shards to run in parallel (0 = one per CPU).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Expand verified quads into 4n×4n Hadamard matrices.
    Hadamard {
        file: Option<PathBuf>,
    },
    /// Print the periodic autocorrelation of sequences.
    Spectrum {
        /// A '+'/'-' sequence; standard input (one per line) when omitted.
        sequence: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify { file } => cmd_verify(&cli, file.as_deref()),
        Command::Double { file } => cmd_double(&cli, file.as_deref()),
        Command::Search {
            n,
            limit,
            no_prune,
            jobs,
        } => cmd_search(&cli, *n, *limit, *no_prune, *jobs),
        Command::Hadamard { file } => cmd_hadamard(&cli, file.as_deref()),
        Command::Spectrum { sequence } => cmd_spectrum(&cli, sequence.as_deref()),
    }
}

fn read_input(file: Option<&std::path::Path>) -> Result<String, String> {
    match file {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn parse_quad_input(file: Option<&std::path::Path>) -> Result<Vec<WilliamsonQuad>, ExitCode> {
    let input = read_input(file).map_err(usage_error)?;
    text::parse_quads(&input).map_err(usage_error)
}

fn cmd_verify(cli: &Cli, file: Option<&std::path::Path>) -> ExitCode {
    let quads = match parse_quad_input(file) {
        Ok(quads) => quads,
        Err(code) => return code,
    };
    let reports: Vec<_> = quads.iter().map(|q| q.verify()).collect();
    let all_pass = reports.iter().all(|r| r.is_williamson());

    if cli.machine {
        let doc = VerifyDoc {
            quads: reports.iter().map(QuadVerdictDoc::from).collect(),
        };
        print!("{}", williamson::machine::to_json(&doc));
    } else if !cli.quiet {
        for (i, report) in reports.iter().enumerate() {
            let verdict = if report.is_williamson() {
                "WILLIAMSON"
            } else {
                "NOT WILLIAMSON"
            };
            println!("quad {}: {} order {}", i + 1, verdict, report.order);
            for f in &report.symmetry_failures {
                println!("  symmetry: sequence {} index {}", f.row.label(), f.index);
            }
            for v in &report.paf_violations {
                println!("  paf: s={} sum={}", v.shift, v.sum);
            }
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED_VERIFICATION)
    }
}

fn cmd_double(cli: &Cli, file: Option<&std::path::Path>) -> ExitCode {
    let quads = match parse_quad_input(file) {
        Ok(quads) => quads,
        Err(code) => return code,
    };
    let mut doubled = Vec::with_capacity(quads.len());
    for (i, quad) in quads.iter().enumerate() {
        match quad.double() {
            Ok(d) => doubled.push(d),
            Err(e) => {
                eprintln!("quad {}: {e}", i + 1);
                return ExitCode::from(EXIT_FAILED_VERIFICATION);
            }
        }
    }
    if cli.machine {
        let doc = DoubleDoc {
            quads: doubled.iter().map(QuadDoc::from).collect(),
        };
        print!("{}", williamson::machine::to_json(&doc));
    } else {
        print!("{}", text::quads_to_text(&doubled));
    }
    ExitCode::SUCCESS
}

fn cmd_search(cli: &Cli, n: usize, limit: usize, no_prune: bool, jobs: usize) -> ExitCode {
    let jobs = if jobs == 0 {
        std::thread::available_parallelism().map_or(1, |p| p.get())
    } else {
        jobs
    };
    let options = SearchOptions {
        limit,
        prune: !no_prune,
        jobs,
    };
    let report = match search_williamson(n, &options) {
        Ok(report) => report,
        Err(e) => return usage_error(e),
    };
    if cli.machine {
        print!("{}", williamson::machine::to_json(&SearchDoc::from(&report)));
        return ExitCode::SUCCESS;
    }
    if !cli.quiet {
        println!("# search order {}", report.order);
        println!("# candidates examined: {}", report.candidates_examined);
        println!("# raw count: {}", report.raw_count);
        println!("# normalized quads: {}", report.quads.len());
        println!("# elapsed: {:?}", report.elapsed);
    }
    print!("{}", text::quads_to_text(&report.quads));
    ExitCode::SUCCESS
}

fn cmd_hadamard(cli: &Cli, file: Option<&std::path::Path>) -> ExitCode {
    let quads = match parse_quad_input(file) {
        Ok(quads) => quads,
        Err(code) => return code,
    };
    let mut matrices = Vec::with_capacity(quads.len());
    for (i, quad) in quads.iter().enumerate() {
        match williamson_array(quad) {
            Ok(matrix) if matrix.is_hadamard() => matrices.push(matrix),
            Ok(_) => {
                eprintln!("quad {}: constructed matrix is not Hadamard", i + 1);
                return ExitCode::from(EXIT_FAILED_VERIFICATION);
            }
            Err(e) => {
                eprintln!("quad {}: {e}", i + 1);
                return ExitCode::from(EXIT_FAILED_VERIFICATION);
            }
        }
    }
    if cli.machine {
        let doc = HadamardDoc {
            matrices: matrices.iter().map(MatrixDoc::from).collect(),
        };
        print!("{}", williamson::machine::to_json(&doc));
        return ExitCode::SUCCESS;
    }
    for (i, matrix) in matrices.iter().enumerate() {
        if i > 0 {
            println!("----");
        }
        if !cli.quiet {
            println!("# hadamard order {}", matrix.order());
        }
        print!("{}", text::matrix_to_text(matrix));
    }
    ExitCode::SUCCESS
}

fn cmd_spectrum(cli: &Cli, sequence: Option<&str>) -> ExitCode {
    let seqs = match sequence {
        Some(text) => match text.parse::<williamson::BinarySequence>() {
            Ok(seq) => vec![seq],
            Err(e) => return usage_error(e),
        },
        None => {
            let input = match read_input(None) {
                Ok(input) => input,
                Err(e) => return usage_error(e),
            };
            match text::parse_sequences(&input) {
                Ok(seqs) => seqs,
                Err(e) => return usage_error(e),
            }
        }
    };
    let spectra: Vec<_> = seqs.iter().map(|s| s.paf_spectrum()).collect();
    if cli.machine {
        let doc = SpectraDoc {
            spectra: spectra
                .iter()
                .map(|sp| SpectrumDoc {
                    length: sp.len(),
                    values: sp.values().to_vec(),
                })
                .collect(),
        };
        print!("{}", williamson::machine::to_json(&doc));
    } else {
        for spectrum in &spectra {
            println!("{spectrum}");
        }
    }
    ExitCode::SUCCESS
}
