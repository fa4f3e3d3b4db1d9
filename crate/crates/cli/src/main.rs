//! Command line entry point: verification suites, family synthesis, operator
//! dumps and corpus loading.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qlie_core::classical::{defects, dump_algebra, load_algebra, load_algebra_str};
use qlie_core::runner::{
    dump_operator, error_exit_code, exit_code, read_bundle, run_verify, write_bundle,
    Families, Suite, VerifyOptions, DEFAULT_CATALOG_DEPTH, DEFAULT_SEED,
};
use qlie_core::Error;

const DEFAULT_CACHE: &str = "qlie-cache/families.json";

#[derive(Parser)]
#[command(name = "qlie", version, about = "Exact verification of sl2 Yang-Baxter families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Synthesize the families when the cache is missing or stale.
        #[arg(long)]
        allow_synthesize: bool,
        #[arg(long, default_value = DEFAULT_CACHE)]
        cache: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Synthesize and certify the quantum families, writing the cache.
    Synthesize {
        #[arg(long, default_value_t = DEFAULT_CATALOG_DEPTH)]
        catalog_depth: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value = DEFAULT_CACHE)]
        out: PathBuf,
    },
    /// Print or write the matrix of a named operator.
    Dump {
        #[arg(long)]
        object: String,
        /// Value of λ as a canonical string, e.g. "1/(v^2+1)".
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        at_q_one: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = DEFAULT_CACHE)]
        cache: PathBuf,
    },
    /// Load and validate algebra files (a file or a directory of *.json).
    Corpus {
        #[arg(long)]
        load: PathBuf,
    },
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(error_exit_code(e) as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, max_n, report, allow_synthesize, cache, seed } => {
            let suite: Suite = match suite.parse() {
                Ok(s) => s,
                Err(e) => return fail(&e),
            };
            let opts = VerifyOptions { suite, max_n, report, allow_synthesize, cache, seed, ..Default::default() };
            match run_verify(&opts) {
                Ok(r) => {
                    for e in r.failing() {
                        eprintln!("FAIL {}: {}", e.id, e.residual);
                    }
                    let passed = r.entries.iter().filter(|e| e.passed()).count();
                    eprintln!("{passed}/{} checks pass", r.entries.len());
                    if opts.report.is_none() {
                        println!("{}", r.to_json());
                    }
                    ExitCode::from(exit_code(&r) as u8)
                }
                Err(e) => fail(&e),
            }
        }
        Command::Synthesize { catalog_depth, seed, out } => match Families::synthesize(catalog_depth, seed) {
            Ok(f) => {
                for (fam, s) in &f.screened {
                    println!("{fam} {}: {}", s.pattern, s.verdict);
                }
                println!("R = {}, R' = {}", f.adjoint.pattern, f.primed.pattern);
                for (n, m) in &f.modules {
                    println!("R_V{n} = {}", m.fam.pattern);
                }
                match write_bundle(&f, &out) {
                    Ok(()) => {
                        println!("wrote {}", out.display());
                        ExitCode::SUCCESS
                    }
                    Err(e) => fail(&e),
                }
            }
            Err(e) => fail(&e),
        },
        Command::Dump { object, lambda, at_q_one, out, cache } => {
            let families =
                || read_bundle(&cache).or_else(|_| Families::synthesize(DEFAULT_CATALOG_DEPTH, DEFAULT_SEED));
            match dump_operator(&object, lambda.as_deref(), at_q_one, &families) {
                Ok(j) => {
                    let text = serde_json::to_string_pretty(&j).expect("matrix serializes");
                    match out {
                        Some(p) => match std::fs::write(&p, text) {
                            Ok(()) => ExitCode::SUCCESS,
                            Err(e) => fail(&Error::Io(format!("{}: {e}", p.display()))),
                        },
                        None => {
                            println!("{text}");
                            ExitCode::SUCCESS
                        }
                    }
                }
                Err(e) => fail(&e),
            }
        }
        Command::Corpus { load } => corpus(&load),
    }
}

fn corpus(path: &Path) -> ExitCode {
    let files: Vec<PathBuf> = if path.is_dir() {
        let mut v: Vec<PathBuf> = match std::fs::read_dir(path) {
            Ok(d) => d.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "json")).collect(),
            Err(e) => return fail(&Error::Io(format!("{}: {e}", path.display()))),
        };
        v.sort();
        v
    } else {
        vec![path.to_path_buf()]
    };
    let mut code = ExitCode::SUCCESS;
    for f in files {
        match load_algebra(&f) {
            Ok((g, acts)) => {
                let d = match defects(&g, None) {
                    Ok(d) => d,
                    Err(e) => return fail(&e),
                };
                let round_trip = load_algebra_str(&dump_algebra(&g, &acts)).is_ok_and(|(h, b)| h == g && b == acts);
                println!(
                    "{}: {} dim {}, {} action(s), antisymmetric {}, jacobi {}, round-trip {}",
                    f.display(),
                    g.name,
                    g.dim(),
                    acts.len(),
                    d.antisymmetry.is_zero,
                    d.jacobi.is_zero,
                    round_trip
                );
                for a in &acts {
                    match defects(&g, Some(a)) {
                        Ok(d) => println!("  {} dim {}: action {}", a.name, a.dim(), d.action.is_some_and(|x| x.is_zero)),
                        Err(e) => return fail(&e),
                    }
                }
            }
            Err(e) => {
                eprintln!("{}: {e}", f.display());
                code = ExitCode::from(3);
            }
        }
    }
    code
}
