//! Command-line surface for the matroid free-product library.
//!
//! Every verb is a thin adapter over a library call. Results go to stdout,
//! diagnostics to stderr. Exit codes: 0 success or true predicate, 1 false
//! predicate, 2 usage error, 3 invalid matroid input.

use clap::{Parser, Subcommand};
use matroids::enumerate::{enumerate_matroids, welsh_check};
use matroids::free_product::{count_factorizations, free_product, recover_factors};
use matroids::mask::parse_subset;
use matroids::verify;
use matroids::weak::{find_weak_map, is_weak_map};
use matroids::{is_isomorphic, Bijection, Error, Matroid};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "matroids", version, about = "Matroid free-product calculator and verifier")]
struct Cli {
    /// Write the primary result to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Number of worker threads for parallel operations
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Suppress progress diagnostics on stderr
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a matroid literal or constructor and print its normal form
    Parse { matroid: String },
    /// Rank of a subset: `rank <matroid> <subset>`
    Rank { matroid: String, subset: String },
    /// Dual matroid
    Dual { matroid: String },
    /// Restriction to a subset, renumbered ascending
    Restrict { matroid: String, subset: String },
    /// Contraction by a subset, renumbered ascending
    Contract { matroid: String, subset: String },
    /// Direct sum (second summand shifted)
    Dsum { left: String, right: String },
    /// Free product (second factor shifted)
    Freeprod { left: String, right: String },
    /// Isomorphism test; prints a bijection in one-line notation on success
    Iso { left: String, right: String },
    /// Find a weak map, or check a given bijection for weakness
    Weakmap {
        source: String,
        target: String,
        /// Bijection in one-line notation to check instead of searching
        bijection: Option<String>,
    },
    /// Recover the ordered factors of a free product, left factor of size k
    Recover { matroid: String, k: usize },
    /// Count subsets A with L|A isomorphic to M and L/A isomorphic to N
    Factcount { l: String, m: String, n: String },
    /// Enumerate all isomorphism classes on n elements as a catalog
    Enumerate { n: usize },
    /// Injectivity count certifying f_{n+m} >= f_n * f_m at one size pair
    Welsh { n: usize, m: usize },
    /// Run the structural property suites and print a PASS/FAIL table
    Verify {
        /// Cap the exhaustive ranges at this combined ground-set size
        #[arg(long)]
        scale: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_)
                | Error::ParseAt { .. }
                | Error::EmptyFamily
                | Error::UnequalCardinality { .. }
                | Error::ExchangeViolation { .. }
                | Error::WidthMismatch { .. }
                | Error::GroundSetTooLarge(_) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

/// Parse a matroid literal or one of the constructor shorthands
/// `uniform:k,n`, `free:n`, `zero:n`.
fn matroid_arg(s: &str) -> Result<Matroid, Error> {
    if let Some(rest) = s.strip_prefix("uniform:") {
        let (k, n) = rest
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("uniform shorthand needs k,n, got {rest:?}")))?;
        let k = k.parse().map_err(|_| Error::Parse(format!("bad rank {k:?}")))?;
        let n = n.parse().map_err(|_| Error::Parse(format!("bad size {n:?}")))?;
        return Matroid::uniform(k, n);
    }
    if let Some(n) = s.strip_prefix("free:") {
        return Matroid::free(n.parse().map_err(|_| Error::Parse(format!("bad size {n:?}")))?);
    }
    if let Some(n) = s.strip_prefix("zero:") {
        return Matroid::zero(n.parse().map_err(|_| Error::Parse(format!("bad size {n:?}")))?);
    }
    s.parse()
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::Parse(e.to_string()))
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let pass = ExitCode::SUCCESS;
    let fail = ExitCode::from(1);
    match &cli.command {
        Command::Parse { matroid } => {
            emit(cli, &format!("{}\n", matroid_arg(matroid)?))?;
            Ok(pass)
        }
        Command::Rank { matroid, subset } => {
            let m = matroid_arg(matroid)?;
            let a = parse_subset(subset, m.n())?;
            emit(cli, &format!("{}\n", m.rank(a)?))?;
            Ok(pass)
        }
        Command::Dual { matroid } => {
            emit(cli, &format!("{}\n", matroid_arg(matroid)?.dual()))?;
            Ok(pass)
        }
        Command::Restrict { matroid, subset } => {
            let m = matroid_arg(matroid)?;
            let a = parse_subset(subset, m.n())?;
            emit(cli, &format!("{}\n", m.restrict(a)?))?;
            Ok(pass)
        }
        Command::Contract { matroid, subset } => {
            let m = matroid_arg(matroid)?;
            let a = parse_subset(subset, m.n())?;
            emit(cli, &format!("{}\n", m.contract(a)?))?;
            Ok(pass)
        }
        Command::Dsum { left, right } => {
            let sum = matroid_arg(left)?.direct_sum(&matroid_arg(right)?)?;
            emit(cli, &format!("{sum}\n"))?;
            Ok(pass)
        }
        Command::Freeprod { left, right } => {
            let prod = free_product(&matroid_arg(left)?, &matroid_arg(right)?)?;
            emit(cli, &format!("{prod}\n"))?;
            Ok(pass)
        }
        Command::Iso { left, right } => {
            match is_isomorphic(&matroid_arg(left)?, &matroid_arg(right)?) {
                Some(phi) => {
                    emit(cli, &format!("{phi}\n"))?;
                    Ok(pass)
                }
                None => {
                    if !cli.quiet {
                        eprintln!("not isomorphic");
                    }
                    Ok(fail)
                }
            }
        }
        Command::Weakmap { source, target, bijection } => {
            let p = matroid_arg(source)?;
            let q = matroid_arg(target)?;
            match bijection {
                Some(b) => {
                    if is_weak_map(&p, &q, &Bijection::parse(b)?)? {
                        emit(cli, "weak\n")?;
                        Ok(pass)
                    } else {
                        if !cli.quiet {
                            eprintln!("not a weak map");
                        }
                        Ok(fail)
                    }
                }
                None => match find_weak_map(&p, &q)? {
                    Some(phi) => {
                        emit(cli, &format!("{phi}\n"))?;
                        Ok(pass)
                    }
                    None => {
                        if !cli.quiet {
                            eprintln!("no weak map");
                        }
                        Ok(fail)
                    }
                },
            }
        }
        Command::Recover { matroid, k } => {
            let l = matroid_arg(matroid)?;
            match recover_factors(&l, *k) {
                Ok(split) => {
                    emit(
                        cli,
                        &format!(
                            "left={} right={} witness={}\n",
                            split.left, split.right, split.witness
                        ),
                    )?;
                    Ok(pass)
                }
                Err(Error::NotAFreeProduct(_)) => {
                    if !cli.quiet {
                        eprintln!("no free-product split with left factor of size {k}");
                    }
                    Ok(fail)
                }
                Err(e) => Err(e),
            }
        }
        Command::Factcount { l, m, n } => {
            let count = count_factorizations(&matroid_arg(l)?, &matroid_arg(m)?, &matroid_arg(n)?)?;
            emit(cli, &format!("{count}\n"))?;
            Ok(pass)
        }
        Command::Enumerate { n } => {
            if !cli.quiet {
                eprintln!("enumerating matroids on {n} elements...");
            }
            let catalog = enumerate_matroids(*n)?;
            let mut buf = Vec::new();
            catalog.save(&mut buf).map_err(|e| Error::Parse(e.to_string()))?;
            emit(cli, std::str::from_utf8(&buf).expect("catalog text is UTF-8"))?;
            Ok(pass)
        }
        Command::Welsh { n, m } => {
            let (products, distinct, injective) = welsh_check(*n, *m)?;
            emit(
                cli,
                &format!(
                    "products={products} distinct={distinct} injective={}\n",
                    if injective { "yes" } else { "no" }
                ),
            )?;
            Ok(if injective { pass } else { fail })
        }
        Command::Verify { scale } => {
            if !cli.quiet {
                eprintln!("running property suites (this builds catalogs up to 6 elements)...");
            }
            let reports = verify::run_all(*scale)?;
            let mut text = String::new();
            let mut all_passed = true;
            for r in &reports {
                all_passed &= r.passed;
                text.push_str(&format!(
                    "{:<36} {} {}\n",
                    r.name,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.detail
                ));
            }
            emit(cli, &text)?;
            Ok(if all_passed { pass } else { fail })
        }
    }
}
