//! The `semiinv` command line. [`run`] parses arguments, writes data to `out`
//! and progress to `err`, and returns the process exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::boxpartitions::delta;
use crate::cache::{self, KernelCache, Lookup};
use crate::cayley::semiinvariant_dim;
use crate::differences::{self, Family, ScanReport};
use crate::error::Error;
use crate::qpoly::gauss;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ASSERTION: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "semiinv",
    version,
    about = "Gaussian coefficients, semi-invariants and unimodality checks"
)]
struct Cli {
    /// Kernel cache directory (default: $SEMIINV_CACHE or ./.semiinv-cache)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Gaussian coefficient [a, b]
    Gauss {
        a: u32,
        b: u32,
        #[arg(long)]
        json: bool,
    },
    /// Compare the partition-count difference with the kernel dimension
    Dim { n: u32, k: u32, m: u64 },
    /// Write the kernel basis at (n, k, m) as JSON
    Basis {
        n: u32,
        k: u32,
        m: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verifier whose failure would indicate a bug
    Verify {
        suite: Suite,
        #[arg(long)]
        nmax: Option<u32>,
        #[arg(long)]
        kmax: Option<u32>,
        #[arg(long)]
        rmax: Option<u32>,
        /// Prefix for `.jsonl` and `.csv` report files
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Record findings over a parameter grid
    Scan {
        family: ScanFamily,
        #[arg(long)]
        nmax: Option<u32>,
        #[arg(long)]
        kmax: Option<u32>,
        #[arg(long)]
        rmax: Option<u32>,
        #[arg(long)]
        mmax: Option<u32>,
        #[arg(long)]
        bound: Option<u32>,
        /// Also scan F below n >= 8, k >= 15
        #[arg(long)]
        include_below_range: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Prefix for `.jsonl` and `.csv` report files; JSONL goes to stdout
        /// when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Sylvester,
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    Nr8,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScanFamily {
    #[value(name = "F-strict")]
    FStrict,
    Strange,
    Bergeron,
    StanleyZanello,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) => EXIT_USAGE,
        Error::Verification { .. }
        | Error::DimensionMismatch { .. }
        | Error::NonnegativityViolation { .. }
        | Error::Dependent { .. } => EXIT_ASSERTION,
        Error::Io { .. } | Error::Json(_) | Error::Csv(_) => EXIT_IO,
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &str, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("i/o error on {path}: {e}"),
    }
}

type CmdResult = std::result::Result<(), Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let cache = KernelCache::resolve(cli.cache_dir);
    match cli.command {
        Command::Gauss { a, b, json } => cmd_gauss(a, b, json, out),
        Command::Dim { n, k, m } => cmd_dim(n, k, m, out),
        Command::Basis { n, k, m, out: path } => {
            cmd_basis(&cache, n, k, m, path.as_deref(), out, err)
        }
        Command::Verify {
            suite,
            nmax,
            kmax,
            rmax,
            out: prefix,
            jobs,
        } => cmd_verify(
            suite,
            Bounds { nmax, kmax, rmax },
            jobs,
            prefix.as_deref(),
            out,
            err,
        ),
        Command::Scan {
            family,
            nmax,
            kmax,
            rmax,
            mmax,
            bound,
            include_below_range,
            jobs,
            out: prefix,
        } => {
            let reports = with_jobs(jobs, || match family {
                ScanFamily::FStrict => differences::scan_conjecture_f_strict(
                    nmax.unwrap_or(10),
                    kmax.unwrap_or(20),
                    include_below_range,
                ),
                ScanFamily::Strange => differences::scan_strange(
                    nmax.unwrap_or(21),
                    kmax.unwrap_or(6),
                    rmax.unwrap_or(3),
                ),
                ScanFamily::Bergeron => differences::scan_bergeron(bound.unwrap_or(8)),
                ScanFamily::StanleyZanello => {
                    differences::scan_stanley_zanello(kmax.unwrap_or(8), mmax.unwrap_or(16))
                }
            })?;
            let fam = match family {
                ScanFamily::FStrict => Family::F,
                ScanFamily::Strange => Family::Strange,
                ScanFamily::Bergeron => Family::Bergeron,
                ScanFamily::StanleyZanello => Family::StanleyZanello,
            };
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(
                err,
                "scanned {} cells, {failed} with failed checks",
                reports.len()
            );
            emit_reports(fam, &reports, prefix.as_deref(), out, err)
        }
    }
}

fn with_jobs<T: Send>(
    jobs: Option<usize>,
    f: impl FnOnce() -> Result<T, Error> + Send,
) -> std::result::Result<T, Failure> {
    match jobs {
        None => Ok(f()?),
        Some(0) => Err(Failure {
            code: EXIT_USAGE,
            message: "--jobs must be at least 1".into(),
        }),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Failure {
                    code: EXIT_USAGE,
                    message: e.to_string(),
                })?;
            Ok(pool.install(f)?)
        }
    }
}

fn cmd_gauss(a: u32, b: u32, json: bool, out: &mut dyn Write) -> CmdResult {
    let p = gauss(a, b)?;
    let text = if json {
        serde_json::to_string(&p).map_err(Error::from)?
    } else {
        p.to_string()
    };
    writeln!(out, "{text}").map_err(|e| io_failure("stdout", e))
}

fn cmd_dim(n: u32, k: u32, m: u64, out: &mut dyn Write) -> CmdResult {
    let kernel = semiinvariant_dim(n, k, m)?;
    let d = delta(k, n, m as i64);
    let matched = d == kernel.into();
    let flag = if matched { "MATCH" } else { "MISMATCH" };
    writeln!(out, "delta={d} kernel={kernel} {flag}").map_err(|e| io_failure("stdout", e))?;
    if !matched && 2 * m <= n as u64 * k as u64 {
        return Err(Error::DimensionMismatch {
            n,
            k,
            m,
            kernel,
            delta: d.to_string(),
        }
        .into());
    }
    Ok(())
}

fn cmd_basis(
    cache: &KernelCache,
    n: u32,
    k: u32,
    m: u64,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let (kb, how) = cache.get(n, k, m)?;
    let note = match how {
        Lookup::Hit => "cache hit",
        Lookup::Computed => "computed",
        Lookup::Replaced => "recomputed invalid cache entry",
    };
    let _ = writeln!(err, "basis ({n}, {k}, {m}): dim {} ({note})", kb.dim());
    let bytes = cache::encode(&kb)?;
    match path {
        Some(p) => cache::write_atomic(p, &bytes)?,
        None => out.write_all(&bytes).map_err(|e| io_failure("stdout", e))?,
    }
    Ok(())
}

struct Bounds {
    nmax: Option<u32>,
    kmax: Option<u32>,
    rmax: Option<u32>,
}

fn cmd_verify(
    suite: Suite,
    Bounds { nmax, kmax, rmax }: Bounds,
    jobs: Option<usize>,
    prefix: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let line = match suite {
        Suite::Sylvester => {
            let cells = with_jobs(jobs, || {
                differences::verify_sylvester(nmax.unwrap_or(6), kmax.unwrap_or(6))
            })?;
            format!("sylvester: {cells} cells, kernel dimension equals delta everywhere")
        }
        Suite::Nr8 => {
            let cells = differences::verify_nr8_base()?;
            format!("nr8: {cells} cells with 8 <= n, r < 16, delta(r, n, nr/2) >= 2 everywhere")
        }
        Suite::F => {
            let reports = with_jobs(jobs, || {
                differences::verify_theorem_f(nmax.unwrap_or(12), kmax.unwrap_or(12))
            })?;
            if let Some(p) = prefix {
                write_report_files(Family::F, &reports, p)?;
            }
            format!("F: {} cells symmetric and unimodal", reports.len())
        }
        Suite::G => {
            let reports = with_jobs(jobs, || {
                differences::verify_theorem_g(
                    nmax.unwrap_or(10),
                    kmax.unwrap_or(14),
                    rmax.unwrap_or(10),
                )
            })?;
            if let Some(p) = prefix {
                write_report_files(Family::G, &reports, p)?;
            }
            format!(
                "G: {} cells symmetric and strictly unimodal except the ends",
                reports.len()
            )
        }
    };
    let _ = writeln!(err, "all assertions passed");
    writeln!(out, "{line}").map_err(|e| io_failure("stdout", e))
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn write_report_files(family: Family, reports: &[ScanReport], prefix: &Path) -> Result<(), Error> {
    if let Some(parent) = prefix.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|source| Error::Io {
            path: parent.to_path_buf(),
            source,
        })?;
    }
    differences::write_jsonl(&with_extension(prefix, "jsonl"), reports)?;
    differences::write_csv(&with_extension(prefix, "csv"), family, reports)
}

fn emit_reports(
    family: Family,
    reports: &[ScanReport],
    prefix: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    match prefix {
        Some(p) => {
            write_report_files(family, reports, p)?;
            let _ = writeln!(
                err,
                "wrote {} and {}",
                with_extension(p, "jsonl").display(),
                with_extension(p, "csv").display()
            );
        }
        None => {
            for r in reports {
                let line = serde_json::to_string(r).map_err(Error::from)?;
                writeln!(out, "{line}").map_err(|e| io_failure("stdout", e))?;
            }
        }
    }
    Ok(())
}
