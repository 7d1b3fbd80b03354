//! The `lyco` command line tool: session files in, JSON reports out.

mod cache;
mod report;
mod run;
mod session;

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};

pub use cache::DiskCache;
pub use report::*;
pub use run::{run_session, run_task, RunOptions};
pub use session::{parse_session, Extension, FieldDecl, IdealDecl, Session, TaskDecl, TaskKind};

use crate::error::Error;
use crate::groebner::set_cache;

#[derive(Parser, Debug)]
#[command(name = "lyco", version, about = "Connectivity invariants of local cohomology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Runs every task of a session file.
    Run(RunArgs),
}

#[derive(clap::Args, Debug)]
struct RunArgs {
    session: PathBuf,
    /// Write the report here instead of standard output.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Number of tasks to run in parallel.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Gröbner basis cache directory (LYCO_CACHE takes precedence).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Disable the on-disk cache.
    #[arg(long)]
    no_cache: bool,
    /// Adjoin an algebraic generator, as `g:minpoly`.
    #[arg(long)]
    extend: Option<String>,
    /// Assert that the field splits every top-dimensional component.
    #[arg(long)]
    certify_field: bool,
    /// Critical pair budget for each Gröbner basis computation.
    #[arg(long)]
    budget_pairs: Option<u64>,
}

/// Cache directory: `LYCO_CACHE`, then the flag, then the per-user cache.
pub fn cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    if let Some(env) = std::env::var_os("LYCO_CACHE").filter(|v| !v.is_empty()) {
        return Some(PathBuf::from(env));
    }
    if flag.is_some() {
        return flag;
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("lyco"))
}

/// Runs the tool and returns the process exit code: 0 on success, 1 for
/// usage errors, 2 for parse errors, 3 for exhausted resources, 4 for
/// certificate failures.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let Command::Run(args) = cli.command;
    match execute(args) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(args: RunArgs) -> Result<(), Error> {
    let text = std::fs::read_to_string(&args.session)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", args.session.display())))?;
    let mut session = parse_session(&text)?;
    if let Some(spec) = &args.extend {
        let (g, m) = spec
            .split_once(':')
            .ok_or_else(|| Error::InvalidArgument("--extend expects `generator:minpoly`".into()))?;
        session = session.extend(g.trim(), m.trim())?;
    }
    let cache = if args.no_cache {
        None
    } else {
        cache_dir(args.cache_dir.clone()).and_then(|d| match DiskCache::new(&d) {
            Ok(c) => Some(Arc::new(c)),
            Err(e) => {
                eprintln!("warning: cache directory {} unusable ({e}); continuing without it", d.display());
                None
            }
        })
    };
    set_cache(cache.clone().map(|c| c as Arc<dyn crate::groebner::GbCache>));
    let opts = RunOptions { jobs: args.jobs, certify_field: args.certify_field, budget_pairs: args.budget_pairs };
    let report = run_session(&session, &opts);
    set_cache(None);
    if let Some(c) = &cache {
        for w in c.take_warnings() {
            eprintln!("warning: {w}");
        }
    }
    let json = report?.to_json();
    match &args.json {
        Some(path) => std::fs::write(path, json + "\n")
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?,
        None => println!("{json}"),
    }
    Ok(())
}
