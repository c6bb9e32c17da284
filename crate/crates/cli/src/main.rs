//! `weilbounds` command-line front end.
//!
//! Every run writes a manifest recording the subcommand, its parameters and
//! the SHA-256 digest of the primary output; `weilbounds replay` re-runs a
//! manifest and checks the digest.

mod commands;
mod error;
mod output;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use commands::Command;
use error::CliError;
use output::Format;

const MANIFEST_SCHEMA: &str = "weilbounds.manifest/1";

#[derive(Debug, Parser)]
#[command(
    name = "weilbounds",
    version,
    about = "Weil numbers, ramification bounds, extremal majorants and genus bounds"
)]
struct Cli {
    /// output format; defaults to csv for `simulate` and json otherwise
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// write the primary output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// manifest path; defaults to `<out>.manifest.json`, or stderr without --out
    #[arg(long, global = true)]
    manifest_out: Option<PathBuf>,
    #[command(subcommand)]
    top: Top,
}

#[derive(Debug, Subcommand)]
enum Top {
    #[command(flatten)]
    Run(Command),
    /// Re-run a manifest and verify its output digest
    Replay {
        #[arg(long = "manifest", value_name = "PATH")]
        path: PathBuf,
    },
}

#[derive(Debug, Serialize, Deserialize)]
struct RunManifest {
    schema: String,
    subcommand: String,
    parameters: Command,
    format: Format,
    seed: Option<u64>,
    version: String,
    output_sha256: String,
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("WEILBOUNDS_THREADS") else {
        return Ok(());
    };
    let n: usize = v.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "WEILBOUNDS_THREADS must be a positive integer, got {v:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, bytes)?,
        None => std::io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    match cli.top {
        Top::Run(cmd) => {
            let format = cli.format.unwrap_or(match cmd {
                Command::Simulate(_) => Format::Csv,
                _ => Format::Json,
            });
            let bytes = cmd.run()?.render(format)?;
            emit(cli.out.as_deref(), &bytes)?;
            let manifest = RunManifest {
                schema: MANIFEST_SCHEMA.into(),
                subcommand: cmd.name().into(),
                seed: cmd.seed(),
                parameters: cmd,
                format,
                version: env!("CARGO_PKG_VERSION").into(),
                output_sha256: digest(&bytes),
            };
            let mut text = serde_json::to_vec_pretty(&manifest)?;
            text.push(b'\n');
            let path = cli.manifest_out.or_else(|| {
                cli.out.as_ref().map(|o| {
                    let mut s = o.clone().into_os_string();
                    s.push(".manifest.json");
                    PathBuf::from(s)
                })
            });
            match path {
                Some(p) => fs::write(p, text)?,
                None => std::io::stderr().lock().write_all(&text)?,
            }
        }
        Top::Replay { path } => {
            let manifest: RunManifest = serde_json::from_slice(&fs::read(&path)?)
                .map_err(|e| CliError::Manifest(format!("{}: {e}", path.display())))?;
            if manifest.schema != MANIFEST_SCHEMA {
                return Err(CliError::Manifest(format!(
                    "unknown schema {:?}",
                    manifest.schema
                )));
            }
            let bytes = manifest.parameters.run()?.render(manifest.format)?;
            let actual = digest(&bytes);
            if actual != manifest.output_sha256 {
                return Err(CliError::Mismatch {
                    expected: manifest.output_sha256,
                    actual,
                });
            }
            emit(cli.out.as_deref(), &bytes)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
