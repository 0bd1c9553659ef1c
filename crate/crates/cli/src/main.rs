mod args;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use folkman_core::Error;
use serde::Serialize;
use sha2::{Digest, Sha256};

use args::Cli;
use commands::{run, Body};

/// One per run. The digest covers the output bytes only, so runs with the
/// same arguments compare equal regardless of timestamps.
#[derive(Serialize)]
struct RunManifest<'a> {
    subcommand: &'a str,
    parameters: Vec<String>,
    seed: Option<u64>,
    version: &'static str,
    started_at: String,
    finished_at: String,
    output_sha256: Option<String>,
    exit_code: u8,
    error: Option<String>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capacity(_) | Error::Nonexistent(_) | Error::Verification(_) => 3,
        Error::Domain(_)
        | Error::Precondition(_)
        | Error::Parse { .. }
        | Error::Io(_)
        | Error::Json(_) => 2,
    }
}

fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started_at = now();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global();
    }
    let result = run(&cli.command).and_then(|outcome| {
        let text = match &outcome.body {
            Body::Text(s) => s.clone(),
            Body::Json(v) if cli.pretty => render::pretty(v),
            Body::Json(v) => format!("{}\n", serde_json::to_string(v)?),
        };
        match &cli.out {
            Some(path) => std::fs::write(path, &text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok((
            outcome.negative,
            hex::encode(Sha256::digest(text.as_bytes())),
        ))
    });
    let (code, digest, error) = match result {
        Ok((negative, digest)) => (u8::from(negative), Some(digest), None),
        Err(e) => {
            eprintln!("error: {e}");
            (exit_code(&e), None, Some(e.to_string()))
        }
    };
    let manifest = RunManifest {
        subcommand: cli.command.name(),
        parameters: std::env::args().skip(1).collect(),
        seed: cli.command.seed(),
        version: env!("CARGO_PKG_VERSION"),
        started_at,
        finished_at: now(),
        output_sha256: digest,
        exit_code: code,
        error,
    };
    let line = serde_json::to_string(&manifest).unwrap_or_default();
    match &cli.manifest {
        Some(path) => {
            if let Err(e) = std::fs::write(path, format!("{line}\n")) {
                eprintln!("error: cannot write manifest: {e}");
            }
        }
        None => eprintln!("{line}"),
    }
    ExitCode::from(code)
}
