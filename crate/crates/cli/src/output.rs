//! Serialization helpers: stable numeric formatting, file output and the run
//! manifest.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::CliError;

/// Rounds to 12 significant digits so emitted JSON/CSV stays byte-stable
/// across platforms.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("rounded float reparses")
}

/// Output format of the tabular commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Run manifest: what was executed and which files it produced.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub command_line: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    pub tolerances: Tolerances,
    /// RFC 3339; the only non-deterministic field of a run, kept isolated
    /// here so data files stay byte-identical across reruns.
    pub generated_at: String,
    pub outputs: Vec<ManifestEntry>,
}

#[derive(Debug, Serialize)]
pub struct Tolerances {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solve_tol: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct ManifestEntry {
    pub path: String,
    pub sha256: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hex_string(&hasher.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Writes `bytes` to `path` and a sibling `<path>.manifest.json` recording the
/// content hash.
pub fn write_with_manifest(
    path: &Path,
    bytes: &[u8],
    l: Option<u32>,
    solve_tol: Option<f64>,
) -> Result<(), CliError> {
    fs::write(path, bytes)
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
    let manifest = RunManifest {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        command_line: std::env::args().collect(),
        l,
        tolerances: Tolerances { solve_tol },
        generated_at: chrono::Utc::now().to_rfc3339(),
        outputs: vec![ManifestEntry {
            path: path.display().to_string(),
            sha256: sha256_hex(bytes),
        }],
    };
    let manifest_path = manifest_path_for(path);
    let body = to_json_bytes(&manifest)?;
    fs::write(&manifest_path, body)
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", manifest_path.display())))?;
    Ok(())
}

pub fn manifest_path_for(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    path.with_file_name(name)
}

pub fn to_json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut body = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::usage(format!("serialization failed: {e}")))?;
    body.push('\n');
    Ok(body.into_bytes())
}

/// Emits to the file (with manifest) when a path is given, otherwise to
/// stdout.
pub fn emit(
    out: Option<&Path>,
    bytes: &[u8],
    l: Option<u32>,
    solve_tol: Option<f64>,
) -> Result<(), CliError> {
    match out {
        Some(path) => write_with_manifest(path, bytes, l, solve_tol),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(bytes)
                .map_err(|e| CliError::usage(format!("cannot write to stdout: {e}")))
        }
    }
}
