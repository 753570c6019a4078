use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::report::{InputDigest, RunReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Op(#[from] cotwist_core::Error),
}

/// Paths that do not exist as given are looked up under `COTWIST_FIXTURES`,
/// first with the full relative path, then by file name.
pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    if let Some(dir) = std::env::var_os("COTWIST_FIXTURES") {
        let dir = PathBuf::from(dir);
        let joined = dir.join(path);
        if joined.exists() {
            return joined;
        }
        if let Some(name) = path.file_name() {
            let by_name = dir.join(name);
            if by_name.exists() {
                return by_name;
            }
        }
    }
    path.to_path_buf()
}

pub fn read(path: &Path, report: &mut RunReport) -> Result<String, CliError> {
    let text = std::fs::read_to_string(resolve(path))
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    report.inputs.push(InputDigest {
        path: path.display().to_string(),
        sha256: hex::encode(Sha256::digest(text.as_bytes())),
    });
    Ok(text)
}

pub fn parse<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| parse_error(path, &e))
}

pub fn parse_error(path: &Path, e: &serde_json::Error) -> CliError {
    let full = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
    CliError::Parse { path: path.display().to_string(), line: e.line(), column: e.column(), message }
}

pub fn load<T: DeserializeOwned>(path: &Path, report: &mut RunReport) -> Result<T, CliError> {
    let text = read(path, report)?;
    parse(path, &text)
}
