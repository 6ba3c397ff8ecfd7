//! Resolving `--algebra NAME|FILE` to an algebra.

use std::fmt;
use std::path::Path;

use lielocder_core::catalog::{lookup, CatalogEntry};
use lielocder_core::Error as CoreError;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::dsl::{self, ParseError, ParsedAlgebra};

/// How an analysed algebra was named; part of every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "source", rename_all = "lowercase")]
pub enum AlgebraIdentity {
    Catalog { name: String },
    File { path: String, sha256: String },
}

impl fmt::Display for AlgebraIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraIdentity::Catalog { name } => write!(f, "{name}"),
            AlgebraIdentity::File { path, .. } => write!(f, "{path}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LoadedAlgebra {
    pub identity: AlgebraIdentity,
    pub algebra: ParsedAlgebra,
    /// Catalog metadata, when the algebra came from the catalog.
    pub entry: Option<CatalogEntry>,
}

#[derive(Debug)]
pub enum LoadError {
    Io { path: String, error: std::io::Error },
    Parse { path: String, error: ParseError },
    UnknownName(String),
    BadParameters(CoreError),
}

impl LoadError {
    /// Exit code under the CLI contract.
    pub fn exit_code(&self) -> u8 {
        match self {
            LoadError::Io { .. } | LoadError::UnknownName(_) => crate::EXIT_USAGE,
            LoadError::Parse { .. } | LoadError::BadParameters(_) => crate::EXIT_INVALID,
        }
    }
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io { path, error } => write!(f, "{path}: {error}"),
            LoadError::Parse { path, error } => write!(f, "{path}: {error}"),
            LoadError::UnknownName(name) => {
                write!(f, "`{name}` is neither a readable file nor a catalog name (see `lielocder analyze --help`)")
            }
            LoadError::BadParameters(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LoadError {}

fn looks_like_path(arg: &str) -> bool {
    arg.ends_with(".lie") || arg.contains('/') || arg.contains(std::path::MAIN_SEPARATOR) || Path::new(arg).exists()
}

pub fn load_file(path: &str) -> Result<LoadedAlgebra, LoadError> {
    let bytes = std::fs::read(path).map_err(|error| LoadError::Io { path: path.to_string(), error })?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| LoadError::Io {
        path: path.to_string(),
        error: std::io::Error::new(std::io::ErrorKind::InvalidData, e),
    })?;
    let algebra = dsl::parse(&text).map_err(|error| LoadError::Parse { path: path.to_string(), error })?;
    let sha256 = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
    Ok(LoadedAlgebra { identity: AlgebraIdentity::File { path: path.to_string(), sha256 }, algebra, entry: None })
}

pub fn load_catalog(name: &str) -> Result<LoadedAlgebra, LoadError> {
    let entry = lookup(name).map_err(|e| match e {
        CoreError::UnknownCatalogEntry(n) => LoadError::UnknownName(n),
        other => LoadError::BadParameters(other),
    })?;
    Ok(LoadedAlgebra {
        identity: AlgebraIdentity::Catalog { name: entry.name.clone() },
        algebra: ParsedAlgebra::Rational(entry.algebra.clone()),
        entry: Some(entry),
    })
}

/// Files win over catalog names when the argument looks like a path.
pub fn load(arg: &str) -> Result<LoadedAlgebra, LoadError> {
    if looks_like_path(arg) {
        load_file(arg)
    } else {
        load_catalog(arg)
    }
}
