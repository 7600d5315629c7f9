//! File formats: lattice and relation JSON, Burmeister `.cxt` contexts, and
//! DOT order diagrams.

mod cxt;
mod dot;
mod json;

use std::path::Path;

pub use cxt::{read_cxt, write_cxt};
pub use dot::{concepts_to_dot, factor_to_dot, lattice_to_dot, order_to_dot};
pub use json::{
    lattice_from_json, lattice_to_json, relation_from_json, relation_to_json, Closure, LatticeFile, RelationFile,
};

use crate::error::{Error, Result};

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}
