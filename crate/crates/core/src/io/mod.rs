//! Exact JSON documents, OBJ export, decimal rendering and atomic writes.

mod decimal;
mod json;
mod obj;

use std::io::Write;
use std::path::Path;

pub use decimal::{format_f64, format_significant};
pub use json::{
    decode, decode_document, encode, encode_with_metadata, Component, ExactDocument,
    SCHEMA_VERSION,
};
pub use obj::{to_obj, ToObj, MAX_PRECISION, MIN_PRECISION};

/// Writes `bytes` to a temporary file next to `path`, then renames it over
/// `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
