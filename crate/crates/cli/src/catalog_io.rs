use std::fs;
use std::path::Path;

use coinmotif::MotifCatalog;

use crate::error::CliError;

/// Pretty-printed JSON with a trailing newline.
pub fn to_json(catalog: &MotifCatalog) -> String {
    let mut s = serde_json::to_string_pretty(catalog).expect("catalog serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<MotifCatalog, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Data(format!("malformed catalog: {e}")))
}

pub fn write_catalog(path: &Path, catalog: &MotifCatalog) -> Result<(), CliError> {
    fs::write(path, to_json(catalog)).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

pub fn read_catalog(path: &Path) -> Result<MotifCatalog, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    from_json(&text)
}
