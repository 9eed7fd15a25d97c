//! Reading mosaics, layouts and knot tables from disk.

use std::path::{Path, PathBuf};

use knotile_core::enumerate::{Layout, LayoutError};
use knotile_core::invariants::TableError;
use knotile_core::tiles::MosaicError;
use knotile_core::{KnotTable, Mosaic};

use crate::assets;

/// Environment variable naming a knot table file to use instead of the
/// bundled one.
pub const TABLE_ENV: &str = "KNOTILE_TABLE";

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Mosaic { path: PathBuf, source: MosaicError },
    #[error("{path}: {source}")]
    Layout { path: PathBuf, source: LayoutError },
    #[error("knot table {path}: {source}")]
    Table { path: PathBuf, source: TableError },
    #[error("no layout file or bundled layout named {0}")]
    UnknownLayout(String),
}

fn read(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_path_buf(), source })
}

/// Parses either the multi-line `.mosaic` format or the single-line form
/// with rows joined by `/`.
pub fn parse_mosaic(text: &str) -> Result<Mosaic, MosaicError> {
    let body: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    match body.as_slice() {
        [line] if line.contains('/') => Mosaic::parse_line(line),
        _ => Mosaic::parse(text),
    }
}

/// Reads a mosaic file. Suitable connection is not checked here.
pub fn read_mosaic(path: &Path) -> Result<Mosaic, IoError> {
    parse_mosaic(&read(path)?).map_err(|source| IoError::Mosaic { path: path.to_path_buf(), source })
}

/// The knot table from `explicit`, else from [`TABLE_ENV`], else the
/// bundled one.
pub fn load_table(explicit: Option<&Path>) -> Result<KnotTable, IoError> {
    let path = match explicit {
        Some(p) => p.to_path_buf(),
        None => match std::env::var_os(TABLE_ENV) {
            Some(p) if !p.is_empty() => PathBuf::from(p),
            _ => return Ok(KnotTable::bundled()),
        },
    };
    KnotTable::parse(&read(&path)?).map_err(|source| IoError::Table { path, source })
}

/// A layout from a file path or, failing that, a bundled layout name.
pub fn load_layout(spec: &str) -> Result<Layout, IoError> {
    let path = Path::new(spec);
    if path.is_file() {
        return Layout::parse(&read(path)?).map_err(|source| IoError::Layout { path: path.to_path_buf(), source });
    }
    assets::layout(spec).ok_or_else(|| IoError::UnknownLayout(spec.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_mosaic_forms() {
        let a = parse_mosaic("# unknot\n21\n34\n").unwrap();
        let b = parse_mosaic("21/34\n").unwrap();
        assert_eq!(a, b);
        assert!(parse_mosaic("21/3").is_err());
    }

    #[test]
    fn layouts_by_name_or_path() {
        assert_eq!(load_layout("five-17").unwrap().tile_number(), 17);
        assert!(matches!(load_layout("nowhere"), Err(IoError::UnknownLayout(_))));
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("x.layout");
        std::fs::write(&p, "0: 0:\n0: 0:\n").unwrap();
        assert_eq!(load_layout(p.to_str().unwrap()).unwrap().size(), 2);
        std::fs::write(&p, "0: 0:\n0:\n").unwrap();
        assert!(matches!(load_layout(p.to_str().unwrap()), Err(IoError::Layout { .. })));
    }

    #[test]
    fn explicit_table_file() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("t.tbl");
        std::fs::write(&p, "3_1;3;X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)\n").unwrap();
        assert_eq!(load_table(Some(&p)).unwrap().len(), 1);
        std::fs::write(&p, "nonsense\n").unwrap();
        assert!(matches!(load_table(Some(&p)), Err(IoError::Table { .. })));
    }
}
