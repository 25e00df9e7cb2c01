//! One CSV file per run, with a header row and one column per sensor.

use std::path::{Path, PathBuf};

use coinmotif::TimeSeries;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("{path}: {message}")]
    Read { path: PathBuf, message: String },
    #[error("{path}: no column `{column}`")]
    MissingColumn { path: PathBuf, column: String },
    #[error("{path}: row {row}, column `{column}`: cannot parse `{value}` as a number")]
    Parse {
        path: PathBuf,
        row: usize,
        column: String,
        value: String,
    },
    #[error("{path}: no data rows")]
    EmptyFile { path: PathBuf },
    #[error("pattern `{0}` matched no files")]
    NoMatch(String),
}

/// Column names treated as timestamps rather than sensors.
pub const TIMESTAMP_COLUMNS: [&str; 3] = ["time", "timestamp", "t"];

pub fn is_timestamp(column: &str) -> bool {
    TIMESTAMP_COLUMNS.iter().any(|t| t.eq_ignore_ascii_case(column.trim()))
}

/// A parsed run file: its id (the file stem), header and raw cells.
#[derive(Debug, Clone)]
pub struct RunFile {
    pub path: PathBuf,
    pub id: String,
    pub headers: Vec<String>,
    rows: Vec<csv::StringRecord>,
}

impl RunFile {
    pub fn read(path: &Path) -> Result<Self, IngestError> {
        let read_err = |e: csv::Error| IngestError::Read {
            path: path.to_path_buf(),
            message: e.to_string(),
        };
        let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_path(path).map_err(read_err)?;
        let headers = reader.headers().map_err(read_err)?.iter().map(str::to_string).collect();
        let rows = reader.records().collect::<Result<Vec<_>, _>>().map_err(read_err)?;
        if rows.is_empty() {
            return Err(IngestError::EmptyFile { path: path.to_path_buf() });
        }
        let id = path
            .file_stem()
            .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        Ok(Self {
            path: path.to_path_buf(),
            id,
            headers,
            rows,
        })
    }

    /// Non-timestamp columns in header order.
    pub fn sensor_columns(&self) -> Vec<String> {
        self.headers.iter().filter(|h| !is_timestamp(h)).cloned().collect()
    }

    pub fn column(&self, name: &str) -> Result<Vec<f64>, IngestError> {
        let col = self.headers.iter().position(|h| h == name).ok_or_else(|| IngestError::MissingColumn {
            path: self.path.clone(),
            column: name.to_string(),
        })?;
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let cell = r.get(col).unwrap_or("");
                cell.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| IngestError::Parse {
                    path: self.path.clone(),
                    // 1-based, counting the header as row 1.
                    row: i + 2,
                    column: name.to_string(),
                    value: cell.to_string(),
                })
            })
            .collect()
    }

    pub fn series(&self, sensor: &str) -> Result<TimeSeries, IngestError> {
        let values = self.column(sensor)?;
        TimeSeries::new(self.id.clone(), sensor, values).map_err(|e| IngestError::Read {
            path: self.path.clone(),
            message: e.to_string(),
        })
    }
}

/// Expands glob patterns in order; matches of one pattern are sorted.
pub fn expand_inputs(patterns: &[String]) -> Result<Vec<PathBuf>, IngestError> {
    let mut out = Vec::new();
    for p in patterns {
        let mut matched: Vec<PathBuf> = glob::glob(p)
            .map_err(|e| IngestError::Read {
                path: PathBuf::from(p),
                message: e.to_string(),
            })?
            .filter_map(Result::ok)
            .filter(|p| p.is_file())
            .collect();
        if matched.is_empty() {
            return Err(IngestError::NoMatch(p.clone()));
        }
        matched.sort();
        out.extend(matched);
    }
    Ok(out)
}

pub fn read_runs(paths: &[PathBuf]) -> Result<Vec<RunFile>, IngestError> {
    paths.iter().map(|p| RunFile::read(p)).collect()
}

/// One series per file for `sensor`, in path order.
pub fn load_runs(paths: &[PathBuf], sensor: &str) -> Result<Vec<TimeSeries>, IngestError> {
    read_runs(paths)?.iter().map(|r| r.series(sensor)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
        let p = dir.join(name);
        fs::write(&p, body).unwrap();
        p
    }

    #[test]
    fn loads_in_path_order() {
        let dir = tempfile::tempdir().unwrap();
        let paths: Vec<PathBuf> = ["b", "a", "c"]
            .iter()
            .enumerate()
            .map(|(i, n)| write(dir.path(), &format!("{n}.csv"), &format!("time,temp\n0,{i}\n1,5\n")))
            .collect();
        let runs = load_runs(&paths, "temp").unwrap();
        assert_eq!(runs.iter().map(|r| r.id.as_str()).collect::<Vec<_>>(), vec!["b", "a", "c"]);
        assert_eq!(runs[2].values, vec![2.0, 5.0]);
        assert_eq!(runs[0].sensor, "temp");
    }

    #[test]
    fn missing_column_names_file_and_column() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(dir.path(), "r.csv", "time,speed\n0,1\n");
        let err = load_runs(&[p], "temp").unwrap_err();
        assert!(matches!(&err, IngestError::MissingColumn { column, .. } if column == "temp"));
        assert!(err.to_string().contains("r.csv"));
    }

    #[test]
    fn parse_error_has_location() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(dir.path(), "r.csv", "time,temp\n0,1\n1,abc\n");
        match load_runs(&[p], "temp").unwrap_err() {
            IngestError::Parse { row, column, value, .. } => {
                assert_eq!((row, column.as_str(), value.as_str()), (3, "temp", "abc"));
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn empty_and_ragged_files() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(dir.path(), "e.csv", "time,temp\n");
        assert!(matches!(RunFile::read(&p), Err(IngestError::EmptyFile { .. })));
        let p = write(dir.path(), "g.csv", "time,temp\n0,1\n1\n");
        assert!(matches!(RunFile::read(&p), Err(IngestError::Read { .. })));
    }

    #[test]
    fn sensor_columns_skip_timestamps() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(dir.path(), "r.csv", "Time,speed,rpm\n0,1,2\n");
        assert_eq!(RunFile::read(&p).unwrap().sensor_columns(), vec!["speed", "rpm"]);
    }

    #[test]
    fn glob_expansion() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "r2.csv", "t,x\n0,1\n");
        write(dir.path(), "r1.csv", "t,x\n0,1\n");
        let pat = format!("{}/*.csv", dir.path().display());
        let got = expand_inputs(&[pat]).unwrap();
        assert!(got[0].ends_with("r1.csv") && got[1].ends_with("r2.csv"));
        assert!(matches!(expand_inputs(&[format!("{}/*.tsv", dir.path().display())]), Err(IngestError::NoMatch(_))));
    }
}
