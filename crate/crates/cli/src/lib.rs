//! Command-line driver for coinmotif: CSV ingestion, per-sensor
//! orchestration, catalog files, SVG plots and the scaling benchmark.

pub mod bench;
pub mod catalog_io;
pub mod error;
pub mod ingest;
pub mod plot;
pub mod run;

pub use error::CliError;
