//! Stages F1 to F5: normalization, windowing, deviation filtering, level
//! merging and removal of consecutive symbolic duplicates.

use log::warn;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::params::PipelineParams;
use crate::reduce::reduce_and_merge_level;
use crate::sax::SaxAlphabet;
use crate::series::{deviation, generate_subsequences, znormalize, TimeSeries, ZSeries};

/// A window with its provenance and reduced form.
#[derive(Debug, Clone, PartialEq)]
pub struct Subsequence {
    /// Index of the source run in the matrix's `series` list.
    pub series: usize,
    pub start: usize,
    /// Length-d piecewise averages with their mean removed.
    pub reduced: Vec<f64>,
    /// The mean removed from the piecewise averages.
    pub level: f64,
}

/// The subsequences that survive preprocessing, in (series, start) order.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateMatrix {
    pub entries: Vec<Subsequence>,
    pub w: usize,
    pub d: usize,
    /// Run identifiers; `Subsequence::series` indexes into this list.
    pub series: Vec<String>,
}

impl CandidateMatrix {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn vectors(&self) -> Vec<&[f64]> {
        self.entries.iter().map(|e| e.reduced.as_slice()).collect()
    }

    pub fn run_id(&self, entry: usize) -> &str {
        &self.series[self.entries[entry].series]
    }
}

/// Reduced vectors of every window of every series, before any filtering.
///
/// Trivial-match removal needs the windows that lie between two cluster
/// members, including those dropped by F3 and F5.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsequenceMatrix {
    pub d: usize,
    windows: Vec<Vec<f64>>,
}

impl SubsequenceMatrix {
    pub fn new(d: usize, windows: Vec<Vec<f64>>) -> Self {
        assert!(windows.iter().all(|s| s.len() % d == 0));
        Self { d, windows }
    }

    /// Number of windows for `series`.
    pub fn count(&self, series: usize) -> usize {
        self.windows.get(series).map_or(0, |s| s.len() / self.d)
    }

    pub fn vector(&self, series: usize, start: usize) -> &[f64] {
        &self.windows[series][start * self.d..(start + 1) * self.d]
    }

    pub fn total(&self) -> usize {
        (0..self.windows.len()).map(|s| self.count(s)).sum()
    }
}

/// Keeps a window unless its word equals that of the previous kept window
/// of the same series. Input must be ordered by (series, start).
pub fn drop_consecutive_duplicates<T>(windows: Vec<(T, String)>, series_of: impl Fn(&T) -> usize) -> Vec<T> {
    let mut kept = Vec::with_capacity(windows.len());
    let mut last: Option<(usize, String)> = None;
    for (item, word) in windows {
        let series = series_of(&item);
        if let Some((s, w)) = &last {
            if *s == series && *w == word {
                continue;
            }
        }
        last = Some((series, word));
        kept.push(item);
    }
    kept
}

/// Why a series contributed no subsequences.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesWarning {
    pub series: String,
    pub error: Error,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PreprocessCounts {
    pub series_total: usize,
    pub series_used: usize,
    pub generated: usize,
    pub after_deviation_filter: usize,
    pub candidates: usize,
}

#[derive(Debug, Clone)]
pub struct Preprocessed {
    pub candidates: CandidateMatrix,
    pub full: SubsequenceMatrix,
    /// One entry per input series; `None` where the series was skipped.
    pub zseries: Vec<Option<ZSeries>>,
    pub warnings: Vec<SeriesWarning>,
    pub counts: PreprocessCounts,
}

impl Preprocessed {
    /// The z-normalized samples of a candidate's window.
    pub fn window(&self, entry: &Subsequence) -> &[f64] {
        let z = self.zseries[entry.series].as_ref().expect("candidate from a skipped series");
        &z.zvalues[entry.start..entry.start + self.candidates.w]
    }
}

struct SeriesOutput {
    z: Option<ZSeries>,
    full: Vec<f64>,
    generated: usize,
    filtered: usize,
    candidates: Vec<Subsequence>,
    warning: Option<SeriesWarning>,
}

fn preprocess_one(index: usize, series: &TimeSeries, params: &PipelineParams, sax: &SaxAlphabet) -> SeriesOutput {
    let skipped = |error: Error| SeriesOutput {
        z: None,
        full: Vec::new(),
        generated: 0,
        filtered: 0,
        candidates: Vec::new(),
        warning: Some(SeriesWarning {
            series: series.id.clone(),
            error,
        }),
    };
    let z = match znormalize(series) {
        Ok(z) => z,
        Err(e) => return skipped(e),
    };
    let windows = match generate_subsequences(&z, params.window) {
        Ok(w) => w,
        Err(e) => return skipped(e),
    };
    let d = params.paa_dim;
    let mut full = Vec::with_capacity(windows.len() * d);
    let mut survivors = Vec::new();
    for window in &windows {
        let (reduced, level) = reduce_and_merge_level(window.values, d);
        full.extend_from_slice(&reduced);
        if deviation(window.values) >= params.min_deviation {
            let word = sax.encode(&reduced);
            survivors.push((
                Subsequence {
                    series: index,
                    start: window.start,
                    reduced,
                    level,
                },
                word,
            ));
        }
    }
    let generated = windows.len();
    let filtered = survivors.len();
    let candidates = drop_consecutive_duplicates(survivors, |s: &Subsequence| s.series);
    SeriesOutput {
        z: Some(z),
        full,
        generated,
        filtered,
        candidates,
        warning: None,
    }
}

/// Runs F1 to F5 over every series. Series that are constant or shorter
/// than the window are skipped with a warning.
pub fn preprocess(series: &[TimeSeries], params: &PipelineParams) -> Result<Preprocessed> {
    params.validate()?;
    if series.is_empty() {
        return Err(Error::NoSeries);
    }
    let sax = SaxAlphabet::new(params.sax_alphabet);
    let outputs: Vec<SeriesOutput> = series
        .par_iter()
        .enumerate()
        .map(|(i, s)| preprocess_one(i, s, params, &sax))
        .collect();

    let mut counts = PreprocessCounts {
        series_total: series.len(),
        ..Default::default()
    };
    let mut entries = Vec::new();
    let mut full = Vec::with_capacity(outputs.len());
    let mut zseries = Vec::with_capacity(outputs.len());
    let mut warnings = Vec::new();
    for out in outputs {
        if let Some(w) = out.warning {
            warn!("skipping series `{}`: {}", w.series, w.error);
            warnings.push(w);
        } else {
            counts.series_used += 1;
        }
        counts.generated += out.generated;
        counts.after_deviation_filter += out.filtered;
        counts.candidates += out.candidates.len();
        entries.extend(out.candidates);
        full.push(out.full);
        zseries.push(out.z);
    }
    Ok(Preprocessed {
        candidates: CandidateMatrix {
            entries,
            w: params.window,
            d: params.paa_dim,
            series: series.iter().map(|s| s.id.clone()).collect(),
        },
        full: SubsequenceMatrix::new(params.paa_dim, full),
        zseries,
        warnings,
        counts,
    })
}
