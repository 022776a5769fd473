//! End-to-end evaluation of one ontology file and the reports built from
//! it.

mod render;

use std::cmp::Ordering;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use wiseowl_rdf::{parse_file, ParseError, Syntax};

use crate::connection::{score_connection, ConnectionResult};
use crate::defined::{score_defined, DefinedResult};
use crate::described::{score_described, DescribedResult};
use crate::embedding::{embedder_from_config, EmbedConfig, EmbedError, Embedder};
use crate::hierarchy::{score_hierarchy, HierarchyResult};
use crate::model::{CatalogSummary, EntityCatalog};

pub use render::{
    render_csv, render_html, render_html_many, render_json, write_details, CSV_HEADER, DETAIL_FILES,
};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("{}: cannot read input: {source}", path.display())]
    Input {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("parse stage failed for {}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("define stage failed for {}: {source}", path.display())]
    Embed { path: PathBuf, source: EmbedError },
    #[error("cannot write {}: {source}", path.display())]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl ReportError {
    /// Process exit status for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            ReportError::Input { .. } | ReportError::Parse { .. } => 2,
            ReportError::Embed { .. } => 3,
            ReportError::Usage(_) => 64,
            ReportError::Output { .. } => 1,
        }
    }
}

/// Everything one `score` invocation needs.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    /// `None` detects the syntax per file.
    pub syntax: Option<Syntax>,
    pub json: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    pub html: Option<PathBuf>,
    pub details: Option<PathBuf>,
    pub embed: EmbedConfig,
    pub strict_describe: bool,
    pub no_embed: bool,
    /// Include per-stage wall-clock timings in reports. Off by default so
    /// that repeated runs produce identical files.
    pub timings: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ReportError> {
        if self.inputs.is_empty() {
            return Err(ReportError::Usage("at least one input file is required".into()));
        }
        let outputs: Vec<&PathBuf> = [&self.json, &self.csv, &self.html, &self.details]
            .into_iter()
            .flatten()
            .collect();
        for (i, a) in outputs.iter().enumerate() {
            if outputs[i + 1..].contains(a) {
                return Err(ReportError::Usage(format!(
                    "output path {} is given more than once",
                    a.display()
                )));
            }
        }
        if !self.no_embed {
            self.embed
                .validate()
                .map_err(|e| ReportError::Usage(e.to_string()))?;
        }
        Ok(())
    }

    /// The embedder for the Define stage, or `None` under `no_embed`.
    pub fn embedder(&self) -> Result<Option<Box<dyn Embedder>>, ReportError> {
        if self.no_embed {
            return Ok(None);
        }
        embedder_from_config(&self.embed)
            .map(Some)
            .map_err(|e| ReportError::Usage(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SourceInfo {
    pub path: String,
    /// File stem, used as the row label in comparisons.
    pub name: String,
    pub size_bytes: u64,
    pub triple_count: usize,
}

/// The four scores and their average, rounded to two decimals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoreSummary {
    pub describe: f64,
    pub define: Option<f64>,
    pub connection: f64,
    pub hierarchy: f64,
    pub average: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub parse_ms: f64,
    pub catalog_ms: f64,
    pub describe_ms: f64,
    pub define_ms: f64,
    pub connection_ms: f64,
    pub hierarchy_ms: f64,
    pub total_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub syntax: String,
    pub embedder: String,
    pub strict_describe: bool,
    pub no_embed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OntologyReport {
    pub schema_version: String,
    pub source: SourceInfo,
    pub scores: ScoreSummary,
    pub catalog: CatalogSummary,
    pub describe: DescribedResult,
    pub define: DefinedResult,
    pub connection: ConnectionResult,
    pub hierarchy: HierarchyResult,
    /// Mean of the four scores, or of the other three when Define was
    /// skipped.
    pub average: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
    pub config: ConfigEcho,
}

pub fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

pub fn average_of(describe: f64, define: Option<f64>, connection: f64, hierarchy: f64) -> f64 {
    match define {
        Some(d) => (describe + d + connection + hierarchy) / 4.0,
        None => (describe + connection + hierarchy) / 3.0,
    }
}

impl OntologyReport {
    pub fn name(&self) -> &str {
        &self.source.name
    }

    /// Define score, or `None` when the metric was skipped.
    pub fn define_score(&self) -> Option<f64> {
        (!self.define.skipped).then_some(self.define.score)
    }

    /// Checks the relations between the stored fields.
    pub fn verify(&self) -> Result<(), String> {
        let expected = average_of(
            self.describe.score,
            self.define_score(),
            self.connection.score,
            f64::from(self.hierarchy.score),
        );
        if (expected - self.average).abs() > 1e-9 {
            return Err(format!("average {} != recomputed {expected}", self.average));
        }
        let rounded = average_of(
            self.scores.describe,
            self.scores.define,
            self.scores.connection,
            self.scores.hierarchy,
        );
        if (rounded - self.scores.average).abs() > 0.005 + 1e-9 {
            return Err(format!(
                "rounded average {} != recomputed {rounded}",
                self.scores.average
            ));
        }
        if self.schema_version != SCHEMA_VERSION {
            return Err(format!("unknown schema version {}", self.schema_version));
        }
        for s in [self.describe.score, self.define.score, self.connection.score, self.average] {
            if !(0.0..=10.0).contains(&s) {
                return Err(format!("score {s} out of range"));
            }
        }
        Ok(())
    }
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

/// Runs parse, extraction and all four metrics on one file.
pub fn evaluate(path: &Path, config: &RunConfig) -> Result<OntologyReport, ReportError> {
    let embedder = config.embedder()?;
    evaluate_with(path, config, embedder.as_deref())
}

/// [`evaluate`] with an explicit embedder; `None` skips Define.
pub fn evaluate_with(
    path: &Path,
    config: &RunConfig,
    embedder: Option<&dyn Embedder>,
) -> Result<OntologyReport, ReportError> {
    let total = Instant::now();
    let size_bytes = std::fs::metadata(path)
        .map_err(|source| ReportError::Input {
            path: path.to_path_buf(),
            source,
        })?
        .len();

    let t = Instant::now();
    let graph = parse_file(path, config.syntax).map_err(|source| match source {
        ParseError::Io(source) => ReportError::Input {
            path: path.to_path_buf(),
            source,
        },
        source => ReportError::Parse {
            path: path.to_path_buf(),
            source,
        },
    })?;
    let parse_ms = millis(t);

    let t = Instant::now();
    let catalog = EntityCatalog::extract(&graph);
    let catalog_ms = millis(t);

    let (define_part, structural) = rayon::join(
        || {
            let t = Instant::now();
            let r = match embedder {
                Some(e) => score_defined(&graph, &catalog, e),
                None => Ok(DefinedResult::skipped(catalog.entities.len())),
            };
            (r, millis(t))
        },
        || {
            let ((describe, describe_ms), ((connection, connection_ms), (hierarchy, hierarchy_ms))) =
                rayon::join(
                    || {
                        let t = Instant::now();
                        (score_described(&graph, &catalog, config.strict_describe), millis(t))
                    },
                    || {
                        rayon::join(
                            || {
                                let t = Instant::now();
                                (score_connection(&graph, &catalog), millis(t))
                            },
                            || {
                                let t = Instant::now();
                                (score_hierarchy(&graph, &catalog), millis(t))
                            },
                        )
                    },
                );
            (describe, describe_ms, connection, connection_ms, hierarchy, hierarchy_ms)
        },
    );
    let (define, define_ms) = define_part;
    let define = define.map_err(|source| ReportError::Embed {
        path: path.to_path_buf(),
        source,
    })?;
    let (describe, describe_ms, connection, connection_ms, hierarchy, hierarchy_ms) = structural;

    let define_score = (!define.skipped).then_some(define.score);
    let hier = f64::from(hierarchy.score);
    let average = average_of(describe.score, define_score, connection.score, hier);
    let scores = ScoreSummary {
        describe: round2(describe.score),
        define: define_score.map(round2),
        connection: round2(connection.score),
        hierarchy: round2(hier),
        average: round2(average),
    };
    let timings = config.timings.then(|| Timings {
        parse_ms,
        catalog_ms,
        describe_ms,
        define_ms,
        connection_ms,
        hierarchy_ms,
        total_ms: millis(total),
    });

    Ok(OntologyReport {
        schema_version: SCHEMA_VERSION.to_string(),
        source: SourceInfo {
            path: path.display().to_string(),
            name: path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string()),
            size_bytes,
            triple_count: graph.len(),
        },
        scores,
        catalog: catalog.summary(),
        describe,
        define,
        connection,
        hierarchy,
        average,
        timings,
        config: ConfigEcho {
            syntax: config.syntax.map_or_else(|| "auto".to_string(), |s| s.to_string()),
            embedder: embedder.map_or_else(|| "none".to_string(), |e| e.describe()),
            strict_describe: config.strict_describe,
            no_embed: embedder.is_none(),
        },
    })
}

fn ranking_order(a: &OntologyReport, b: &OntologyReport) -> Ordering {
    b.average
        .total_cmp(&a.average)
        .then_with(|| b.describe.score.total_cmp(&a.describe.score))
        .then_with(|| a.name().cmp(b.name()))
}

/// Reports ranked by average (descending), then Describe score, then name.
pub fn compare(reports: &[OntologyReport]) -> Result<Vec<&OntologyReport>, ReportError> {
    if reports.len() < 2 {
        return Err(ReportError::Usage(
            "a comparison needs at least two reports".into(),
        ));
    }
    let mut ranked: Vec<&OntologyReport> = reports.iter().collect();
    ranked.sort_by(|a, b| ranking_order(a, b));
    Ok(ranked)
}
