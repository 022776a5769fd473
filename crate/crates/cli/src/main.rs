//! `wiseowl`: score ontologies from the command line.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wiseowl_core::embedding::{ENV_EMBED_TOKEN, ENV_EMBED_URL};
use wiseowl_core::report::{
    compare, evaluate_with, render_csv, render_html_many, render_json, write_details,
};
use wiseowl_core::{EmbedConfig, OntologyReport, Provider, ReportError, RunConfig, Syntax};

const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "wiseowl", version, about = "Ontology quality scores on a 0-10 scale")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score one or more ontology files and rank them.
    Score(ScoreArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SyntaxArg {
    Auto,
    Turtle,
    Ntriples,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmbedderArg {
    Local,
    Remote,
}

#[derive(Args)]
struct ScoreArgs {
    /// Ontology files (Turtle or N-Triples).
    #[arg(required = true, value_name = "FILE")]
    files: Vec<PathBuf>,

    #[arg(long, value_enum, default_value = "auto")]
    syntax: SyntaxArg,

    /// Write the JSON report here (an array when scoring several files).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Write the score table as CSV, ranked when scoring several files.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,

    /// Write a self-contained HTML report.
    #[arg(long, value_name = "PATH")]
    html: Option<PathBuf>,

    /// Write per-entity detail CSVs into this directory.
    #[arg(long, value_name = "DIR")]
    details: Option<PathBuf>,

    /// Embedding provider for Well-Defined. Defaults to remote when an
    /// endpoint is configured, otherwise local.
    #[arg(long, value_enum)]
    embedder: Option<EmbedderArg>,

    /// Remote embedding endpoint.
    #[arg(long, value_name = "URL", env = ENV_EMBED_URL)]
    embed_url: Option<String>,

    /// Texts per remote request.
    #[arg(long, value_name = "N", default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    embed_batch: u32,

    /// Tokens kept per text before embedding.
    #[arg(long, value_name = "N", default_value_t = 128, value_parser = clap::value_parser!(u32).range(8..))]
    embed_max_tokens: u32,

    /// Skip Well-Defined; the average covers the other three scores.
    #[arg(long)]
    no_embed: bool,

    /// Count plain annotations only when their value is a literal.
    #[arg(long)]
    strict_describe: bool,

    /// Include per-stage timings in the JSON report.
    #[arg(long)]
    timings: bool,
}

impl ScoreArgs {
    fn into_config(self) -> RunConfig {
        let provider = match (self.embedder, &self.embed_url) {
            (Some(EmbedderArg::Local), _) | (None, None) => Provider::Local,
            (Some(EmbedderArg::Remote), _) | (None, Some(_)) => Provider::Remote,
        };
        let embed = EmbedConfig {
            provider,
            endpoint: match provider {
                Provider::Remote => self.embed_url,
                Provider::Local => None,
            },
            batch_size: self.embed_batch as usize,
            max_tokens: self.embed_max_tokens as usize,
            auth_token: std::env::var(ENV_EMBED_TOKEN).ok().filter(|t| !t.is_empty()),
            ..EmbedConfig::default()
        };
        RunConfig {
            inputs: self.files,
            syntax: match self.syntax {
                SyntaxArg::Auto => None,
                SyntaxArg::Turtle => Some(Syntax::Turtle),
                SyntaxArg::Ntriples => Some(Syntax::NTriples),
            },
            json: self.json,
            csv: self.csv,
            html: self.html,
            details: self.details,
            embed,
            strict_describe: self.strict_describe,
            no_embed: self.no_embed,
            timings: self.timings,
        }
    }
}

fn write_output(path: &Path, body: &str) -> Result<(), ReportError> {
    fs::write(path, body).map_err(|source| ReportError::Output {
        path: path.to_path_buf(),
        source,
    })
}

fn summary_table(reports: &[&OntologyReport]) -> String {
    let width = reports
        .iter()
        .map(|r| r.name().chars().count())
        .max()
        .unwrap_or(0)
        .max("ontology".len());
    let mut out = format!(
        "{:<width$}  {:>8}  {:>8}  {:>10}  {:>9}  {:>7}\n",
        "ontology", "describe", "define", "connection", "hierarchy", "average"
    );
    for r in reports {
        let s = &r.scores;
        let define = s.define.map_or_else(|| "skipped".to_string(), |d| format!("{d:.2}"));
        out.push_str(&format!(
            "{:<width$}  {:>8.2}  {:>8}  {:>10.2}  {:>9.2}  {:>7.2}\n",
            r.name(),
            s.describe,
            define,
            s.connection,
            s.hierarchy,
            s.average
        ));
    }
    out
}

fn run(config: RunConfig) -> Result<(), ReportError> {
    config.validate()?;
    let embedder = config.embedder()?;
    let embedder = embedder.as_deref();

    let results: Vec<Result<OntologyReport, ReportError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = config
            .inputs
            .iter()
            .map(|path| {
                let config = &config;
                scope.spawn(move || evaluate_with(path, config, embedder))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("evaluation thread panicked"))
            .collect()
    });
    let mut reports = Vec::with_capacity(results.len());
    let mut first_error = None;
    for r in results {
        match r {
            Ok(report) => reports.push(report),
            Err(e) => {
                eprintln!("wiseowl: {e}");
                first_error.get_or_insert(e);
            }
        }
    }
    if let Some(e) = first_error {
        return Err(e);
    }

    let ordered: Vec<&OntologyReport> = if reports.len() >= 2 {
        compare(&reports)?
    } else {
        reports.iter().collect()
    };

    if let Some(path) = &config.json {
        let body = match ordered.as_slice() {
            [one] => render_json(one),
            many => {
                let mut s = serde_json::to_string_pretty(many).expect("reports serialize");
                s.push('\n');
                s
            }
        };
        write_output(path, &body)?;
    }
    if let Some(path) = &config.csv {
        write_output(path, &render_csv(ordered.iter().copied()))?;
    }
    if let Some(path) = &config.html {
        write_output(path, &render_html_many(&ordered))?;
    }
    if let Some(dir) = &config.details {
        for r in &ordered {
            write_details(dir, r)?;
        }
    }

    let mut stdout = io::stdout().lock();
    stdout
        .write_all(summary_table(&ordered).as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|source| ReportError::Output {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let Command::Score(args) = cli.command;
    match run(args.into_config()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if matches!(e, ReportError::Usage(_) | ReportError::Output { .. }) {
                eprintln!("wiseowl: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
