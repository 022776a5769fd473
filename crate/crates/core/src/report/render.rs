use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use super::{OntologyReport, ReportError};

pub const CSV_HEADER: [&str; 6] = ["ontology", "describe", "define", "connection", "hierarchy", "average"];

/// Per-entity detail tables written by [`write_details`], as file suffixes.
pub const DETAIL_FILES: [&str; 3] = ["described", "defined", "connection"];

/// Rows shown per table in the HTML report; the detail CSVs are complete.
const HTML_ROW_LIMIT: usize = 10_000;

/// Pretty-printed JSON with a trailing newline. Field order follows the
/// report types, so output is stable.
pub fn render_json(report: &OntologyReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
    out.push('\n');
    out
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is UTF-8")
}

/// One row per report, in the order given.
pub fn render_csv<'a>(reports: impl IntoIterator<Item = &'a OntologyReport>) -> String {
    let mut w = csv_writer();
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in reports {
        let s = &r.scores;
        w.write_record([
            r.name().to_string(),
            format!("{:.2}", s.describe),
            format!("{:.2}", s.define.unwrap_or(0.0)),
            format!("{:.2}", s.connection),
            format!("{:.2}", s.hierarchy),
            format!("{:.2}", s.average),
        ])
        .expect("in-memory write");
    }
    finish_csv(w)
}

fn described_csv(report: &OntologyReport) -> String {
    let mut w = csv_writer();
    w.write_record(["entity_iri", "described", "witness"]).expect("in-memory write");
    for row in &report.describe.per_entity {
        w.write_record([
            row.entity.as_str(),
            if row.described { "1" } else { "0" },
            row.witness.as_deref().unwrap_or(""),
        ])
        .expect("in-memory write");
    }
    finish_csv(w)
}

fn defined_csv(report: &OntologyReport) -> String {
    let mut w = csv_writer();
    w.write_record(["entity_iri", "label", "has_definition", "relevance", "adequacy", "entity_score"])
        .expect("in-memory write");
    for row in &report.define.per_entity {
        w.write_record([
            row.entity.clone(),
            row.label.clone(),
            if row.definition.is_some() { "1" } else { "0" }.to_string(),
            format!("{:.6}", row.relevance),
            format!("{:.6}", row.adequacy),
            format!("{:.6}", row.entity_score),
        ])
        .expect("in-memory write");
    }
    finish_csv(w)
}

fn connection_csv(report: &OntologyReport) -> String {
    let mut w = csv_writer();
    w.write_record(["entity_iri", "distinct_predicates", "total_connections"])
        .expect("in-memory write");
    for row in &report.connection.per_entity {
        w.write_record([
            row.entity.clone(),
            row.distinct_predicates.to_string(),
            row.total_connections.to_string(),
        ])
        .expect("in-memory write");
    }
    finish_csv(w)
}

/// Writes `<name>.described.csv`, `<name>.defined.csv` and
/// `<name>.connection.csv` into `dir`, creating it if needed. The Define
/// table is omitted when that metric was skipped.
pub fn write_details(dir: &Path, report: &OntologyReport) -> Result<Vec<PathBuf>, ReportError> {
    fs::create_dir_all(dir).map_err(|source| ReportError::Output {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut written = Vec::new();
    for (suffix, body) in [
        ("described", Some(described_csv(report))),
        ("defined", (!report.define.skipped).then(|| defined_csv(report))),
        ("connection", Some(connection_csv(report))),
    ] {
        let Some(body) = body else { continue };
        let path = dir.join(format!("{}.{suffix}.csv", report.name()));
        fs::write(&path, body).map_err(|source| ReportError::Output {
            path: path.clone(),
            source,
        })?;
        written.push(path);
    }
    Ok(written)
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            c => out.push(c),
        }
    }
    out
}

const RING_RADIUS: f64 = 50.0;

/// Ring chart whose filled arc is `score / 10` of the circumference.
fn donut(title: &str, score: Option<f64>, color: &str) -> String {
    let circumference = 2.0 * std::f64::consts::PI * RING_RADIUS;
    let fraction = score.map_or(0.0, |s| (s / 10.0).clamp(0.0, 1.0));
    let arc = fraction * circumference;
    let shown = score.map_or_else(|| "skipped".to_string(), |s| format!("{s:.2}"));
    format!(
        r##"<figure class="metric">
<svg viewBox="0 0 120 120" width="140" height="140" role="img" aria-label="{title}: {shown} of 10">
<circle cx="60" cy="60" r="{RING_RADIUS}" fill="none" stroke="#e5e7eb" stroke-width="14"/>
<circle class="fill" cx="60" cy="60" r="{RING_RADIUS}" fill="none" stroke="{color}" stroke-width="14" stroke-dasharray="{arc:.3} {circumference:.3}" transform="rotate(-90 60 60)"/>
<text x="60" y="66" text-anchor="middle" font-size="20">{shown}</text>
</svg>
<figcaption>{title}</figcaption>
</figure>
"##
    )
}

fn table(out: &mut String, summary: &str, header: &[&str], rows: Vec<Vec<String>>) {
    let total = rows.len();
    let _ = writeln!(out, "<details>\n<summary>{} ({total} rows)</summary>", escape(summary));
    if total > HTML_ROW_LIMIT {
        let _ = writeln!(
            out,
            "<p>First {HTML_ROW_LIMIT} rows shown; write the detail CSVs for the full table.</p>"
        );
    }
    out.push_str("<table>\n<thead><tr>");
    for h in header {
        let _ = write!(out, "<th>{}</th>", escape(h));
    }
    out.push_str("</tr></thead>\n<tbody>\n");
    for row in rows.into_iter().take(HTML_ROW_LIMIT) {
        out.push_str("<tr>");
        for cell in row {
            let _ = write!(out, "<td>{}</td>", escape(&cell));
        }
        out.push_str("</tr>\n");
    }
    out.push_str("</tbody>\n</table>\n</details>\n");
}

const STYLE: &str = "body{font-family:system-ui,sans-serif;margin:2rem;color:#111827}
.metrics{display:flex;flex-wrap:wrap;gap:1.5rem}
.metric{margin:0;text-align:center}
table{border-collapse:collapse;font-size:.85rem}
td,th{border:1px solid #d1d5db;padding:.2rem .5rem;text-align:left}
summary{cursor:pointer;margin:.5rem 0}";

fn report_section(out: &mut String, report: &OntologyReport) {
    let s = &report.scores;
    let _ = write!(
        out,
        "<section>\n<h2>{}</h2>\n<p>{} triples, {} entities ({} classes, {} individuals), {} object properties.</p>\n",
        escape(report.name()),
        report.source.triple_count,
        report.catalog.entities,
        report.catalog.classes,
        report.catalog.individuals,
        report.catalog.object_properties,
    );
    out.push_str("<div class=\"metrics\">\n");
    out.push_str(&donut("Well-Described", Some(s.describe), "#2563eb"));
    out.push_str(&donut("Well-Defined", s.define, "#16a34a"));
    out.push_str(&donut("Connection", Some(s.connection), "#d97706"));
    out.push_str(&donut("Hierarchical Breadth", Some(s.hierarchy), "#9333ea"));
    out.push_str(&donut("Average", Some(s.average), "#111827"));
    out.push_str("</div>\n");

    let h = &report.hierarchy;
    let _ = writeln!(
        out,
        "<p>Hierarchy: max depth {}, mean breadth {:.2}, {} roots, {} edges.</p>",
        h.max_depth, h.mean_breadth, h.root_count, h.edge_count
    );

    table(
        out,
        "Well-Described per entity",
        &["entity", "described", "witness"],
        report
            .describe
            .per_entity
            .iter()
            .map(|r| {
                vec![
                    r.entity.clone(),
                    if r.described { "yes" } else { "no" }.to_string(),
                    r.witness.clone().unwrap_or_default(),
                ]
            })
            .collect(),
    );
    if !report.define.skipped {
        table(
            out,
            "Well-Defined per entity",
            &["entity", "label", "definition", "relevance", "adequacy", "score"],
            report
                .define
                .per_entity
                .iter()
                .map(|r| {
                    vec![
                        r.entity.clone(),
                        r.label.clone(),
                        r.definition.clone().unwrap_or_default(),
                        format!("{:.3}", r.relevance),
                        format!("{:.3}", r.adequacy),
                        format!("{:.3}", r.entity_score),
                    ]
                })
                .collect(),
        );
    }
    table(
        out,
        "Connection per entity",
        &["entity", "distinct predicates", "links"],
        report
            .connection
            .per_entity
            .iter()
            .map(|r| {
                vec![
                    r.entity.clone(),
                    r.distinct_predicates.to_string(),
                    r.total_connections.to_string(),
                ]
            })
            .collect(),
    );
    out.push_str("</section>\n");
}

fn comparison_table(out: &mut String, reports: &[&OntologyReport]) {
    out.push_str("<table class=\"ranking\">\n<thead><tr>");
    for h in CSV_HEADER {
        let _ = write!(out, "<th>{h}</th>");
    }
    out.push_str("</tr></thead>\n<tbody>\n");
    for r in reports {
        let s = &r.scores;
        let define = s.define.map_or_else(|| "skipped".to_string(), |d| format!("{d:.2}"));
        let _ = writeln!(
            out,
            "<tr><td>{}</td><td>{:.2}</td><td>{define}</td><td>{:.2}</td><td>{:.2}</td><td>{:.2}</td></tr>",
            escape(r.name()),
            s.describe,
            s.connection,
            s.hierarchy,
            s.average
        );
    }
    out.push_str("</tbody>\n</table>\n");
}

/// Self-contained HTML page: one ring chart per metric, the average, and
/// collapsed per-entity tables. No scripts or external resources.
pub fn render_html(report: &OntologyReport) -> String {
    render_html_many(&[report])
}

/// One page covering several reports, in the order given, headed by a
/// comparison table when there is more than one.
pub fn render_html_many(reports: &[&OntologyReport]) -> String {
    let title = match reports {
        [one] => escape(one.name()),
        _ => "comparison".to_string(),
    };
    let mut out = String::new();
    let _ = write!(
        out,
        "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>{title}: ontology scores</title>\n<style>\n{STYLE}\n</style>\n</head>\n<body>\n<h1>Ontology scores: {title}</h1>\n"
    );
    if reports.len() > 1 {
        comparison_table(&mut out, reports);
    }
    for r in reports {
        report_section(&mut out, r);
    }
    out.push_str("</body>\n</html>\n");
    out
}
