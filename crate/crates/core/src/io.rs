//! Text formats: the hypergraph interchange document (TOML), the solver
//! record (TOML), and the bound and scan tables (CSV).
//!
//! Every writer takes a list of header lines that are emitted as `#`
//! comments before the body. Floats are printed with 15 significant digits
//! so that repeated runs give identical bytes.

use serde::Deserialize;
use toml::Spanned;

use crate::error::{Error, Result};
use crate::hypercore::UniformHypergraph;
use crate::spectral::PerronResult;
use crate::verify::{BoundReport, ScanReport};

const SIG_DIGITS: usize = 15;

/// Formats `x` with 15 significant digits. Moderate magnitudes use fixed
/// notation, the rest scientific; the output always parses as a TOML float.
pub fn fmt_sig(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return format!("{:.*}", SIG_DIGITS - 1, 0.0);
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..].parse().expect("integer exponent");
    if (-5..=13).contains(&exp) {
        format!("{:.*}", (SIG_DIGITS as i32 - 1 - exp) as usize, x)
    } else {
        sci
    }
}

fn comment_block(out: &mut String, header: &[String]) {
    for line in header {
        for part in line.lines() {
            out.push_str("# ");
            out.push_str(part);
            out.push('\n');
        }
    }
}

fn join_ints(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

/// Canonical interchange document for `h`.
pub fn write_hypergraph(h: &UniformHypergraph, header: &[String]) -> String {
    let mut out = String::new();
    comment_block(&mut out, header);
    out.push_str(&format!("n = {}\nr = {}\n", h.n(), h.r()));
    if h.edge_count() == 0 {
        out.push_str("edges = []\n");
        return out;
    }
    out.push_str("edges = [\n");
    for e in h.edges() {
        out.push_str(&format!("  [{}],\n", join_ints(e)));
    }
    out.push_str("]\n");
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphDoc {
    n: Spanned<i64>,
    r: Spanned<i64>,
    edges: Spanned<Vec<Spanned<Vec<i64>>>>,
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// The key of the nearest `key = ...` line at or above `line`.
fn key_near(text: &str, line: usize) -> String {
    text.lines()
        .take(line)
        .collect::<Vec<_>>()
        .iter()
        .rev()
        .find_map(|l| {
            let l = l.trim_start();
            if l.starts_with('#') {
                return None;
            }
            l.split_once('=').map(|(k, _)| k.trim().to_string())
        })
        .unwrap_or_else(|| "document".into())
}

fn parse_err(line: usize, field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        field: field.into(),
        message: message.into(),
    }
}

fn nonnegative(text: &str, value: &Spanned<i64>, field: &str) -> Result<usize> {
    usize::try_from(*value.get_ref()).map_err(|_| {
        parse_err(
            line_of(text, value.span().start),
            field,
            format!("expected a nonnegative integer, got {}", value.get_ref()),
        )
    })
}

/// Parses an interchange document. Errors name the offending line and
/// field, with `edges[i]` for the `i`-th edge.
pub fn read_hypergraph(text: &str) -> Result<UniformHypergraph> {
    let doc: HypergraphDoc = toml::from_str(text).map_err(|e| {
        let line = e.span().map_or(1, |s| line_of(text, s.start));
        let message = e.message().to_string();
        let field = message
            .split('`')
            .nth(1)
            .filter(|_| message.starts_with("missing field") || message.starts_with("unknown field"))
            .map_or_else(|| key_near(text, line), str::to_string);
        parse_err(line, field, message)
    })?;
    let n = nonnegative(text, &doc.n, "n")?;
    let r = nonnegative(text, &doc.r, "r")?;
    if r < 2 {
        return Err(parse_err(line_of(text, doc.r.span().start), "r", format!("uniformity must be at least 2, got {r}")));
    }
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(doc.edges.get_ref().len());
    let mut seen = std::collections::HashMap::new();
    for (i, edge) in doc.edges.get_ref().iter().enumerate() {
        let line = line_of(text, edge.span().start);
        let field = format!("edges[{i}]");
        let raw = edge.get_ref();
        if raw.len() != r {
            return Err(parse_err(line, field, format!("expected {r} vertices, got {}", raw.len())));
        }
        let mut e = Vec::with_capacity(r);
        for &v in raw {
            match usize::try_from(v) {
                Ok(v) if v < n => e.push(v),
                _ => return Err(parse_err(line, field, format!("vertex {v} is outside 0..{n}"))),
            }
        }
        e.sort_unstable();
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_err(line, field, "repeated vertex"));
        }
        if let Some(j) = seen.insert(e.clone(), i) {
            return Err(parse_err(line, field, format!("duplicate of edges[{j}]")));
        }
        edges.push(e);
    }
    UniformHypergraph::new(n, r, edges)
}

/// Solver record: lambda, its certificate and the Perron vector.
pub fn write_perron(res: &PerronResult, header: &[String]) -> String {
    let mut out = String::new();
    comment_block(&mut out, header);
    let vector = res.vector.iter().map(|&v| fmt_sig(v)).collect::<Vec<_>>().join(", ");
    out.push_str(&format!("lambda = {}\n", fmt_sig(res.lambda)));
    out.push_str(&format!(
        "bracket = [{}, {}]\n",
        fmt_sig(res.bracket_low),
        fmt_sig(res.bracket_high)
    ));
    out.push_str(&format!("residual = {}\n", fmt_sig(res.residual)));
    out.push_str(&format!("iterations = {}\n", res.iterations));
    out.push_str(&format!("r = {}\n", res.r));
    out.push_str(&format!("normalization = \"{}\"\n", res.normalization.as_str()));
    out.push_str(&format!("degenerate = {}\n", res.degenerate));
    out.push_str(&format!("component = [{}]\n", join_ints(&res.component)));
    out.push_str(&format!("vector = [{vector}]\n"));
    out
}

fn csv_body<F>(columns: &[&str], fill: F) -> String
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(columns).expect("write to memory");
    fill(&mut w).expect("write to memory");
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 output")
}

/// Bound table: `n, lambda_fan, bound, ratio, ok`.
pub fn write_bound_csv(rows: &[BoundReport], header: &[String]) -> String {
    let mut out = String::new();
    comment_block(&mut out, header);
    out.push_str(&csv_body(&["n", "lambda_fan", "bound", "ratio", "ok"], |w| {
        for r in rows {
            w.write_record([
                r.n.to_string(),
                fmt_sig(r.lambda_fan),
                fmt_sig(r.bound),
                fmt_sig(r.ratio_to_cbrt4n),
                r.ok.to_string(),
            ])?;
        }
        Ok(())
    }));
    out
}

fn rank_list(ranks: &[usize]) -> String {
    if ranks.is_empty() {
        "none".into()
    } else {
        ranks.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    }
}

/// Scan table, one row per triangulation in rank order, followed by
/// summary comments.
pub fn write_scan_csv(report: &ScanReport, header: &[String]) -> String {
    let mut out = String::new();
    comment_block(&mut out, header);
    out.push_str(&csv_body(
        &["rank", "triangulation", "lambda", "gap_to_fan", "residual", "iterations", "is_fan"],
        |w| {
            for r in &report.records {
                w.write_record([
                    r.rank.to_string(),
                    r.triangulation.to_string(),
                    fmt_sig(r.lambda),
                    fmt_sig(r.gap_to_fan),
                    fmt_sig(r.residual),
                    r.iterations.to_string(),
                    r.is_fan.to_string(),
                ])?;
            }
            Ok(())
        },
    ));
    let mixed: Vec<String> = report.mixed_ties.iter().map(|c| rank_list(c)).collect();
    let summary = [
        format!("n={} dedupe={} rows={} raw_count={} classes={}", report.n, report.dedupe, report.records.len(), report.raw_count, report.class_count),
        format!("lambda_fan={}", fmt_sig(report.lambda_fan)),
        format!("top_is_fan={}", report.top_is_fan),
        format!(
            "top_gap={} exceeds_threshold={}",
            report.top_gap.map_or_else(|| "none".into(), fmt_sig),
            report.top_gap_exceeds_threshold
        ),
        format!("mixed_ties={}", if mixed.is_empty() { "none".into() } else { mixed.join("; ") }),
        format!("violations={}", rank_list(&report.violations)),
        format!("failures={}", rank_list(&report.failures)),
    ];
    comment_block(&mut out, &summary);
    for r in report.records.iter().filter(|r| r.error.is_some()) {
        out.push_str(&format!("# error rank={} {}\n", r.rank, r.error.as_deref().unwrap_or("")));
    }
    out
}
