//! Graph serialization: edge list (read/write), DOT and JSON (write; JSON
//! also reads).

use std::fmt::Write as _;

use serde_json::json;
use symdig::{Digraph, Labels};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Edgelist,
    Dot,
    Json,
}

/// ```text
/// # vertices N directed true|false
/// # label i <label>
/// u v
/// ```
/// Arcs are 0-based and sorted lexicographically.
pub fn to_edgelist(g: &Digraph) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "# vertices {} directed {}",
        g.vertex_count(),
        !g.is_undirected()
    );
    if let Some(labels) = g.labels() {
        for v in 0..g.vertex_count() {
            let _ = writeln!(s, "# label {v} {}", labels.render(v));
        }
    }
    for (u, v) in g.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn to_dot(g: &Digraph) -> String {
    let undirected = g.is_undirected();
    let (kind, edge) = if undirected { ("graph", "--") } else { ("digraph", "->") };
    let mut s = format!("{kind} G {{\n");
    for v in 0..g.vertex_count() {
        match g.labels() {
            Some(l) => {
                let _ = writeln!(s, "  {v} [label=\"{}\"];", l.render(v));
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for (u, v) in g.arcs() {
        if undirected && u > v {
            continue;
        }
        let _ = writeln!(s, "  {u} {edge} {v};");
    }
    s.push_str("}\n");
    s
}

pub fn to_json(g: &Digraph) -> String {
    let labels: Option<Vec<String>> = g
        .labels()
        .map(|l| (0..g.vertex_count()).map(|v| l.render(v)).collect());
    let arcs: Vec<[usize; 2]> = g.arcs().map(|(u, v)| [u, v]).collect();
    let doc = json!({
        "vertices": g.vertex_count(),
        "directed": !g.is_undirected(),
        "labels": labels,
        "arcs": arcs,
    });
    serde_json::to_string_pretty(&doc).expect("graph serializes") + "\n"
}

pub fn render(g: &Digraph, format: Format) -> String {
    match format {
        Format::Edgelist => to_edgelist(g),
        Format::Dot => to_dot(g),
        Format::Json => to_json(g),
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_edgelist(text: &str) -> Result<Digraph, CliError> {
    let mut vertices: Option<usize> = None;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut arcs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let words: Vec<&str> = rest.split_whitespace().collect();
            match words.as_slice() {
                ["vertices", n, "directed", flag] => {
                    let n: usize = n.parse().map_err(|_| parse_err(lineno, "bad vertex count"))?;
                    if !matches!(*flag, "true" | "false") {
                        return Err(parse_err(lineno, "directed flag must be true or false"));
                    }
                    vertices = Some(n);
                    labels = vec![None; n];
                }
                ["label", idx, label] => {
                    let n = vertices.ok_or_else(|| parse_err(lineno, "label before header"))?;
                    let idx: usize = idx.parse().map_err(|_| parse_err(lineno, "bad label index"))?;
                    if idx >= n {
                        return Err(parse_err(lineno, "label index out of range"));
                    }
                    labels[idx] = Some(label.to_string());
                }
                _ => {}
            }
            continue;
        }
        let n = vertices.ok_or_else(|| parse_err(lineno, "arc before `# vertices` header"))?;
        let mut it = line.split_whitespace();
        let mut next = || -> Result<usize, CliError> {
            let v: usize = it
                .next()
                .and_then(|w| w.parse().ok())
                .ok_or_else(|| parse_err(lineno, "expected `u v`"))?;
            if v >= n {
                return Err(parse_err(lineno, format!("vertex {v} out of range")));
            }
            Ok(v)
        };
        let (u, v) = (next()?, next()?);
        arcs.push((u, v));
    }
    let n = vertices.ok_or_else(|| parse_err(0, "missing `# vertices N directed B` header"))?;
    let g = Digraph::from_arcs(n, arcs)?;
    if labels.iter().all(Option::is_none) {
        return Ok(g);
    }
    let rendered: Vec<String> = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| parse_err(0, format!("vertex {i} has no label"))))
        .collect::<Result<_, _>>()?;
    Ok(g.with_labels(Labels::parse(&rendered))?)
}

pub fn parse_json(text: &str) -> Result<Digraph, CliError> {
    #[derive(serde::Deserialize)]
    struct Doc {
        vertices: usize,
        labels: Option<Vec<String>>,
        arcs: Vec<[usize; 2]>,
    }
    let doc: Doc = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    for &[u, v] in &doc.arcs {
        if u >= doc.vertices || v >= doc.vertices {
            return Err(parse_err(0, "arc endpoint out of range"));
        }
    }
    let g = Digraph::from_arcs(doc.vertices, doc.arcs.iter().map(|&[u, v]| (u, v)))?;
    match doc.labels {
        Some(l) => Ok(g.with_labels(Labels::parse(&l))?),
        None => Ok(g),
    }
}

/// Reads either format, choosing JSON when the text starts with `{`.
pub fn parse_graph(text: &str) -> Result<Digraph, CliError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edgelist(text)
    }
}
