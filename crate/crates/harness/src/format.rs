//! Line-oriented graph files and their JSON mirror.
//!
//! ```text
//! sg 1
//! # comment
//! n 3
//! l 2 inf
//! e 0 1 +
//! e 1 2 -
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use sghom::{Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: sghom::Error },
    #[error("json: {0}")]
    Json(String),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Parses the text format. Vertices without an `l` line are labelled by their id
/// when any label is given.
pub fn parse_graph(text: &str) -> Result<SignedGraph, FormatError> {
    let mut header = false;
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut parts = content.split_whitespace();
        let tag = parts.next().unwrap();
        if !header {
            if tag != "sg" || parts.next() != Some("1") || parts.next().is_some() {
                return Err(syntax(line, "expected header `sg 1`"));
            }
            header = true;
            continue;
        }
        let num = |s: Option<&str>, what: &str| -> Result<usize, FormatError> {
            s.ok_or_else(|| syntax(line, format!("missing {what}")))?
                .parse()
                .map_err(|_| syntax(line, format!("invalid {what}")))
        };
        match tag {
            "n" => {
                if order.is_some() {
                    return Err(syntax(line, "order given twice"));
                }
                order = Some(num(parts.next(), "order")?);
                if parts.next().is_some() {
                    return Err(syntax(line, "trailing tokens"));
                }
            }
            "e" => {
                let n = order.ok_or_else(|| syntax(line, "edge before `n`"))?;
                let u = num(parts.next(), "vertex")?;
                let v = num(parts.next(), "vertex")?;
                let s = parts
                    .next()
                    .filter(|t| t.len() == 1)
                    .and_then(|t| Sign::from_symbol(t.chars().next().unwrap()))
                    .ok_or_else(|| syntax(line, "expected sign `+` or `-`"))?;
                if parts.next().is_some() {
                    return Err(syntax(line, "trailing tokens"));
                }
                for w in [u, v] {
                    if w >= n {
                        return Err(FormatError::Graph { line, source: sghom::Error::VertexOutOfRange { vertex: w, order: n } });
                    }
                }
                edges.push((u, v, s));
                edge_lines.push(line);
            }
            "l" => {
                let n = order.ok_or_else(|| syntax(line, "label before `n`"))?;
                let v = num(parts.next(), "vertex")?;
                if v >= n {
                    return Err(FormatError::Graph { line, source: sghom::Error::VertexOutOfRange { vertex: v, order: n } });
                }
                let rest: Vec<&str> = parts.collect();
                if rest.len() != 1 {
                    return Err(syntax(line, "label must be one token"));
                }
                labels.push((line, v, rest[0].to_string()));
            }
            _ => return Err(syntax(line, format!("unknown record `{tag}`"))),
        }
    }
    if !header {
        return Err(syntax(last.max(1), "missing header `sg 1`"));
    }
    let n = order.ok_or_else(|| syntax(last.max(1), "missing `n` line"))?;
    // report simplicity violations at the offending line
    let mut seen = std::collections::HashSet::new();
    for (&(u, v, _), &line) in edges.iter().zip(&edge_lines) {
        if u == v {
            return Err(FormatError::Graph { line, source: sghom::Error::Loop(u) });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(FormatError::Graph { line, source: sghom::Error::DuplicateEdge(u.min(v), u.max(v)) });
        }
    }
    let g = SignedGraph::new(n, &edges).map_err(|e| FormatError::Graph { line: last, source: e })?;
    if labels.is_empty() {
        return Ok(g);
    }
    let mut names: Vec<Option<String>> = vec![None; n];
    for (line, v, l) in &labels {
        if names[*v].replace(l.clone()).is_some() {
            return Err(syntax(*line, format!("vertex {v} labelled twice")));
        }
    }
    let names = names.into_iter().enumerate().map(|(v, l)| l.unwrap_or_else(|| v.to_string())).collect();
    g.with_labels(names).map_err(|e| FormatError::Graph { line: labels.last().unwrap().0, source: e })
}

/// Serialises in the text format; edges in lexicographic order.
pub fn serialize_graph(g: &SignedGraph) -> String {
    let mut out = format!("sg 1\nn {}\n", g.order());
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            out.push_str(&format!("l {v} {l}\n"));
        }
    }
    for (u, v, s) in g.edges() {
        out.push_str(&format!("e {u} {v} {}\n", s.symbol()));
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    format: String,
    version: u32,
    order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    edges: Vec<(usize, usize, String)>,
}

pub fn graph_to_json(g: &SignedGraph) -> String {
    let j = JsonGraph {
        format: "sg".into(),
        version: 1,
        order: g.order(),
        labels: g.labels().map(|l| l.to_vec()),
        edges: g.edges().into_iter().map(|(u, v, s)| (u, v, s.symbol().to_string())).collect(),
    };
    serde_json::to_string_pretty(&j).expect("serialisable")
}

pub fn graph_from_json(text: &str) -> Result<SignedGraph, FormatError> {
    let j: JsonGraph = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    if j.format != "sg" || j.version != 1 {
        return Err(FormatError::Json(format!("unsupported format {} {}", j.format, j.version)));
    }
    let mut edges = Vec::new();
    for (u, v, s) in j.edges {
        let sign = match s.as_str() {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            other => return Err(FormatError::Json(format!("bad sign {other:?}"))),
        };
        edges.push((u, v, sign));
    }
    let g = SignedGraph::new(j.order, &edges).map_err(|e| FormatError::Json(e.to_string()))?;
    match j.labels {
        Some(l) => g.with_labels(l).map_err(|e| FormatError::Json(e.to_string())),
        None => Ok(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sghom::gen::{build_tower, paley, paley_plus};

    #[test]
    fn positive_k2() {
        let g = parse_graph("sg 1\nn 2\ne 0 1 +\n").unwrap();
        assert_eq!(g, SignedGraph::new(2, &[(0, 1, Sign::Positive)]).unwrap());
    }

    #[test]
    fn round_trips() {
        for g in [paley(5).unwrap(), paley_plus(9).unwrap(), build_tower(3).unwrap(), SignedGraph::empty(0)] {
            assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
            assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("sg 1\nn 2\ne 0 0 +\n"),
            Err(FormatError::Graph { line: 3, source: sghom::Error::Loop(0) })
        );
        assert!(matches!(parse_graph("sg 1\n# c\nn 2\ne 0 1 *\n"), Err(FormatError::Syntax { line: 4, .. })));
        assert!(matches!(parse_graph("n 2\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("sg 1\ne 0 1 +\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(
            parse_graph("sg 1\nn 3\ne 0 1 +\ne 1 0 -\n"),
            Err(FormatError::Graph { line: 4, source: sghom::Error::DuplicateEdge(0, 1) })
        ));
        assert!(matches!(parse_graph("sg 1\nn 2\ne 0 5 +\n"), Err(FormatError::Graph { line: 3, .. })));
        assert!(matches!(parse_graph("sg 1\nn 2\nl 0 a\nl 1 a\n"), Err(FormatError::Graph { .. })));
    }

    #[test]
    fn partial_labels_default_to_ids() {
        let g = parse_graph("sg 1\nn 3\nl 2 inf\n").unwrap();
        assert_eq!(g.label(0), "0");
        assert_eq!(g.label(2), "inf");
    }
}
