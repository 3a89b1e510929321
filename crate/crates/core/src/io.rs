//! Plain-text edge list format (`.ecg`).
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v c      (exactly m lines, 0-based ids, u != v)
//! ```
//!
//! Blank lines are ignored. Writing is canonical: edges sorted by `(u, v)`
//! with `u < v`, so `write(parse(write(g))) == write(g)`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoredGraph, Vertex};

/// A parsed file: the graph plus its comment lines (without the `#`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EcgDocument {
    pub graph: EdgeColoredGraph,
    pub comments: Vec<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn fields<const N: usize>(line_no: usize, text: &str, what: &str) -> Result<[u64; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != N {
        return Err(parse_err(line_no, format!("expected {what}, found `{text}`")));
    }
    let mut out = [0u64; N];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|_| parse_err(line_no, format!("`{p}` is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn parse_ecg_document(text: &str) -> Result<EcgDocument> {
    let mut comments = Vec::new();
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex, Color)> = Vec::new();
    let mut first_seen: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.trim().to_string());
            continue;
        }
        if line.is_empty() {
            continue;
        }
        match header {
            None => {
                let [n, m] = fields::<2>(line_no, line, "header `n m`")?;
                header = Some((n as usize, m as usize));
            }
            Some((n, m)) => {
                let [u, v, c] = fields::<3>(line_no, line, "edge `u v c`")?;
                let (u, v) = (u as usize, v as usize);
                if edges.len() == m {
                    return Err(parse_err(line_no, format!("more than the declared {m} edges")));
                }
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
                }
                if u >= n || v >= n {
                    return Err(parse_err(line_no, format!("vertex {} out of range for n = {n}", u.max(v))));
                }
                let key = (u.min(v), u.max(v));
                if let Some(prev) = first_seen.insert(key, line_no) {
                    return Err(parse_err(
                        line_no,
                        format!("duplicate edge {{{}, {}}} (first on line {prev})", key.0, key.1),
                    ));
                }
                edges.push((u, v, c));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_err(last_line.max(1), "missing header `n m`"));
    };
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Ok(EcgDocument {
        graph: EdgeColoredGraph::new(n, edges)?,
        comments,
    })
}

pub fn parse_ecg(text: &str) -> Result<EdgeColoredGraph> {
    parse_ecg_document(text).map(|d| d.graph)
}

pub fn write_ecg(g: &EdgeColoredGraph) -> String {
    write_ecg_with_comments(g, &[])
}

pub fn write_ecg_with_comments(g: &EdgeColoredGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.color);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn parses_triangle() {
        let g = parse_ecg("3 3\n0 1 0\n1 2 1\n0 2 2").unwrap();
        assert!(g.is_rainbow());
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn reports_line_numbers() {
        match parse_ecg("2 1\n0 0 1") {
            Err(Error::Parse { line: 2, message }) => assert!(message.contains("self-loop")),
            other => panic!("unexpected {other:?}"),
        }
        match parse_ecg("3 2\n0 1 0") {
            Err(Error::Parse { message, .. }) => assert!(message.contains("declares 2")),
            other => panic!("unexpected {other:?}"),
        }
        match parse_ecg("# c\n3 2\n0 1 0\n1 0 4\n") {
            Err(Error::Parse { line: 4, message }) => assert!(message.contains("duplicate")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_ecg("3 1\n0 x 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_ecg("3 1\n0 1 1\n1 2 0"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_ecg("3 1\n0 5 1"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_ecg("# only comments\n").is_err());
    }

    #[test]
    fn canonical_output() {
        let g = parse_ecg("3 3\n2 1 1\n0 2 2\n1 0 0\n").unwrap();
        assert_eq!(write_ecg(&g), "3 3\n0 1 0\n0 2 2\n1 2 1\n");
        assert_eq!(write_ecg(&EdgeColoredGraph::empty(5)), "5 0\n");
        let k4 = generators::rainbow_complete(4);
        assert_eq!(parse_ecg(&write_ecg(&k4)).unwrap(), k4);
        let e2 = generators::example2(8).unwrap();
        let once = write_ecg(&parse_ecg(&write_ecg(&e2)).unwrap());
        assert_eq!(once, write_ecg(&parse_ecg(&once).unwrap()));
    }

    #[test]
    fn comments_survive() {
        let g = generators::rainbow_complete(3);
        let text = write_ecg_with_comments(&g, &["family: rainbow-complete".into()]);
        let doc = parse_ecg_document(&text).unwrap();
        assert_eq!(doc.comments, vec!["family: rainbow-complete"]);
        assert_eq!(doc.graph, g);
    }
}
