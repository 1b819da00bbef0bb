//! DIMACS and edge-list graph files, plus the plain colouring format.
//!
//! Vertices are 1-based in every file format and 0-based in memory.

use std::fmt::Write as _;

use thiserror::Error;

use crate::colouring::Colouring;
use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Input(String),
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line { line, message: message.into() }
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let t = token.ok_or_else(|| at(line, format!("missing {what}")))?;
    t.parse().map_err(|_| at(line, format!("{what} '{t}' is not a nonnegative integer")))
}

/// Checks one 1-based edge and converts it to 0-based, rejecting loops,
/// out-of-range endpoints and repeats.
struct EdgeSink {
    n: usize,
    seen: std::collections::HashSet<(usize, usize)>,
    edges: Vec<(usize, usize)>,
}

impl EdgeSink {
    fn new(n: usize) -> Self {
        EdgeSink { n, seen: Default::default(), edges: Vec::new() }
    }

    fn push(&mut self, u: usize, v: usize, line: usize) -> Result<(), ParseError> {
        for x in [u, v] {
            if x < 1 || x > self.n {
                return Err(at(line, format!("vertex {x} out of range 1..={}", self.n)));
            }
        }
        if u == v {
            return Err(at(line, format!("self-loop on vertex {u}")));
        }
        let key = (u.min(v) - 1, u.max(v) - 1);
        if !self.seen.insert(key) {
            return Err(at(line, format!("duplicate edge {} {}", key.0 + 1, key.1 + 1)));
        }
        self.edges.push(key);
        Ok(())
    }

    fn finish(self) -> Result<Graph, ParseError> {
        Graph::from_edges(self.n, self.edges).map_err(|e: GraphError| ParseError::Input(e.to_string()))
    }
}

fn check_size(n: usize, line: usize) -> Result<(), ParseError> {
    if n < 1 {
        return Err(at(line, "graph must have at least one vertex"));
    }
    if n > MAX_VERTICES {
        return Err(at(line, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }
    Ok(())
}

/// Parses DIMACS edge format: `c` comments, one `p edge N M` header and
/// `e U V` lines.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut sink: Option<(EdgeSink, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if sink.is_some() {
                    return Err(at(line, "second problem line"));
                }
                match tok.next() {
                    Some("edge") | Some("col") => {}
                    other => return Err(at(line, format!("expected 'p edge N M', found format {other:?}"))),
                }
                let n = number(tok.next(), line, "vertex count")?;
                let m = number(tok.next(), line, "edge count")?;
                if tok.next().is_some() {
                    return Err(at(line, "trailing tokens after problem line"));
                }
                check_size(n, line)?;
                sink = Some((EdgeSink::new(n), m));
            }
            Some("e") => {
                let (s, _) = sink.as_mut().ok_or_else(|| at(line, "edge before problem line"))?;
                let u = number(tok.next(), line, "endpoint")?;
                let v = number(tok.next(), line, "endpoint")?;
                if tok.next().is_some() {
                    return Err(at(line, "trailing tokens after edge"));
                }
                s.push(u, v, line)?;
            }
            Some(other) => return Err(at(line, format!("unknown line type '{other}'"))),
        }
    }
    let (s, m) = sink.ok_or_else(|| ParseError::Input("missing 'p edge N M' line".into()))?;
    if s.edges.len() != m {
        return Err(ParseError::Input(format!("header declares {m} edges, found {}", s.edges.len())));
    }
    s.finish()
}

/// Parses a `U V` per line edge list with `#` comments. The vertex count is
/// the largest index mentioned, or `vertices` when given (which must cover
/// every index). An edge list with no vertices is rejected.
pub fn parse_edgelist(text: &str, vertices: Option<usize>) -> Result<Graph, ParseError> {
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut tok = body.split_whitespace();
        let Some(first) = tok.next() else { continue };
        let u = number(Some(first), line, "endpoint")?;
        let v = number(tok.next(), line, "endpoint")?;
        if tok.next().is_some() {
            return Err(at(line, "expected exactly two vertices"));
        }
        pairs.push((u, v, line));
    }
    let implied = pairs.iter().map(|&(u, v, _)| u.max(v)).max().unwrap_or(0);
    let n = match vertices {
        Some(n) => n,
        None if pairs.is_empty() => {
            return Err(ParseError::Input("empty edge list; pass --vertices N for an edgeless graph".into()))
        }
        None => implied,
    };
    if n < 1 {
        return Err(ParseError::Input("graph must have at least one vertex".into()));
    }
    if n > MAX_VERTICES {
        return Err(ParseError::Input(format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }
    let mut sink = EdgeSink::new(n);
    for (u, v, line) in pairs {
        sink.push(u, v, line)?;
    }
    sink.finish()
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut s = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{} {}", u + 1, v + 1);
    }
    s
}

/// Parses `V C` lines (1-based vertex, colour ≥ 1) with `#` comments. Every
/// vertex of an `n`-vertex graph must be coloured exactly once. The palette
/// is the largest colour used.
pub fn parse_colouring(text: &str, n: usize) -> Result<Colouring, ParseError> {
    let mut colours = vec![0; n];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut tok = body.split_whitespace();
        let Some(first) = tok.next() else { continue };
        let v = number(Some(first), line, "vertex")?;
        let c = number(tok.next(), line, "colour")?;
        if tok.next().is_some() {
            return Err(at(line, "expected a vertex and a colour"));
        }
        if v < 1 || v > n {
            return Err(at(line, format!("vertex {v} out of range 1..={n}")));
        }
        if c < 1 {
            return Err(at(line, "colours start at 1"));
        }
        if colours[v - 1] != 0 {
            return Err(at(line, format!("vertex {v} coloured twice")));
        }
        colours[v - 1] = c;
    }
    if let Some(v) = colours.iter().position(|&c| c == 0) {
        return Err(ParseError::Input(format!("vertex {} has no colour", v + 1)));
    }
    Ok(Colouring::from_colours(colours))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::path;

    #[test]
    fn dimacs_p4() {
        let g = parse_dimacs("c path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n").unwrap();
        assert_eq!(g, path(4));
        assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn dimacs_errors_carry_lines() {
        let e = parse_dimacs("p edge 2 1\ne 1 1\n").unwrap_err();
        assert_eq!(e, ParseError::Line { line: 2, message: "self-loop on vertex 1".into() });
        assert!(matches!(parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"), Err(ParseError::Line { line: 3, .. })));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1 3\n"), Err(ParseError::Line { line: 2, .. })));
        assert!(matches!(parse_dimacs("p edge 2 2\ne 1 2\n"), Err(ParseError::Input(_))));
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(ParseError::Line { line: 1, .. })));
        assert!(matches!(parse_dimacs("p edge x 1\n"), Err(ParseError::Line { line: 1, .. })));
        assert!(parse_dimacs("").is_err());
    }

    #[test]
    fn edgelist_examples() {
        let g = parse_edgelist("# p4\n1 2\n2 3 # mid\n\n3 4\n", None).unwrap();
        assert_eq!(g, path(4));
        assert!(parse_edgelist("", None).is_err());
        assert_eq!(parse_edgelist("", Some(3)).unwrap().n(), 3);
        assert!(parse_edgelist("", Some(0)).is_err());
        assert!(matches!(parse_edgelist("1 2\n1 2\n", None), Err(ParseError::Line { line: 2, .. })));
        assert!(matches!(parse_edgelist("1 5\n", Some(4)), Err(ParseError::Line { line: 1, .. })));
        assert_eq!(parse_edgelist(&write_edgelist(&g), None).unwrap(), g);
    }

    #[test]
    fn colouring_file() {
        let c = parse_colouring("1 1\n2 2\n# done\n3 1\n", 3).unwrap();
        assert_eq!(c.colours, vec![1, 2, 1]);
        assert_eq!(c.palette, 2);
        assert!(parse_colouring("1 1\n", 2).is_err());
        assert!(parse_colouring("1 0\n", 1).is_err());
        assert!(parse_colouring("1 1\n1 2\n", 1).is_err());
    }
}
