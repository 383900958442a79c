//! File formats: DIMACS edge format for graphs and a small JSON format for
//! colorings.
//!
//! DIMACS: header `p edge <n> <m>`, one `e <u> <v>` line per edge with
//! 1-based endpoints, comment lines starting with `c`.
//!
//! Coloring JSON: `{"k": <int>, "colors": [<int>, ...]}` with 1-based colors,
//! the array indexed by vertex order.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::Path;

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Reads a graph in DIMACS edge format.
pub fn read_dimacs<R: BufRead>(reader: R) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut declared_edges = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_ascii_whitespace();
        match fields.next() {
            Some("p") => {
                let kind = fields
                    .next()
                    .ok_or_else(|| FormatError::Parse(format!("line {}: bare p line", lineno + 1)))?;
                if kind != "edge" && kind != "col" {
                    return Err(FormatError::Parse(format!(
                        "line {}: unsupported problem type {kind:?}",
                        lineno + 1
                    )));
                }
                let nv: usize = parse_field(fields.next(), lineno)?;
                declared_edges = parse_field(fields.next(), lineno)?;
                n = Some(nv);
            }
            Some("e") => {
                let n = n.ok_or_else(|| {
                    FormatError::Parse(format!("line {}: edge before p line", lineno + 1))
                })?;
                let u: usize = parse_field(fields.next(), lineno)?;
                let v: usize = parse_field(fields.next(), lineno)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(FormatError::Parse(format!(
                        "line {}: endpoint out of range 1..={n}",
                        lineno + 1
                    )));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(FormatError::Parse(format!(
                    "line {}: unexpected record {other:?}",
                    lineno + 1
                )));
            }
            None => {}
        }
    }
    let n = n.ok_or_else(|| FormatError::Parse("missing p line".into()))?;
    if edges.len() != declared_edges {
        // DIMACS headers in the wild are frequently off after dedup; only the
        // raw line count is checked here.
        return Err(FormatError::Parse(format!(
            "header declares {declared_edges} edges, file has {}",
            edges.len()
        )));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn read_dimacs_file(path: impl AsRef<Path>) -> Result<Graph, FormatError> {
    read_dimacs(BufReader::new(File::open(path)?))
}

/// Writes a graph in DIMACS edge format (edges with `u < v`, ascending).
pub fn write_dimacs<W: Write>(g: &Graph, mut w: W) -> io::Result<()> {
    if let Some(name) = g.name() {
        writeln!(w, "c {name}")?;
    }
    writeln!(w, "p edge {} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn dimacs_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_dimacs(g, &mut buf).expect("write to Vec cannot fail");
    String::from_utf8(buf).expect("dimacs output is ascii")
}

pub fn write_dimacs_file(g: &Graph, path: impl AsRef<Path>) -> io::Result<()> {
    write_dimacs(g, File::create(path)?)
}

/// Reads a coloring from JSON, validating the color range.
pub fn read_coloring<R: Read>(reader: R) -> Result<Coloring, FormatError> {
    #[derive(serde::Deserialize)]
    struct Raw {
        k: usize,
        colors: Vec<usize>,
    }
    let raw: Raw = serde_json::from_reader(reader)?;
    Ok(Coloring::new(raw.k, raw.colors)?)
}

pub fn read_coloring_file(path: impl AsRef<Path>) -> Result<Coloring, FormatError> {
    read_coloring(BufReader::new(File::open(path)?))
}

pub fn write_coloring<W: Write>(c: &Coloring, w: W) -> Result<(), FormatError> {
    serde_json::to_writer(w, c)?;
    Ok(())
}

pub fn coloring_string(c: &Coloring) -> String {
    serde_json::to_string(c).expect("coloring serializes")
}

fn parse_field(field: Option<&str>, lineno: usize) -> Result<usize, FormatError> {
    field
        .ok_or_else(|| FormatError::Parse(format!("line {}: missing field", lineno + 1)))?
        .parse()
        .map_err(|e| FormatError::Parse(format!("line {}: {e}", lineno + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_preserves_structure() {
        let g = Graph::cycle(5).unwrap();
        let text = dimacs_string(&g);
        let back = read_dimacs(text.as_bytes()).unwrap();
        assert_eq!(back.n(), g.n());
        assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn reads_comments_and_one_based_endpoints() {
        let text = "c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n";
        let g = read_dimacs(text.as_bytes()).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(read_dimacs("e 1 2\n".as_bytes()).is_err());
        assert!(read_dimacs("p edge 2 1\ne 1 3\n".as_bytes()).is_err());
        assert!(read_dimacs("p edge 2 2\ne 1 2\n".as_bytes()).is_err());
        assert!(read_dimacs("p graph 2 0\n".as_bytes()).is_err());
    }

    #[test]
    fn coloring_json_round_trip() {
        let c = Coloring::new(3, vec![1, 2, 3, 1]).unwrap();
        let s = coloring_string(&c);
        let back = read_coloring(s.as_bytes()).unwrap();
        assert_eq!(back, c);
        assert!(read_coloring(r#"{"k":2,"colors":[1,3]}"#.as_bytes()).is_err());
    }
}
