//! Plain-text edge lists.
//!
//! ```text
//! n m
//! u v weight
//! ...
//! ```
//!
//! One line per undirected edge with `u < v`. Weights are written with Rust's
//! shortest round-trip formatting, so save/load reproduces the graph exactly.

use std::collections::HashMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use thiserror::Error;

use super::{Graph, GraphError, VertexId};
use crate::weight::Weight;

#[derive(Debug, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; 0 for errors not tied to a line.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum ParseErrorKind {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("malformed header {0:?}, expected `n m`")]
    MalformedHeader(String),
    #[error("malformed edge line {0:?}, expected `u v weight`")]
    MalformedLine(String),
    #[error("{0}")]
    InvalidEdge(GraphError),
    #[error("edge {0}-{1} listed twice with different weights {2} and {3}")]
    Asymmetric(VertexId, VertexId, String, String),
    #[error("header declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

impl ParseError {
    fn at(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}

pub fn write_graph<W: Weight, O: Write>(g: &Graph<W>, out: O) -> io::Result<()> {
    let mut out = BufWriter::new(out);
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count())?;
    for (u, v, w) in g.edges() {
        writeln!(out, "{u} {v} {w}")?;
    }
    out.flush()
}

pub fn save_graph<W: Weight>(g: &Graph<W>, dest: impl AsRef<Path>) -> io::Result<()> {
    write_graph(g, File::create(dest)?)
}

pub fn read_graph<W: Weight, R: Read>(src: R) -> Result<Graph<W>, ParseError> {
    let reader = BufReader::new(src);
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(VertexId, VertexId, W)> = Vec::new();
    // (min, max) -> index into `edges`
    let mut seen: HashMap<(VertexId, VertexId), usize> = HashMap::new();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| ParseError::at(lineno, e.into()))?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        let Some((n, _)) = header else {
            let parsed = match fields.as_slice() {
                [n, m] => n.parse().ok().zip(m.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| {
                ParseError::at(lineno, ParseErrorKind::MalformedHeader(text.to_string()))
            })?);
            continue;
        };
        let malformed = || ParseError::at(lineno, ParseErrorKind::MalformedLine(text.to_string()));
        let [u, v, w] = fields.as_slice() else {
            return Err(malformed());
        };
        let u: VertexId = u.parse().map_err(|_| malformed())?;
        let v: VertexId = v.parse().map_err(|_| malformed())?;
        let w: W = w.parse().map_err(|_| malformed())?;

        let invalid = |e| ParseError::at(lineno, ParseErrorKind::InvalidEdge(e));
        if u >= n || v >= n {
            return Err(invalid(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n,
            }));
        }
        if u == v {
            return Err(invalid(GraphError::SelfLoop(u)));
        }
        if !w.is_valid_length() {
            return Err(invalid(GraphError::NonPositiveWeight(u, v, w.to_string())));
        }
        let key = (u.min(v), u.max(v));
        if let Some(&i) = seen.get(&key) {
            let prev = edges[i].2;
            let kind = if prev == w {
                ParseErrorKind::InvalidEdge(GraphError::DuplicateEdge(key.0, key.1))
            } else {
                ParseErrorKind::Asymmetric(key.0, key.1, prev.to_string(), w.to_string())
            };
            return Err(ParseError::at(lineno, kind));
        }
        seen.insert(key, edges.len());
        edges.push((u, v, w));
    }

    let (n, m) = header.ok_or(ParseError::at(0, ParseErrorKind::MissingHeader))?;
    if edges.len() != m {
        return Err(ParseError::at(
            0,
            ParseErrorKind::EdgeCountMismatch {
                declared: m,
                found: edges.len(),
            },
        ));
    }
    Graph::from_edges(n, edges).map_err(|e| ParseError::at(0, ParseErrorKind::InvalidEdge(e)))
}

pub fn load_graph<W: Weight>(src: impl AsRef<Path>) -> Result<Graph<W>, ParseError> {
    let file = File::open(src).map_err(|e| ParseError::at(0, e.into()))?;
    read_graph(file)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_hypercube, gen_scale_free, Seed, WeightRange};

    fn parse(text: &str) -> Result<Graph<f64>, ParseError> {
        read_graph(text.as_bytes())
    }

    fn round_trip<W: Weight>(g: &Graph<W>) -> Graph<W> {
        let mut buf = Vec::new();
        write_graph(g, &mut buf).unwrap();
        read_graph(buf.as_slice()).unwrap()
    }

    #[test]
    fn generated_graphs_round_trip() {
        let g = gen_scale_free(100, 3, &WeightRange::<f64>::default(), Seed(1)).unwrap();
        assert_eq!(round_trip(&g), g);
        let h = gen_hypercube(5, &WeightRange::<f32>::default(), Seed(2)).unwrap();
        assert_eq!(round_trip(&h), h);
    }

    #[test]
    fn file_round_trip() {
        let g = gen_hypercube(4, &WeightRange::default(), Seed(8)).unwrap();
        let dir = std::env::temp_dir().join(format!("pstw-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("g.txt");
        save_graph(&g, &path).unwrap();
        let back: Graph<f64> = load_graph(&path).unwrap();
        std::fs::remove_dir_all(&dir).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn writes_canonical_text() {
        let g = Graph::from_edges(3, [(1, 0, 0.5), (2, 1, 0.25)]).unwrap();
        let mut buf = Vec::new();
        write_graph(&g, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "3 2\n0 1 0.5\n1 2 0.25\n");
    }

    #[test]
    fn isolated_vertex_is_allowed() {
        let g = parse("3 1\n0 1 1.0\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.degree(2), 0);
        assert!(!g.is_connected());
    }

    #[test]
    fn rejects_zero_weight_with_line_number() {
        let err = parse("2 1\n0 1 0.0\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(
            err.kind,
            ParseErrorKind::InvalidEdge(GraphError::NonPositiveWeight(..))
        ));
        assert!(parse("2 1\n0 1 -0.5\n").is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        let err = parse("3 2\n0 1 1.0\n1 x 2.0\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(err.kind, ParseErrorKind::MalformedLine(_)));

        let err = parse("3\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::MalformedHeader(_)));

        let err = parse("").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::MissingHeader));

        let err = parse("3 2\n0 1 1.0\n").unwrap_err();
        assert!(matches!(
            err.kind,
            ParseErrorKind::EdgeCountMismatch {
                declared: 2,
                found: 1
            }
        ));

        let err = parse("2 1\n0 5 1.0\n").unwrap_err();
        assert!(matches!(
            err.kind,
            ParseErrorKind::InvalidEdge(GraphError::VertexOutOfRange { .. })
        ));

        let err = parse("2 1\n1 1 1.0\n").unwrap_err();
        assert!(matches!(
            err.kind,
            ParseErrorKind::InvalidEdge(GraphError::SelfLoop(1))
        ));
    }

    #[test]
    fn rejects_duplicates_and_asymmetry() {
        let err = parse("3 2\n0 1 1.0\n1 0 1.0\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(
            err.kind,
            ParseErrorKind::InvalidEdge(GraphError::DuplicateEdge(0, 1))
        ));

        let err = parse("3 2\n0 1 1.0\n1 0 2.0\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(err.kind, ParseErrorKind::Asymmetric(0, 1, _, _)));
    }
}
