//! Text formats: a plain edge list, graph6 and Graphviz DOT.

use std::fmt::Write as _;

use super::{Edge, Graph, Vertex};
use crate::{Error, Graph6Error, ParseErrorKind, Result};

/// Parses lines of `u v` pairs with an optional leading `n <count>` header.
///
/// Without a header the vertex count is one more than the largest id seen.
/// Text after `#` is ignored and duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, Edge)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |kind| Error::Parse {
            line: line_no,
            kind,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(parse_err(ParseErrorKind::MisplacedHeader));
            }
            let count = match tokens.as_slice() {
                [_, count] => count.parse::<usize>().ok(),
                _ => None,
            };
            declared = Some(count.ok_or_else(|| {
                parse_err(ParseErrorKind::Malformed(format!(
                    "expected 'n <count>', got '{line}'"
                )))
            })?);
            continue;
        }
        let (u, v) = match tokens.as_slice() {
            [a, b] => match (a.parse::<Vertex>(), b.parse::<Vertex>()) {
                (Ok(u), Ok(v)) => (u, v),
                _ => {
                    return Err(parse_err(ParseErrorKind::Malformed(format!(
                        "expected two vertex ids, got '{line}'"
                    ))))
                }
            },
            _ => {
                return Err(parse_err(ParseErrorKind::Malformed(format!(
                    "expected two vertex ids, got '{line}'"
                ))))
            }
        };
        if u == v {
            return Err(parse_err(ParseErrorKind::Loop(u)));
        }
        if let Some(n) = declared {
            let top = u.max(v);
            if top >= n {
                return Err(parse_err(ParseErrorKind::VertexOutOfRange { vertex: top, n }));
            }
        }
        edges.push((line_no, Edge::new(u, v)));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|(_, e)| e.v() + 1).max().unwrap_or(0));
    Graph::new(n, edges.into_iter().map(|(_, e)| e))
}

/// Writes the `n <count>` header followed by one sorted edge per line.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes a graph in graph6: the vertex count followed by the upper triangle
/// of the adjacency matrix in column order, six bits per byte offset by 63.
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 string. An optional `>>graph6<<` prefix and surrounding
/// whitespace are accepted. Padding bits are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidChar { offset, byte }.into());
        }
    }
    let truncated = |expected, found| Error::from(Graph6Error::Truncated { expected, found });
    let (n, body) = match bytes {
        [] => return Err(truncated(1, 0)),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(truncated(8, bytes.len()));
            }
            let n = rest[..6]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(truncated(4, bytes.len()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(truncated(bytes.len() - body.len() + needed, bytes.len()));
    }
    if body.len() > needed {
        return Err(Graph6Error::Trailing(body.len() - needed).into());
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push(Edge::new(i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

/// Parses every non-empty line as a graph6 string, reporting the 1-based
/// line number of the first failure.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l).map_err(|e| match e {
                Error::Graph6(inner) => Error::Parse {
                    line: i + 1,
                    kind: ParseErrorKind::Malformed(inner.to_string()),
                },
                other => other,
            })
        })
        .collect()
}

/// A set of edges drawn with a common colour in DOT output.
#[derive(Clone, Debug)]
pub struct DotLayer<'a> {
    pub edges: &'a [Edge],
    pub color: &'a str,
}

/// Graphviz export with vertex ids as labels. An edge in several layers takes
/// the colour of the first one.
pub fn to_dot(g: &Graph, layers: &[DotLayer<'_>]) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v} [label=\"{v}\"];");
    }
    for &e in g.edges() {
        match layers.iter().find(|l| l.edges.contains(&e)) {
            Some(layer) => {
                let _ = writeln!(
                    out,
                    "  {} -- {} [color=\"{}\", penwidth=2];",
                    e.u(),
                    e.v(),
                    layer.color
                );
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_edge_edge_list() {
        let g = parse_edge_list("n 2\n0 1").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[Edge::new(0, 1)]);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("0 0"),
            Err(Error::Parse {
                line: 1,
                kind: ParseErrorKind::Loop(0)
            })
        );
        assert_eq!(
            parse_edge_list("n 3\n0 1\n\n1 3\n"),
            Err(Error::Parse {
                line: 4,
                kind: ParseErrorKind::VertexOutOfRange { vertex: 3, n: 3 }
            })
        );
        assert!(matches!(
            parse_edge_list("# comment\n0 x\n"),
            Err(Error::Parse {
                line: 2,
                kind: ParseErrorKind::Malformed(_)
            })
        ));
        assert!(matches!(
            parse_edge_list("0 1\nn 4\n"),
            Err(Error::Parse {
                line: 2,
                kind: ParseErrorKind::MisplacedHeader
            })
        ));
    }

    #[test]
    fn edge_list_comments_and_duplicates() {
        let g = parse_edge_list("# triangle\n0 1\n1 2 # spoke\n2 0\n1 0\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        let isolated = parse_edge_list("n 5\n0 1\n").unwrap();
        assert_eq!(isolated.n(), 5);
    }

    #[test]
    fn graph6_known_vectors() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[Edge::new(0, 1)]);
        // five vertices, edges 0-2 0-4 1-3 3-4
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(serialize_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
        assert_eq!(serialize_graph6(&Graph::empty(0)), "?");
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(serialize_graph6(&k4), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(
            parse_graph6(""),
            Err(Graph6Error::Truncated {
                expected: 1,
                found: 0
            }
            .into())
        );
        assert!(matches!(
            parse_graph6("D Q"),
            Err(Error::Graph6(Graph6Error::InvalidChar { offset: 1, .. }))
        ));
        assert!(matches!(
            parse_graph6("DQ"),
            Err(Error::Graph6(Graph6Error::Truncated { .. }))
        ));
        assert!(matches!(
            parse_graph6("DQcc"),
            Err(Error::Graph6(Graph6Error::Trailing(1)))
        ));
    }

    #[test]
    fn graph6_large_vertex_count() {
        let g = Graph::new(100, [(0, 99), (42, 43)]).unwrap();
        let s = serialize_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn dot_marks_layers() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let red = [Edge::new(0, 1)];
        let dot = to_dot(&g, &[DotLayer { edges: &red, color: "red" }]);
        assert!(dot.contains("0 -- 1 [color=\"red\""));
        assert!(dot.contains("1 -- 2;"));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..14).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn formats_round_trip(g in arb_graph()) {
            prop_assert_eq!(&parse_edge_list(&serialize_edge_list(&g)).unwrap(), &g);
            let s = serialize_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(serialize_graph6(&back), s);
        }
    }
}
