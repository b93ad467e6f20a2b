//! graph6 and edge-list formats.

use neumaier_core::graph::{Graph, GraphError, MAX_VERTICES};
use petgraph::graph::UnGraph;
use petgraph::graph6::{from_graph6_representation, ToGraph6};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn to_graph6(g: &Graph) -> String {
    let mut pg: UnGraph<(), ()> = UnGraph::with_capacity(g.n(), g.edge_count());
    for _ in 0..g.n() {
        pg.add_node(());
    }
    pg.extend_with_edges(g.edges().map(|(u, v)| (u as u32, v as u32)));
    pg.graph6_string()
}

/// Decodes one graph6 line; an optional `>>graph6<<` header is accepted.
pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bad = |m: &str| FormatError::Graph6(m.to_string());
    if s.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(c) = s.bytes().find(|b| !(63..=126).contains(b)) {
        return Err(FormatError::Graph6(format!("byte {c:#04x} outside 63..=126")));
    }
    let bytes = s.as_bytes();
    let (n, header) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(bad("orders above 258047 are not supported"));
        }
        if bytes.len() < 4 {
            return Err(bad("truncated order"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n }.into());
    }
    let expected = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - header != expected {
        return Err(FormatError::Graph6(format!(
            "order {n} needs {expected} adjacency bytes, found {}",
            bytes.len() - header
        )));
    }
    let (order, edges) = from_graph6_representation::<u32>(s.to_string());
    Ok(Graph::from_edges(order, edges.into_iter().map(|(u, v)| (u as usize, v as usize)))?)
}

/// Parses `u v` lines (0-based). An optional first line `n <count>` fixes the
/// vertex count; otherwise it is one more than the largest vertex. `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_edge = false;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| FormatError::EdgeList { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if seen_edge || n.is_some() || fields.len() != 2 {
                return Err(err("`n <count>` must be the first entry and appear once".into()));
            }
            n = Some(fields[1].parse().map_err(|_| err(format!("bad count {:?}", fields[1])))?);
            continue;
        }
        if fields.len() != 2 {
            return Err(err(format!("expected two vertices, found {}", fields.len())));
        }
        let parse = |f: &str| f.parse::<usize>().map_err(|_| err(format!("bad vertex {f:?}")));
        edges.push((parse(fields[0])?, parse(fields[1])?));
        seen_edge = true;
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn known_strings() {
        assert_eq!(to_graph6(&cycle(4)), "Cl");
        assert_eq!(to_graph6(&Graph::from_edges(2, [(0, 1)]).unwrap()), "A_");
        assert_eq!(from_graph6("Cl").unwrap().rows(), cycle(4).rows());
        let c = from_graph6("Cr").unwrap();
        assert!([(0, 1), (0, 2), (1, 3), (2, 3)].iter().all(|&(u, v)| c.is_adjacent(u, v)));
        assert_eq!(c.edge_count(), 4);
        assert_eq!(from_graph6(">>graph6<<A_").unwrap().edge_count(), 1);
    }

    #[test]
    fn long_order_roundtrip() {
        let g = cycle(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap().rows(), g.rows());
    }

    #[test]
    fn malformed_graph6() {
        assert!(matches!(from_graph6(""), Err(FormatError::Graph6(_))));
        assert!(matches!(from_graph6("C"), Err(FormatError::Graph6(_))));
        assert!(matches!(from_graph6("Crr"), Err(FormatError::Graph6(_))));
        assert!(matches!(from_graph6("C\u{7f}"), Err(FormatError::Graph6(_))));
        assert!(matches!(from_graph6("~~"), Err(FormatError::Graph6(_))));
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("# square\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g.rows(), cycle(4).rows());
        let h = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(h.rows(), g.rows());
        assert_eq!(parse_edge_list("n 3\n0 1\n").unwrap().n(), 3);
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(FormatError::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 0\n"), Err(FormatError::Graph(GraphError::Loop { vertex: 0 }))));
        assert!(matches!(parse_edge_list("0 1\nn 2\n"), Err(FormatError::EdgeList { line: 2, .. })));
    }
}
