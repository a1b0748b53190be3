//! Plain-text edge lists.
//!
//! ```text
//! c optional comment lines
//! p 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The `p <n> <m>` header is optional; without it the vertex count is one more
//! than the largest id seen. Ids are 0-based and edges undirected. Duplicate
//! edges (in either orientation) are rejected.

use std::fmt::Write as _;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parsed edge list: the graph plus any `c` comment lines (without the `c`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    pub comments: Vec<String>,
}

pub fn parse(text: &str) -> Result<EdgeList, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut comments = Vec::new();
    let mut max_id: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let syntax = |message: String| ParseError::Syntax { line, message };
        let mut tokens = trimmed.split_whitespace();
        let first = tokens.next().unwrap_or_default();
        match first {
            "c" | "#" => {
                comments.push(trimmed[first.len()..].trim().to_string());
            }
            "p" => {
                if header.is_some() || !edges.is_empty() {
                    return Err(syntax("header must come once, before any edge".into()));
                }
                let nums: Vec<_> = tokens.collect();
                if nums.len() != 2 {
                    return Err(syntax(format!("expected `p <n> <m>`, got `{trimmed}`")));
                }
                let n = parse_id(nums[0]).map_err(syntax)?;
                let m = parse_id(nums[1]).map_err(syntax)?;
                header = Some((n, m));
            }
            _ => {
                let rest: Vec<_> = tokens.collect();
                if rest.len() != 1 {
                    return Err(syntax(format!("expected `u v`, got `{trimmed}`")));
                }
                let u = parse_id(first).map_err(syntax)?;
                let v = parse_id(rest[0]).map_err(syntax)?;
                max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
                edges.push((u, v));
            }
        }
    }

    let n = match header {
        Some((n, m)) => {
            if m != edges.len() {
                return Err(ParseError::EdgeCountMismatch { declared: m, found: edges.len() });
            }
            n
        }
        None => max_id.map_or(0, |m| m + 1),
    };
    let graph = Graph::from_edges(n, edges)?;
    Ok(EdgeList { graph, comments })
}

fn parse_id(token: &str) -> Result<usize, String> {
    token
        .parse::<usize>()
        .map_err(|_| format!("`{token}` is not a nonnegative integer"))
}

/// Writes `g` with a `p` header, preceded by one `c` line per comment.
pub fn write(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn header_and_edges() {
        let el = parse("c family path\np 4 3\n0 1\n1 2\n\n2 3\n").unwrap();
        assert_eq!(el.graph.vertex_count(), 4);
        assert_eq!(el.graph.edge_count(), 3);
        assert_eq!(el.comments, vec!["family path".to_string()]);
    }

    #[test]
    fn headerless_infers_vertex_count() {
        let el = parse("0 5\n").unwrap();
        assert_eq!(el.graph.vertex_count(), 6);
        assert_eq!(parse("").unwrap().graph.vertex_count(), 0);
    }

    #[test]
    fn header_allows_isolated_vertices() {
        let el = parse("p 5 1\n0 1\n").unwrap();
        assert_eq!(el.graph.vertex_count(), 5);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse("0 1\n1 0\n"), Err(ParseError::Graph(GraphError::DuplicateEdge(0, 1)))));
        assert!(matches!(parse("0 x\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse("0 1 2\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("p 3 2\n0 1\n"), Err(ParseError::EdgeCountMismatch { .. })));
        assert!(matches!(parse("p 2 1\n0 2\n"), Err(ParseError::Graph(_))));
        assert!(matches!(parse("3 3\n"), Err(ParseError::Graph(GraphError::SelfLoop(3)))));
        assert!(matches!(parse("0 1\np 2 1\n"), Err(ParseError::Syntax { line: 2, .. })));
    }

    #[test]
    fn write_then_parse() {
        let g = generators::dodecahedron();
        let text = write(&g, &["family dodecahedron".into()]);
        let back = parse(&text).unwrap();
        assert_eq!(back.graph, g);
        assert_eq!(back.comments, vec!["family dodecahedron".to_string()]);
    }
}
