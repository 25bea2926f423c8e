//! Text formats: graph6 for simple graphs, a line format for multigraphs,
//! and DOT output.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("multigraph line {line}: {msg}")]
    Multigraph { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const G6_HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> FormatError {
    FormatError::Graph6(msg.into())
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 encoding of a simple graph, without header or newline.
pub fn to_graph6(g: &Graph) -> Result<String, FormatError> {
    if !g.is_simple() {
        return Err(GraphError::NotSimple.into());
    }
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parse one graph6 string; an optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim();
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b} outside the printable range 63..=126")));
    }
    let val = |b: u8| usize::from(b - 63);
    let (n, body) = if bytes[0] != 126 {
        (val(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(g6_err("truncated order field"));
        }
        (bytes[2..8].iter().fold(0, |a, &b| (a << 6) | val(b)), &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(g6_err("truncated order field"));
        }
        (bytes[1..4].iter().fold(0, |a, &b| (a << 6) | val(b)), &bytes[4..])
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(g6_err(format!("expected {needed} data bytes for order {n}, found {}", body.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = val(body[k / 6]);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Multigraph line format: `n=<order>` then one `i j m` triple per vertex
/// pair with positive multiplicity (loops as `i i m`). `#` starts a comment.
pub fn to_multigraph_text(g: &Graph) -> String {
    let n = g.order();
    let mut out = format!("n={n}\n");
    for i in 0..n {
        for j in i..n {
            let m = g.mult(i, j);
            if m > 0 {
                let _ = writeln!(out, "{i} {j} {m}");
            }
        }
    }
    out
}

pub fn from_multigraph_text(s: &str) -> Result<Graph, FormatError> {
    let mut order = None;
    let mut entries = Vec::new();
    for (ln, raw) in s.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| FormatError::Multigraph { line: ln + 1, msg };
        if order.is_none() {
            let rest = line.strip_prefix("n=").ok_or_else(|| err("expected `n=<order>`".into()))?;
            order = Some(rest.trim().parse::<usize>().map_err(|e| err(e.to_string()))?);
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(err(format!("expected `i j m`, got {} fields", fields.len())));
        }
        let i = fields[0].parse::<usize>().map_err(|e| err(e.to_string()))?;
        let j = fields[1].parse::<usize>().map_err(|e| err(e.to_string()))?;
        let m = fields[2].parse::<u32>().map_err(|e| err(e.to_string()))?;
        entries.push((i, j, m));
    }
    let n = order.ok_or(FormatError::Multigraph { line: 0, msg: "missing `n=<order>` header".into() })?;
    Ok(Graph::from_multiplicities(n, &entries)?)
}

/// DOT rendering of a single graph; multiplicities become `label`s.
pub fn graph_to_dot(g: &Graph, name: &str) -> String {
    let n = g.order();
    let mut out = format!("graph {} {{\n", dot_id(name));
    for v in 0..n {
        let _ = writeln!(out, "  {v};");
    }
    for i in 0..n {
        for j in i..n {
            match g.mult(i, j) {
                0 => {}
                1 => {
                    let _ = writeln!(out, "  {i} -- {j};");
                }
                m => {
                    let _ = writeln!(out, "  {i} -- {j} [label=\"{m}\"];");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Quote a string as a DOT identifier.
pub fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        let g = from_graph6("DQc").unwrap();
        assert_eq!(g, Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap());
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(to_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(to_graph6(&Graph::path(3).unwrap()).unwrap(), "Bg");
        assert_eq!(to_graph6(&Graph::null()).unwrap(), "?");
        assert_eq!(from_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn long_order_field() {
        let g = Graph::empty(63);
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with("~??~"));
        assert_eq!(from_graph6(&s).unwrap(), g);
        let p = Graph::path(100).unwrap();
        assert_eq!(from_graph6(&to_graph6(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("Cx~").is_err());
        assert!(from_graph6("B ").is_err());
        let loopy = Graph::from_multiplicities(1, &[(0, 0, 1)]).unwrap();
        assert!(to_graph6(&loopy).is_err());
    }

    #[test]
    fn multigraph_round_trip() {
        let g = Graph::from_multiplicities(3, &[(0, 1, 2), (2, 2, 1), (1, 2, 1)]).unwrap();
        let text = to_multigraph_text(&g);
        assert_eq!(text, "n=3\n0 1 2\n1 2 1\n2 2 1\n");
        assert_eq!(from_multigraph_text(&text).unwrap(), g);
        let commented = "# a loop\nn=2\n\n0 0 3 # three loops\n";
        assert_eq!(from_multigraph_text(commented).unwrap().mult(0, 0), 3);
        assert!(from_multigraph_text("0 1 1").is_err());
        assert!(from_multigraph_text("n=2\n0 5 1").is_err());
    }

    #[test]
    fn dot_lists_edges() {
        let d = graph_to_dot(&Graph::path(2).unwrap(), "p2");
        assert!(d.contains("0 -- 1;"));
        assert!(d.starts_with("graph \"p2\""));
    }
}
