//! Graph specifications as short strings.
//!
//! | form | graph |
//! |---|---|
//! | `path:5`, `P5` | path on 5 vertices |
//! | `cycle:4`, `C4` | 4-cycle |
//! | `complete:4`, `K4` | complete graph |
//! | `empty:3`, `nK1:3` | 3 isolated vertices |
//! | `paths:5,4,3` | disjoint union of paths |
//! | `multipartite:2,2,2`, `bipartite:1,3` | complete multipartite graph |
//! | `house`, `paw`, `null` | named graphs |
//! | `Dv:cycle:4`, `Dv@2:cycle:4` | the doubling construction at vertex `v` (default 0) |
//! | `union:path:2+cycle:3` | disjoint union |
//! | `complement:path:4` | complement of a simple graph |
//! | `edges:5:0-1,1-2` | explicit edge list |
//! | `g6:DQc` or a bare graph6 string | graph6 |
//! | `file:PATH` | multigraph text or graph6 read from a file |

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::io::{self, FormatError};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot parse graph spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn parse_err(spec: &str, reason: impl Into<String>) -> SpecError {
    SpecError::Parse { spec: spec.to_string(), reason: reason.into() }
}

fn number(spec: &str, s: &str) -> Result<usize, SpecError> {
    s.trim().parse().map_err(|_| parse_err(spec, format!("expected a number, got {s:?}")))
}

fn numbers(spec: &str, s: &str) -> Result<Vec<usize>, SpecError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| number(spec, t)).collect()
}

/// The paw: a triangle with a pendant vertex.
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).expect("valid edges")
}

pub fn parse_graph(spec: &str) -> Result<Graph, SpecError> {
    let s = spec.trim();
    if let Some((head, rest)) = s.split_once(':') {
        return parse_headed(s, head, rest);
    }
    match s {
        "house" => return Ok(Graph::house()),
        "paw" => return Ok(paw()),
        "null" | "∅" => return Ok(Graph::null()),
        _ => {}
    }
    if let Some(g) = short_name(s)? {
        return Ok(g);
    }
    io::from_graph6(s).map_err(|e| parse_err(spec, format!("not a known family and not graph6 ({e})")))
}

/// `Kn`, `Pn`, `Cn`, `nK1` style names.
fn short_name(s: &str) -> Result<Option<Graph>, SpecError> {
    if let Some(n) = s.strip_suffix("K1").and_then(|p| p.parse::<usize>().ok()) {
        return Ok(Some(Graph::empty(n)));
    }
    let mut chars = s.chars();
    let Some(first) = chars.next() else { return Ok(None) };
    let Ok(n) = chars.as_str().parse::<usize>() else { return Ok(None) };
    Ok(match first {
        'K' => Some(Graph::complete(n)),
        'P' => Some(Graph::path(n)?),
        'C' => Some(Graph::cycle(n)?),
        _ => None,
    })
}

fn parse_headed(spec: &str, head: &str, rest: &str) -> Result<Graph, SpecError> {
    let g = match head {
        "path" => Graph::path(number(spec, rest)?)?,
        "cycle" => Graph::cycle(number(spec, rest)?)?,
        "complete" => Graph::complete(number(spec, rest)?),
        "empty" | "nK1" => Graph::empty(number(spec, rest)?),
        "paths" => Graph::path_forest(&numbers(spec, rest)?)?,
        "multipartite" | "bipartite" => {
            let parts = numbers(spec, rest)?;
            if head == "bipartite" && parts.len() != 2 {
                return Err(parse_err(spec, "bipartite takes exactly two part sizes"));
            }
            Graph::complete_multipartite(&parts)
        }
        "complement" => parse_graph(rest)?.complement()?,
        "union" => {
            let mut g = Graph::null();
            for part in rest.split('+') {
                g = g.disjoint_union(&parse_graph(part)?);
            }
            g
        }
        "edges" => {
            let (n, list) = rest.split_once(':').unwrap_or((rest, ""));
            let n = number(spec, n)?;
            let mut edges = Vec::new();
            for e in list.split(',').filter(|e| !e.trim().is_empty()) {
                let (a, b) = e.split_once('-').ok_or_else(|| parse_err(spec, format!("bad edge {e:?}")))?;
                edges.push((number(spec, a)?, number(spec, b)?));
            }
            Graph::from_edges(n, &edges)?
        }
        "g6" => io::from_graph6(rest)?,
        "file" => {
            let text =
                std::fs::read_to_string(rest).map_err(|source| SpecError::Io { path: rest.to_string(), source })?;
            let trimmed = text.trim();
            if trimmed.starts_with("n=") || trimmed.starts_with('#') {
                io::from_multigraph_text(&text)?
            } else {
                io::from_graph6(trimmed)?
            }
        }
        _ if head == "Dv" || head.starts_with("Dv@") => {
            let v = match head.strip_prefix("Dv@") {
                Some(v) => number(spec, v)?,
                None => 0,
            };
            parse_graph(rest)?.d_v_construction(v)?
        }
        _ => return Err(parse_err(spec, format!("unknown family {head:?}"))),
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_graph("path:5").unwrap(), Graph::path(5).unwrap());
        assert_eq!(parse_graph("K1").unwrap(), Graph::complete(1));
        assert_eq!(parse_graph("nK1:3").unwrap(), Graph::empty(3));
        assert_eq!(parse_graph("3K1").unwrap(), Graph::empty(3));
        assert_eq!(parse_graph("paths:5,4,3").unwrap().as_path_forest(), Some(vec![5, 4, 3]));
        assert_eq!(parse_graph("house").unwrap(), Graph::house());
        assert_eq!(parse_graph("Dv:cycle:4").unwrap().order(), 8);
        assert_eq!(parse_graph("Dv@1:P3").unwrap().edge_count(), 7);
        assert_eq!(parse_graph("bipartite:1,2").unwrap().edge_count(), 2);
        assert_eq!(parse_graph("complement:C4").unwrap().edge_count(), 2);
        assert_eq!(parse_graph("union:P2+K3").unwrap().order(), 5);
        assert_eq!(parse_graph("edges:3:0-1,1-2").unwrap(), Graph::path(3).unwrap());
        assert_eq!(parse_graph("Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph("g6:Bw").unwrap(), Graph::complete(3));
        assert!(parse_graph("null").unwrap().is_null());
        assert!(parse_graph("cycle:2").is_err());
        assert!(parse_graph("bipartite:1,2,3").is_err());
        assert!(parse_graph("frobnicate:3").is_err());
    }
}
