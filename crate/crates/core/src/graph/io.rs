use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use super::Graph;
use crate::GraphError;

fn parse_token<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, GraphError> {
    tok.parse().map_err(|_| GraphError::Parse {
        line,
        message: format!("invalid {what} `{tok}`"),
    })
}

/// Parses a whitespace-separated edge list.
///
/// Each non-blank line is `u v` or `u v w`; lines starting with `#` are
/// comments. Vertices are renumbered `0..n` in order of first appearance.
/// Weights are read when `weighted` is set (missing weights default to 1)
/// and ignored otherwise.
pub fn parse_edge_list(text: &str, weighted: bool) -> Result<Graph, GraphError> {
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut raw = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if !(2..=3).contains(&toks.len()) {
            return Err(GraphError::Parse {
                line: lineno,
                message: format!("expected `u v` or `u v w`, got {} fields", toks.len()),
            });
        }
        let mut endpoint = |tok: &str| -> Result<usize, GraphError> {
            let label: u64 = parse_token(tok, lineno, "vertex")?;
            Ok(*ids.entry(label).or_insert_with(|| {
                labels.push(label);
                labels.len() - 1
            }))
        };
        let u = endpoint(toks[0])?;
        let v = endpoint(toks[1])?;
        let w = match toks.get(2) {
            Some(tok) => parse_token::<i64>(tok, lineno, "weight")?,
            None => 1,
        };
        raw.push((u, v, if weighted { w } else { 1 }, Some(lineno)));
    }
    Graph::build(labels.len(), raw, weighted, labels)
}

/// Parses the DIMACS edge format: `c` comments, one `p edge n m` header and
/// `e u v [w]` lines with 1-based vertices. Validation matches
/// [`parse_edge_list`].
pub fn parse_dimacs(text: &str, weighted: bool) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut raw = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() || toks.len() != 4 {
                    return Err(GraphError::Parse {
                        line: lineno,
                        message: "expected a single `p edge <n> <m>` header".into(),
                    });
                }
                n = Some(parse_token(toks[2], lineno, "vertex count")?);
            }
            Some("e") => {
                let Some(n) = n else {
                    return Err(GraphError::Parse {
                        line: lineno,
                        message: "edge before `p` header".into(),
                    });
                };
                if !(3..=4).contains(&toks.len()) {
                    return Err(GraphError::Parse {
                        line: lineno,
                        message: "expected `e u v` or `e u v w`".into(),
                    });
                }
                let endpoint = |tok: &str| -> Result<usize, GraphError> {
                    let v: usize = parse_token(tok, lineno, "vertex")?;
                    if v == 0 || v > n {
                        return Err(GraphError::Parse {
                            line: lineno,
                            message: format!("vertex {v} outside 1..={n}"),
                        });
                    }
                    Ok(v - 1)
                };
                let u = endpoint(toks[1])?;
                let v = endpoint(toks[2])?;
                let w = match toks.get(3) {
                    Some(tok) => parse_token::<i64>(tok, lineno, "weight")?,
                    None => 1,
                };
                raw.push((u, v, if weighted { w } else { 1 }, Some(lineno)));
            }
            Some(other) => {
                return Err(GraphError::Parse {
                    line: lineno,
                    message: format!("unknown DIMACS line type `{other}`"),
                })
            }
        }
    }
    let n = n.unwrap_or(0);
    Graph::build(n, raw, weighted, (1..=n as u64).collect())
}

/// Reads a graph file, choosing DIMACS when the first significant line
/// starts with `p`, `c` or `e`.
pub fn read_graph_file(path: &Path, weighted: bool) -> Result<Graph, GraphError> {
    let text = std::fs::read_to_string(path)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let dimacs = first.is_some_and(|l| matches!(l.split_whitespace().next(), Some("p" | "c" | "e")));
    if dimacs {
        parse_dimacs(&text, weighted)
    } else {
        parse_edge_list(&text, weighted)
    }
}

/// Writes the edge list in id order using the original vertex labels, so
/// that [`parse_edge_list`] reproduces the same graph.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        let (a, b) = (g.label(e.u), g.label(e.v));
        if g.is_weighted() {
            writeln!(out, "{a} {b} {}", e.weight).unwrap();
        } else {
            writeln!(out, "{a} {b}").unwrap();
        }
    }
    out
}
