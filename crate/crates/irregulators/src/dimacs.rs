//! DIMACS-style graph files.
//!
//! Accepted lines: `c <comment>`, one `p edge <N> <M>` header, then `M`
//! lines `e <u> <v>` with 1-indexed endpoints. The emitter writes edges
//! sorted lexicographically, one per line, LF-terminated; parsing its
//! output reproduces the graph exactly.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return err(line_no, "duplicate problem line");
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return err(line_no, "malformed header, expected `p edge <n> <m>`");
                }
                let n = parse_number(fields[2], line_no, "vertex count")?;
                let m = parse_number(fields[3], line_no, "edge count")?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = match header {
                    Some(h) => h,
                    None => return err(line_no, "edge before `p edge` header"),
                };
                if fields.len() != 3 {
                    return err(line_no, "malformed edge, expected `e <u> <v>`");
                }
                let u = parse_number(fields[1], line_no, "endpoint")?;
                let v = parse_number(fields[2], line_no, "endpoint")?;
                if u < 1 || u > n || v < 1 || v > n {
                    return err(
                        line_no,
                        &format!("vertex out of range: e {u} {v} with n = {n}"),
                    );
                }
                if u == v {
                    return err(line_no, &format!("self-loop at vertex {u}"));
                }
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                edges.push(((a - 1) as u32, (b - 1) as u32));
            }
            other => return err(line_no, &format!("unrecognised line type `{other}`")),
        }
    }

    let (n, m) = header.ok_or_else(|| Error::Parse {
        line: 0,
        msg: "missing `p edge` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header announces {m} edges, file contains {}", edges.len()),
        });
    }
    edges.sort_unstable();
    if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Parse {
            line: 0,
            msg: format!("duplicate edge ({},{})", w[0].0 + 1, w[0].1 + 1),
        });
    }
    Ok(Graph::from_sorted_edges(n, edges, None))
}

/// Serialises a graph; `comments` become leading `c` lines.
pub fn emit_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("c ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("p edge {} {}\n", g.vertex_count(), g.edge_count()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn emit(g: &Graph) -> String {
    emit_with_comments(g, &[])
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Graph> {
    parse(&fs::read_to_string(path)?)
}

pub fn write_file(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    Ok(fs::write(path, emit(g))?)
}

fn err(line: usize, msg: &str) -> Result<Graph> {
    Err(Error::Parse {
        line,
        msg: msg.to_string(),
    })
}

fn parse_number(s: &str, line: usize, what: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("invalid {what} `{s}`"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k2() {
        let g = parse("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parses_triangle_with_comments() {
        let g = parse("c tiny\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn reports_vertex_out_of_range_with_line() {
        let e = parse("p edge 3 1\ne 1 5\n").unwrap_err();
        match e {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("out of range"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_self_loop_duplicate_and_bad_header() {
        assert!(parse("p edge 2 1\ne 1 1\n").is_err());
        assert!(parse("p edge 2 2\ne 1 2\ne 2 1\n").is_err());
        assert!(parse("p foo 2 1\ne 1 2\n").is_err());
        assert!(parse("e 1 2\n").is_err());
        assert!(parse("p edge 3 2\ne 1 2\n").is_err());
    }

    #[test]
    fn emit_is_exact() {
        let g = parse("p edge 4 2\ne 3 4\ne 1 2\n").unwrap();
        assert_eq!(emit(&g), "p edge 4 2\ne 1 2\ne 3 4\n");
    }

    #[test]
    fn round_trip() {
        let g = parse("p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n").unwrap();
        assert_eq!(parse(&emit(&g)).unwrap(), g);
    }
}
