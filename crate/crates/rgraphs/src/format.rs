//! Text graph format.
//!
//! ```text
//! # comment
//! graph <n>
//! u v          one edge
//! u v *k       k parallel copies
//! ```
//!
//! Vertices are 0-indexed. Repeated `u v` lines encode parallel edges. The
//! writer emits edges in canonical id order, collapsing parallel runs into
//! `*k` lines, so write -> parse -> write is bit-exact.

use crate::graph::{GraphError, Multigraph};

pub fn parse(text: &str) -> Result<Multigraph, GraphError> {
    let mut n: Option<usize> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if n.is_none() {
            let rest = line.strip_prefix("graph").ok_or_else(|| GraphError::Parse {
                line: line_no,
                msg: format!("expected `graph <n>` header, got {line:?}"),
            })?;
            let count = rest.trim().parse::<usize>().map_err(|e| GraphError::Parse {
                line: line_no,
                msg: format!("bad vertex count: {e}"),
            })?;
            n = Some(count);
            continue;
        }
        let mut parts = line.split_whitespace();
        let u = parse_vertex(parts.next(), line_no)?;
        let v = parse_vertex(parts.next(), line_no)?;
        let mult = match parts.next() {
            None => 1,
            Some(tok) => {
                let k = tok
                    .strip_prefix('*')
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| GraphError::Parse {
                        line: line_no,
                        msg: format!("expected `*k` multiplicity, got {tok:?}"),
                    })?;
                if k == 0 {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: "multiplicity must be at least 1".into(),
                    });
                }
                k
            }
        };
        if parts.next().is_some() {
            return Err(GraphError::Parse { line: line_no, msg: format!("trailing junk in {line:?}") });
        }
        for _ in 0..mult {
            pairs.push((u, v));
        }
    }
    let n = n.ok_or(GraphError::Parse { line: 0, msg: "missing `graph <n>` header".into() })?;
    Multigraph::new(n, pairs)
}

fn parse_vertex(tok: Option<&str>, line: usize) -> Result<usize, GraphError> {
    tok.and_then(|s| s.parse::<usize>().ok()).ok_or_else(|| GraphError::Parse {
        line,
        msg: "expected two vertex indices".into(),
    })
}

pub fn to_text(g: &Multigraph) -> String {
    let mut out = format!("graph {}\n", g.n());
    let edges: Vec<(usize, usize)> = g.edges().map(|(_, u, v)| (u, v)).collect();
    let mut i = 0;
    while i < edges.len() {
        let mut j = i;
        while j < edges.len() && edges[j] == edges[i] {
            j += 1;
        }
        let (u, v) = edges[i];
        if j - i == 1 {
            out.push_str(&format!("{u} {v}\n"));
        } else {
            out.push_str(&format!("{u} {v} *{}\n", j - i));
        }
        i = j;
    }
    out
}

impl std::fmt::Display for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip_is_bit_exact() {
        for g in [
            fixtures::petersen(),
            fixtures::c4_2121(),
            fixtures::c4_doubled(),
            fixtures::theta3(),
            Multigraph::empty(3),
        ] {
            let text = to_text(&g);
            let back = parse(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(to_text(&back), text);
        }
    }

    #[test]
    fn parses_comments_and_star_lines() {
        let text = "# a prism\ngraph 4\n\n0 1 *2\n2 3\n# middle\n1 2\n";
        let g = parse(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert_eq!(g.mu(0, 1), 2);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse("").is_err());
        assert!(parse("graph x\n").is_err());
        assert!(parse("graph 2\n0\n").is_err());
        assert!(parse("graph 2\n0 1 *0\n").is_err());
        assert!(parse("graph 2\n0 1 2\n").is_err());
        assert!(parse("graph 2\n0 2\n").is_err());
        assert!(parse("graph 2\n1 1\n").is_err());
        assert!(parse("0 1\n").is_err());
    }
}
