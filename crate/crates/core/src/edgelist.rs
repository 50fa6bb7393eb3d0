//! Plain-text edge lists.
//!
//! ```text
//! # optional comments and blank lines
//! 3 2        <- optional header "n m"
//! 0 1
//! 1 2
//! ```
//!
//! The header and an edge line look alike. The first data line is taken as a
//! header iff its first number is positive and its second equals the count of
//! the remaining data lines. Without a header, `n` is one more than the
//! largest index seen. Files written by [`write_edge_list`] always carry one.

use std::io::{self, Read, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line: lineno,
            reason: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line: lineno,
            reason: format!("{what} {tok:?} is not a non-negative integer"),
        })
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            reason: "expected exactly two values".into(),
        });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut rows = Vec::new();
    for (i, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        rows.push(parse_pair(line, i + 1)?);
    }

    let header = match rows.first() {
        Some(&(n, m)) if n >= 1 && m == rows.len() - 1 => Some(n),
        _ => None,
    };
    let edges = match header {
        Some(_) => rows[1..].to_vec(),
        None => rows,
    };
    let n = match header {
        Some(n) => n,
        None => edges
            .iter()
            .map(|&(a, b)| a.max(b) + 1)
            .max()
            .unwrap_or(0),
    };
    for &(a, b) in &edges {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange { index: a.max(b), n });
        }
    }
    Graph::from_edges(n, edges)
}

pub fn read_edge_list<R: Read>(mut reader: R) -> Result<Graph> {
    let mut buf = Vec::new();
    reader.read_to_end(&mut buf)?;
    let text = String::from_utf8(buf).map_err(|e| Error::Parse {
        line: 0,
        reason: format!("input is not UTF-8: {e}"),
    })?;
    parse_edge_list(&text)
}

/// Header `n m`, then one `a b` line per edge with `a < b`, sorted.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "{} {}", g.n(), g.m())?;
    for (a, b) in g.edges() {
        writeln!(out, "{a} {b}")?;
    }
    Ok(())
}

pub fn edge_list_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge list is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};

    #[test]
    fn parses_header_and_edges() {
        let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, generate(&FamilySpec::Path { n: 3 }).unwrap());
    }

    #[test]
    fn headerless_comments_and_crlf() {
        let g = parse_edge_list("# path\r\n\r\n0 1\r\n1 2\r\n").unwrap();
        assert_eq!(g, generate(&FamilySpec::Path { n: 3 }).unwrap());
    }

    #[test]
    fn header_declares_isolated_vertices() {
        let g = parse_edge_list("5 1\n0 1\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 1);
        assert_eq!(parse_edge_list("1 0\n").unwrap(), Graph::empty(1));
    }

    #[test]
    fn rejects_invalid_lines() {
        assert_eq!(parse_edge_list("0 0\n"), Err(Error::SelfLoop(0)));
        assert_eq!(
            parse_edge_list("2 1\n0 1\n0 1\n"),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            parse_edge_list("2 1\n0 5\n"),
            Err(Error::IndexOutOfRange { index: 5, n: 2 })
        );
        assert!(matches!(
            parse_edge_list("0 1\n1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn writes_canonical_form() {
        let p2 = generate(&FamilySpec::Path { n: 2 }).unwrap();
        assert_eq!(edge_list_string(&p2), "2 1\n0 1\n");
        assert_eq!(edge_list_string(&Graph::empty(1)), "1 0\n");
        let c3 = generate(&FamilySpec::Cycle { n: 3 }).unwrap();
        assert_eq!(edge_list_string(&c3), "3 3\n0 1\n0 2\n1 2\n");
    }
}
