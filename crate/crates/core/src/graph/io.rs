//! Plain-text graph files.
//!
//! ```text
//! # comment
//! n 3
//! 1 2 -
//! 2 3 +
//! 1 3 +
//! ```
//!
//! The first non-comment line is `n <count>`; each further line is an edge
//! `u v` (unsigned) or `u v +` / `u v -` (signed), with 1-based vertices.
//! A file is either entirely signed or entirely unsigned.

use super::{AnyGraph, Graph, Sign, SignedGraph};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_graph(text: &str) -> Result<AnyGraph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, Option<Sign>)> = Vec::new();
    let mut signed: Option<bool> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(count) = n else {
            match fields.as_slice() {
                ["n", c] => {
                    let c: usize = c.parse().map_err(|_| parse_err(line_no, format!("bad vertex count {c:?}")))?;
                    if c == 0 {
                        return Err(parse_err(line_no, "vertex count must be positive"));
                    }
                    n = Some(c);
                    continue;
                }
                _ => return Err(parse_err(line_no, "expected header `n <count>`")),
            }
        };
        let vertex = |s: &str| -> Result<usize> {
            let v: usize = s.parse().map_err(|_| parse_err(line_no, format!("bad vertex {s:?}")))?;
            if v == 0 || v > count {
                return Err(parse_err(line_no, format!("vertex {v} outside 1..={count}")));
            }
            Ok(v - 1)
        };
        let (u, v, sign) = match fields.as_slice() {
            [a, b] => (vertex(a)?, vertex(b)?, None),
            [a, b, "+"] => (vertex(a)?, vertex(b)?, Some(Sign::Positive)),
            [a, b, "-"] => (vertex(a)?, vertex(b)?, Some(Sign::Negative)),
            [_, _, s] => return Err(parse_err(line_no, format!("bad sign {s:?}, expected + or -"))),
            _ => return Err(parse_err(line_no, "expected `u v` or `u v +/-`")),
        };
        match signed {
            None => signed = Some(sign.is_some()),
            Some(s) if s != sign.is_some() => {
                return Err(parse_err(line_no, "mixing signed and unsigned edge lines"))
            }
            _ => {}
        }
        if u == v {
            return Err(parse_err(line_no, format!("loop at vertex {}", u + 1)));
        }
        if edges.iter().any(|&(a, b, _)| (a, b) == (u, v) || (a, b) == (v, u)) {
            return Err(parse_err(line_no, format!("repeated edge {} {}", u + 1, v + 1)));
        }
        edges.push((u, v, sign));
    }

    let n = n.ok_or_else(|| parse_err(text.lines().count().max(1), "missing header `n <count>`"))?;
    if signed == Some(true) {
        let e: Vec<(usize, usize, Sign)> = edges.into_iter().map(|(u, v, s)| (u, v, s.unwrap())).collect();
        Ok(SignedGraph::from_edges(n, &e)?.into())
    } else {
        let e: Vec<(usize, usize)> = edges.into_iter().map(|(u, v, _)| (u, v)).collect();
        Ok(Graph::from_edges(n, &e)?.into())
    }
}

pub fn format_graph(g: &AnyGraph) -> String {
    let mut out = format!("n {}\n", g.underlying().n());
    match g {
        AnyGraph::Plain(p) => {
            for (u, v) in p.edges() {
                out.push_str(&format!("{} {}\n", u + 1, v + 1));
            }
        }
        AnyGraph::Signed(s) => {
            for (u, v, sign) in s.signed_edges() {
                let c = if sign == Sign::Positive { '+' } else { '-' };
                out.push_str(&format!("{} {} {c}\n", u + 1, v + 1));
            }
        }
    }
    out
}
