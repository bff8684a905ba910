//! Plain-text instance formats.
//!
//! Hypergraphs:
//!
//! ```text
//! hg <n> <m>
//! e v1 v2 ... vk
//! ```
//!
//! Graphs use the header `g <n> <m>` and lines `e u v`. Lines starting with
//! `#` and blank lines are skipped when reading. Writers emit vertices in
//! ascending order, one `\n`-terminated line per edge.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// Either kind of instance, as read from a file whose header decides the kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Hyper(Hypergraph),
    Graph(Graph),
}

struct Records {
    kind: String,
    n: usize,
    edges: Vec<(usize, Vec<usize>)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

fn read_records(text: &str) -> Result<Records> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let mut toks = header.split_whitespace();
    let kind = toks.next().unwrap_or_default().to_string();
    if kind != "hg" && kind != "g" {
        return Err(parse_err(hline, format!("unknown header `{kind}`")));
    }
    let n = parse_count(toks.next(), hline, "vertex count")?;
    let m = parse_count(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(parse_err(hline, "trailing tokens in header"));
    }
    let mut edges = Vec::with_capacity(m);
    for (lno, line) in lines {
        let mut toks = line.split_whitespace();
        if toks.next() != Some("e") {
            return Err(parse_err(lno, "expected an `e` record"));
        }
        let verts = toks
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(lno, format!("invalid vertex `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        edges.push((lno, verts));
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Records { kind, n, edges })
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    match parse_instance(text)? {
        Instance::Hyper(h) => Ok(h),
        Instance::Graph(_) => Err(parse_err(1, "expected `hg` header")),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse_instance(text)? {
        Instance::Graph(g) => Ok(g),
        Instance::Hyper(_) => Err(parse_err(1, "expected `g` header")),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let rec = read_records(text)?;
    if rec.kind == "hg" {
        let h = Hypergraph::new(rec.n, rec.edges.into_iter().map(|(_, e)| e).collect())?;
        return Ok(Instance::Hyper(h));
    }
    let mut pairs = Vec::with_capacity(rec.edges.len());
    for (lno, e) in rec.edges {
        if e.len() != 2 {
            return Err(parse_err(lno, "graph edges have exactly two endpoints"));
        }
        pairs.push((e[0], e[1]));
    }
    Ok(Instance::Graph(Graph::new(rec.n, pairs)?))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "hg {} {}", h.n(), h.m());
    for e in h.edges() {
        out.push('e');
        for v in e {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "g {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reads_with_comments() {
        let h = parse_hypergraph("# c5\nhg 5 5\ne 0 1\ne 1 2\n\ne 2 3\ne 3 4\ne 0 4\n").unwrap();
        assert_eq!((h.n(), h.m()), (5, 5));
        assert_eq!(write_hypergraph(&h), "hg 5 5\ne 0 1\ne 0 4\ne 1 2\ne 2 3\ne 3 4\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_hypergraph("hg 3 1\ne 0 x\n").unwrap_err(),
            Error::Parse { line: 2, message: "invalid vertex `x`".into() }
        );
        assert!(matches!(parse_hypergraph("hg 3 2\ne 0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_hypergraph("xx 3 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_hypergraph(""), Err(Error::Parse { .. })));
        assert_eq!(parse_hypergraph("hg 3 1\ne 2\n").unwrap_err(), Error::SingletonEdge { index: 0 });
        assert!(matches!(parse_graph("g 3 1\ne 0 1 2\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn graph_format() {
        let g = parse_graph("g 3 2\ne 1 2\ne 1 0\n").unwrap();
        assert_eq!(write_graph(&g), "g 3 2\ne 0 1\ne 1 2\n");
        assert!(matches!(parse_instance("g 3 2\ne 1 2\ne 1 0\n").unwrap(), Instance::Graph(_)));
    }

    proptest! {
        #[test]
        fn write_then_parse_is_identity(
            n in 2usize..10,
            raw in proptest::collection::vec(proptest::collection::btree_set(0usize..10, 2..5), 0..10),
        ) {
            let edges: Vec<Vec<usize>> = raw
                .into_iter()
                .map(|e| e.into_iter().filter(|&v| v < n).collect::<Vec<_>>())
                .filter(|e| e.len() >= 2)
                .collect();
            let h = Hypergraph::new(n, edges).unwrap();
            let text = write_hypergraph(&h);
            let back = parse_hypergraph(&text).unwrap();
            prop_assert_eq!(write_hypergraph(&back), text);
            prop_assert_eq!(back.edges(), h.edges());
        }
    }
}
