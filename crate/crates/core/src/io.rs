//! DIMACS and edge-list readers and writers.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Dimacs,
    Edgelist,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimacs" => Ok(Format::Dimacs),
            "edgelist" => Ok(Format::Edgelist),
            _ => Err(Error::InvalidParameter(format!("unknown format '{s}'"))),
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let t = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    t.parse().map_err(|_| parse_err(line, format!("bad {what} '{t}'")))
}

fn check_edge(u: usize, v: usize, n: usize, line: usize) -> Result<()> {
    if u >= n || v >= n {
        return Err(parse_err(line, format!("vertex id out of range for n = {n}")));
    }
    if u == v {
        return Err(parse_err(line, format!("self-loop at vertex {u}")));
    }
    Ok(())
}

/// `n` overrides the vertex count for edge lists; DIMACS takes it from the header.
pub fn parse_graph(text: &str, format: Format, n: Option<usize>) -> Result<Graph> {
    match format {
        Format::Dimacs => parse_dimacs(text),
        Format::Edgelist => parse_edgelist(text, n),
    }
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                if toks.next() != Some("edge") {
                    return Err(parse_err(line, "malformed header, expected 'p edge n m'"));
                }
                n = Some(number(toks.next(), line, "vertex count")?);
                number(toks.next(), line, "edge count")?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| parse_err(line, "edge before header"))?;
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line, "DIMACS ids are 1-based"));
                }
                check_edge(u - 1, v - 1, n, line)?;
                edges.push((u - 1, v - 1));
            }
            Some(t) => return Err(parse_err(line, format!("unexpected token '{t}'"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing 'p edge' header"))?;
    Graph::from_edges(n, &edges)
}

pub fn parse_edgelist(text: &str, n: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_id = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = body.split_whitespace();
        let Some(first) = toks.next() else { continue };
        let u = number(Some(first), line, "endpoint")?;
        let v = number(toks.next(), line, "endpoint")?;
        if toks.next().is_some() {
            return Err(parse_err(line, "expected two ids per line"));
        }
        check_edge(u, v, n.unwrap_or(usize::MAX), line)?;
        max_id = max_id.max(Some(u.max(v)));
        edges.push((u, v));
    }
    let n = n.unwrap_or(max_id.map_or(0, |m| m + 1));
    Graph::from_edges(n, &edges)
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

/// Isolated trailing vertices need `--n` to survive a round trip, so the
/// count goes into a comment as well.
pub fn to_edgelist(g: &Graph) -> String {
    let mut s = format!("# n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn serialize(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs => to_dimacs(g),
        Format::Edgelist => to_edgelist(g),
    }
}
