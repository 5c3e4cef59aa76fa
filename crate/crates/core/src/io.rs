//! Text formats: a plain edge list and DIMACS `p edge`.
//!
//! Edge list: one `u v` pair per line with 0-based ids. Lines starting with
//! `#` are ignored. An optional first line `n <count>` fixes the vertex
//! count, otherwise it is the largest id plus one.
//!
//! DIMACS: `c` comment lines, one `p edge <n> <m>` line, then `e <u> <v>`
//! lines with 1-based ids.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(Error::InvalidParameter(format!("unknown graph format '{other}'"))),
        }
    }
}

/// Guesses the format from the first meaningful line: DIMACS files start
/// with a `c` or `p` line.
pub fn sniff_format(text: &str) -> Format {
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        return if line.starts_with('p') || line.starts_with('c') {
            Format::Dimacs
        } else {
            Format::EdgeList
        };
    }
    Format::EdgeList
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_id(token: Option<&str>, line: usize) -> Result<usize> {
    let token = token.ok_or_else(|| parse_error(line, "missing vertex id"))?;
    token
        .parse::<usize>()
        .map_err(|_| parse_error(line, format!("invalid integer '{token}'")))
}

struct EdgeCollector {
    edges: Vec<(usize, usize)>,
    seen: HashSet<(usize, usize)>,
}

impl EdgeCollector {
    fn new() -> Self {
        EdgeCollector { edges: Vec::new(), seen: HashSet::new() }
    }

    fn push(&mut self, u: usize, v: usize, line: usize) -> Result<()> {
        if u == v {
            return Err(parse_error(line, format!("self-loop at vertex {u}")));
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(parse_error(line, format!("duplicate edge {u}-{v}")));
        }
        self.edges.push((u, v));
        Ok(())
    }
}

fn check_count(n: usize, line: usize) -> Result<usize> {
    if n > MAX_VERTICES {
        return Err(parse_error(line, format!("vertex count {n} exceeds {MAX_VERTICES}")));
    }
    Ok(n)
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut first = true;
    let mut collector = EdgeCollector::new();
    let mut max_id = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        if first && line.starts_with('n') {
            first = false;
            if tokens.next() != Some("n") {
                return Err(parse_error(line_no, format!("unexpected token in '{line}'")));
            }
            declared = Some(check_count(parse_id(tokens.next(), line_no)?, line_no)?);
            if tokens.next().is_some() {
                return Err(parse_error(line_no, "trailing tokens after vertex count"));
            }
            continue;
        }
        first = false;
        let u = parse_id(tokens.next(), line_no)?;
        let v = parse_id(tokens.next(), line_no)?;
        if tokens.next().is_some() {
            return Err(parse_error(line_no, "expected exactly two vertex ids"));
        }
        if let Some(n) = declared {
            if let Some(bad) = [u, v].into_iter().find(|&w| w >= n) {
                return Err(parse_error(line_no, format!("vertex {bad} out of range (n = {n})")));
            }
        }
        collector.push(u, v, line_no)?;
        max_id = max_id.max(Some(u.max(v)));
    }
    let n = match declared {
        Some(n) => n,
        None => check_count(max_id.map_or(0, |m| m + 1), 1)?,
    };
    Graph::new(n, &collector.edges)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut collector = EdgeCollector::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(parse_error(line_no, "second problem line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_error(
                            line_no,
                            format!("expected 'p edge', found {:?}", other.unwrap_or("")),
                        ))
                    }
                }
                n = Some(check_count(parse_id(tokens.next(), line_no)?, line_no)?);
                parse_id(tokens.next(), line_no)?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| parse_error(line_no, "edge line before 'p edge' line"))?;
                let u = parse_id(tokens.next(), line_no)?;
                let v = parse_id(tokens.next(), line_no)?;
                if let Some(bad) = [u, v].into_iter().find(|&w| w == 0 || w > n) {
                    return Err(parse_error(line_no, format!("vertex {bad} out of range 1..={n}")));
                }
                collector.push(u - 1, v - 1, line_no)?;
            }
            Some(other) => return Err(parse_error(line_no, format!("unknown line type '{other}'"))),
            None => unreachable!("blank lines are skipped"),
        }
    }
    let n = n.ok_or_else(|| parse_error(0, "missing 'p edge' line"))?;
    Graph::new(n, &collector.edges)
}

/// Writes `n <count>` followed by one `u v` line per edge.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Dimacs => write_dimacs(g),
    }
}
