//! Text formats: edge lists, graph families, partitions.
//!
//! Edge-list format: line 1 `n m`; optional line 2 `bipartition a` declaring
//! vertices 0..a-1 as side A; then m lines `u v` with 0 <= u < v < n. Lines
//! starting with `#` are header comments and are skipped.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write as _;

fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn load_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| parse_err(ln, "bad vertex count"))?;
    let m: usize = it
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| parse_err(ln, "bad edge count"))?;
    if it.next().is_some() {
        return Err(parse_err(ln, "trailing tokens after `n m`"));
    }

    let mut rest = lines.peekable();
    let mut side_a: Option<u32> = None;
    if let Some(&(ln, l)) = rest.peek() {
        if let Some(arg) = l.strip_prefix("bipartition") {
            let a: u32 = arg
                .trim()
                .parse()
                .map_err(|_| parse_err(ln, "bad bipartition size"))?;
            if a as usize > n {
                return Err(parse_err(ln, "bipartition size exceeds n"));
            }
            side_a = Some(a);
            rest.next();
        }
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = rest
            .next()
            .ok_or_else(|| parse_err(0, format!("expected {m} edges")))?;
        let mut it = l.split_whitespace();
        let u: u32 = it
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| parse_err(ln, "bad edge endpoint"))?;
        let v: u32 = it
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| parse_err(ln, "bad edge endpoint"))?;
        if it.next().is_some() {
            return Err(parse_err(ln, "trailing tokens after edge"));
        }
        if u == v {
            return Err(parse_err(ln, format!("self-loop at vertex {u}")));
        }
        if u > v {
            return Err(parse_err(ln, format!("endpoints out of order: {u} {v}")));
        }
        if v as usize >= n {
            return Err(parse_err(ln, format!("vertex {v} out of range (n = {n})")));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(ln, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if let Some((ln, _)) = rest.next() {
        return Err(parse_err(ln, "trailing content after edge list"));
    }

    let g = Graph::new(n, &edges)?;
    match side_a {
        Some(a) => {
            let side: Vec<u32> = (0..a).collect();
            g.with_bipartition(&side)
        }
        None => Ok(g),
    }
}

/// Serializes a graph. A declared bipartition must occupy the id prefix.
pub fn write_graph(g: &Graph, header: Option<&str>) -> Result<String> {
    let mut out = String::new();
    if let Some(h) = header {
        writeln!(out, "{h}").unwrap();
    }
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    if g.has_bipartition() {
        let a = g.side_a()?;
        let prefix = a.iter().enumerate().all(|(i, &v)| v == i as u32);
        if !prefix {
            return Err(Error::NonPrefixBipartition);
        }
        writeln!(out, "bipartition {}", a.len()).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    Ok(out)
}

/// Family file: first content line is the number of graphs, then that many
/// edge-list blocks back to back.
pub fn load_family(text: &str) -> Result<Vec<Graph>> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let (ln, first) = *lines
        .first()
        .ok_or_else(|| parse_err(1, "empty family file"))?;
    let count: usize = first
        .parse()
        .map_err(|_| parse_err(ln, "bad family count"))?;
    let mut graphs = Vec::with_capacity(count);
    let mut pos = 1;
    for _ in 0..count {
        let (hln, header) = *lines
            .get(pos)
            .ok_or_else(|| parse_err(0, "family file ended early"))?;
        let mut it = header.split_whitespace();
        let _n: usize = it
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| parse_err(hln, "bad vertex count"))?;
        let m: usize = it
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| parse_err(hln, "bad edge count"))?;
        let mut len = 1;
        if lines
            .get(pos + 1)
            .map(|(_, l)| l.starts_with("bipartition"))
            == Some(true)
        {
            len += 1;
        }
        len += m;
        let block: Vec<String> = lines[pos..pos + len]
            .iter()
            .map(|(_, l)| l.to_string())
            .collect();
        graphs.push(load_graph(&block.join("\n"))?);
        pos += len;
    }
    Ok(graphs)
}

pub fn write_family(graphs: &[Graph], header: Option<&str>) -> Result<String> {
    let mut out = String::new();
    if let Some(h) = header {
        writeln!(out, "{h}").unwrap();
    }
    writeln!(out, "{}", graphs.len()).unwrap();
    for g in graphs {
        out.push_str(&write_graph(g, None)?);
    }
    Ok(out)
}
