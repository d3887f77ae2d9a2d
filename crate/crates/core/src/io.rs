//! Text formats: the `p`/`e` edge list, graph6, and labeling files.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{EdgeLabeling, VertexLabeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses `p <n> <m>` followed by `m` lines `e <u> <v>` (0-based, `u < v`).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `p` header"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("p") {
        return Err(parse_err(hline, "expected `p <n> <m>` header"));
    }
    let n: usize = field(toks.next(), hline, "vertex count")?;
    let m: usize = field(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(parse_err(hline, "trailing tokens after header"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (ln, l) in lines {
        let mut toks = l.split_whitespace();
        if toks.next() != Some("e") {
            return Err(parse_err(ln, "expected `e <u> <v>`"));
        }
        let u: usize = field(toks.next(), ln, "endpoint")?;
        let v: usize = field(toks.next(), ln, "endpoint")?;
        if toks.next().is_some() {
            return Err(parse_err(ln, "trailing tokens after edge"));
        }
        if u >= v {
            return Err(parse_err(ln, format!("edge endpoints must satisfy u < v, got {u} {v}")));
        }
        if v >= n {
            return Err(parse_err(ln, format!("vertex {v} out of range for n = {n}")));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(ln, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

/// Parses one graph6 line (optional `>>graph6<<` header).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("invalid byte {b:#04x}")));
    }
    let (n, mut pos) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => (sextets(rest, 6)?, 8),
        [126, rest @ ..] => (sextets(rest, 3)?, 4),
        [b, ..] => ((b - 63) as usize, 1),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(Error::Graph6(format!(
            "expected {need} data bytes for n = {n}, found {}",
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                cur = bytes[pos] - 63;
                pos += 1;
            }
            if cur >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

fn sextets(bytes: &[u8], count: usize) -> Result<usize> {
    if bytes.len() < count {
        return Err(Error::Graph6("truncated size field".into()));
    }
    Ok(bytes[..count]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut cur = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            cur = cur << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(cur + 63);
                cur = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((cur << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// `p` header or comment means edge list; anything else is graph6.
pub fn sniff_format(text: &str) -> GraphFormat {
    match text.trim_start().as_bytes().first() {
        Some(b'p') | Some(b'#') => GraphFormat::EdgeList,
        _ => GraphFormat::Graph6,
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match sniff_format(text) {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Graph6 => write_graph6(g) + "\n",
    }
}

/// Contents of a labeling file: `v <index> <label>` or `e <u> <v> <label>` lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelingFile {
    Vertex(BTreeMap<usize, u32>),
    Edge(EdgeLabeling),
}

impl LabelingFile {
    /// Dense vertex labeling over `0..n`; every vertex must be present.
    pub fn into_vertex_labeling(self, n: usize) -> Result<VertexLabeling> {
        match self {
            LabelingFile::Vertex(map) => {
                if let Some(v) = (0..n).find(|v| !map.contains_key(v)) {
                    return Err(parse_err(0, format!("vertex {v} has no label")));
                }
                if let Some(&v) = map.keys().find(|&&v| v >= n) {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                VertexLabeling::new(map.into_values().collect())
            }
            LabelingFile::Edge(_) => Err(parse_err(0, "expected a vertex labeling")),
        }
    }
}

pub fn parse_labeling(text: &str) -> Result<LabelingFile> {
    let mut vertex = BTreeMap::new();
    let mut edge = Vec::new();
    for (ln, l) in content_lines(text) {
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("v") => {
                let v: usize = field(toks.next(), ln, "vertex")?;
                let label: u32 = field(toks.next(), ln, "label")?;
                if label == 0 {
                    return Err(parse_err(ln, "labels must be positive"));
                }
                if vertex.insert(v, label).is_some() {
                    return Err(parse_err(ln, format!("vertex {v} labeled twice")));
                }
            }
            Some("e") => {
                let u: usize = field(toks.next(), ln, "endpoint")?;
                let v: usize = field(toks.next(), ln, "endpoint")?;
                let label: u32 = field(toks.next(), ln, "label")?;
                if label == 0 {
                    return Err(parse_err(ln, "labels must be positive"));
                }
                edge.push(((u, v), label));
            }
            _ => return Err(parse_err(ln, "expected `v <index> <label>` or `e <u> <v> <label>`")),
        }
        if toks.next().is_some() {
            return Err(parse_err(ln, "trailing tokens"));
        }
        if !vertex.is_empty() && !edge.is_empty() {
            return Err(parse_err(ln, "mixed vertex and edge labels"));
        }
    }
    if edge.is_empty() {
        Ok(LabelingFile::Vertex(vertex))
    } else {
        Ok(LabelingFile::Edge(EdgeLabeling::new(edge)?))
    }
}

pub fn write_vertex_labeling(l: &VertexLabeling) -> String {
    let mut out = String::new();
    for (v, x) in l.labels().iter().enumerate() {
        let _ = writeln!(out, "v {v} {x}");
    }
    out
}

pub fn write_edge_labeling(l: &EdgeLabeling) -> String {
    let mut out = String::new();
    for ((u, v), x) in l.iter() {
        let _ = writeln!(out, "e {u} {v} {x}");
    }
    out
}
