//! Text formats: edge lists, colouring files and certificates.
//!
//! Edge list: a header line `n <count>` followed by one `u v` pair per line;
//! blank lines and lines starting with `#` are ignored.
//!
//! Colouring file (JSON): `{"n": .., "k": .., "edges": [[u, v], ..], "colors": [..]}`.
//! Certificates add `"metadata": {"k", "strategy", "strong", "verified"}`.

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, EdgeColoring};
use crate::constructive::{PcCertificate, Strategy};
use crate::error::{Error, Result};
use crate::graph::{norm, Edge, Graph};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line: usize, what: &str| Error::MalformedEdgeList(format!("line {}: {what}", line + 1));
    let (hl, header) = lines.next().ok_or_else(|| bad(0, "missing `n <count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count.parse::<usize>().map_err(|_| bad(hl, "vertex count is not a number"))?,
        _ => return Err(bad(hl, "expected `n <count>`")),
    };
    let mut pairs = Vec::new();
    for (i, line) in lines {
        let nums: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = nums[..] else {
            return Err(bad(i, "expected two vertex numbers"));
        };
        let u = u.parse::<usize>().map_err(|_| bad(i, "vertex is not a number"))?;
        let v = v.parse::<usize>().map_err(|_| bad(i, "vertex is not a number"))?;
        pairs.push((u, v));
    }
    Graph::from_edge_list(n, &pairs)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ColoringFile {
    n: usize,
    k: Color,
    edges: Vec<[usize; 2]>,
    colors: Vec<Color>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    metadata: Option<Metadata>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Metadata {
    k: Color,
    strategy: Strategy,
    strong: bool,
    verified: bool,
}

fn to_file(c: &EdgeColoring, metadata: Option<Metadata>) -> ColoringFile {
    ColoringFile {
        n: c.graph().n(),
        k: c.k(),
        edges: c.graph().edges().iter().map(|&(u, v)| [u, v]).collect(),
        colors: c.colors().to_vec(),
        metadata,
    }
}

fn parse_file(text: &str) -> Result<ColoringFile> {
    serde_json::from_str(text).map_err(|e| Error::InvalidColoring(e.to_string()))
}

/// Colours of `file` reordered to follow `g`'s edge list.
fn colors_for(g: &Graph, file: &ColoringFile) -> Result<Vec<Color>> {
    if file.n != g.n() {
        return Err(Error::ColoringGraphMismatch(format!("coloring has n = {}, graph has n = {}", file.n, g.n())));
    }
    if file.edges.len() != file.colors.len() {
        return Err(Error::ColoringGraphMismatch(format!(
            "{} edges but {} colors",
            file.edges.len(),
            file.colors.len()
        )));
    }
    if file.edges.len() != g.m() {
        return Err(Error::ColoringGraphMismatch(format!("coloring has {} edges, graph has {}", file.edges.len(), g.m())));
    }
    let mut colors = vec![0; g.m()];
    for (&[u, v], &c) in file.edges.iter().zip(&file.colors) {
        let i = g
            .edge_index(u.min(v), u.max(v))
            .filter(|_| u.max(v) < g.n())
            .ok_or_else(|| Error::ColoringGraphMismatch(format!("edge {u}-{v} is not in the graph")))?;
        if colors[i] != 0 {
            return Err(Error::ColoringGraphMismatch(format!("edge {u}-{v} listed twice")));
        }
        colors[i] = c;
    }
    Ok(colors)
}

pub fn coloring_to_json(c: &EdgeColoring) -> String {
    serde_json::to_string_pretty(&to_file(c, None)).expect("coloring serializes")
}

/// Read a colouring file for the given graph.
pub fn coloring_from_json(text: &str, g: &Graph) -> Result<EdgeColoring> {
    let file = parse_file(text)?;
    let colors = colors_for(g, &file)?;
    EdgeColoring::new(g.clone(), file.k, colors)
}

pub fn certificate_to_json(cert: &PcCertificate) -> String {
    let meta = Metadata {
        k: cert.k(),
        strategy: cert.strategy(),
        strong: cert.strong(),
        verified: cert.verified(),
    };
    serde_json::to_string_pretty(&to_file(cert.coloring(), Some(meta))).expect("certificate serializes")
}

/// Read a certificate; its claims are not re-checked here.
pub fn certificate_from_json(text: &str) -> Result<PcCertificate> {
    let file = parse_file(text)?;
    let meta = file.metadata.clone().ok_or(Error::BadCertificate("missing metadata block"))?;
    let pairs: Vec<Edge> = file.edges.iter().map(|&[u, v]| norm(u, v)).collect();
    let g = Graph::from_edge_list(file.n, &pairs)?;
    let colors = colors_for(&g, &file)?;
    let coloring = EdgeColoring::new(g, file.k.max(meta.k), colors)?;
    Ok(PcCertificate::from_claims(coloring, meta.k, meta.strategy, meta.strong, meta.verified))
}
