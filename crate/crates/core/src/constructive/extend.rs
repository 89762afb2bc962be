//! Adding vertices to a certified graph by searching colours for the new edges.

use super::{PcCertificate, Strategy};
use crate::coloring::{Checker, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{norm, Edge, Graph};

/// Graph with `extra` new vertices after the base, plus the new edges.
fn extended_graph(base: &Graph, extra: usize, new_edges: &[Edge]) -> Result<Graph> {
    let n = base.n() + extra;
    let mut pairs: Vec<Edge> = base.edges().to_vec();
    for &(u, v) in new_edges {
        let (u, v) = norm(u, v);
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if v < base.n() {
            return Err(Error::MalformedEdgeList(format!("edge {u}-{v} joins two old vertices")));
        }
        pairs.push((u, v));
    }
    Graph::from_edge_list(n, &pairs)
}

/// Try every colouring of the new edges with colours `1..=k` in lexicographic
/// order, keeping the base colours, and return the first one that verifies.
fn search_new_edges(base: &EdgeColoring, g: Graph, k: Color) -> Result<EdgeColoring> {
    let old: Vec<Option<Color>> = g
        .edges()
        .iter()
        .map(|&(u, v)| if v < base.graph().n() { base.color_of(u, v) } else { None })
        .collect();
    let free: Vec<usize> = (0..old.len()).filter(|&i| old[i].is_none()).collect();
    let mut colors: Vec<Color> = old.iter().map(|c| c.unwrap_or(1)).collect();
    let mut checker = Checker::new(&g, k);
    let total = (k as u64).pow(free.len() as u32);
    for mut code in 0..total {
        for &i in free.iter().rev() {
            colors[i] = (code % k as u64) as Color + 1;
            code /= k as u64;
        }
        checker.load(&colors);
        if checker.proper_connected() {
            return EdgeColoring::new(g, k, colors);
        }
    }
    Err(Error::VerificationExhausted)
}

/// Add one vertex, labelled `n`, joined to the base by `new_edges`, keeping 2 colours.
pub fn extend_vertex(cert: &PcCertificate, new_edges: &[Edge]) -> Result<PcCertificate> {
    let base = cert.graph();
    let d = new_edges.len();
    let g = extended_graph(base, 1, new_edges)?;
    if g.degree(base.n()) <= 1 {
        return Err(Error::DegreeTooLow(g.degree(base.n())));
    }
    if g.m() != base.m() + d {
        return Err(Error::MalformedEdgeList("repeated new edge".into()));
    }
    if cert.k() > 2 {
        return Err(Error::BadCertificate("vertex extension needs a base with at most 2 colours"));
    }
    let coloring = cert.coloring().with_palette(2)?;
    let out = search_new_edges(&coloring, g, 2)?;
    PcCertificate::certify(out, Strategy::Extend, false)
}

/// Add one or two vertices, labelled `n` and `n + 1`, to a strongly coloured base.
/// The new vertices may be joined to each other; each needs at least one edge
/// and together they need at least one edge into the base.
pub fn extend_two_vertices(cert: &PcCertificate, new_edges: &[Edge]) -> Result<PcCertificate> {
    if !cert.strong() {
        return Err(Error::RequiresStrongProperty);
    }
    let base = cert.graph();
    let n = base.n();
    let extra = if new_edges.iter().any(|&(u, v)| u.max(v) == n + 1) { 2 } else { 1 };
    let g = extended_graph(base, extra, new_edges)?;
    if g.m() != base.m() + new_edges.len() {
        return Err(Error::MalformedEdgeList("repeated new edge".into()));
    }
    for v in n..n + extra {
        if g.degree(v) == 0 {
            return Err(Error::IsolatedNewVertex(v));
        }
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let k = cert.k().max(2);
    let coloring = cert.coloring().with_palette(k)?;
    let out = search_new_edges(&coloring, g, k)?;
    PcCertificate::certify(out, Strategy::Extend, false)
}
