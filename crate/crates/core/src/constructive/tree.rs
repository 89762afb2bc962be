use std::collections::VecDeque;

use super::{PcCertificate, Strategy};
use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{iter_bits, norm, Edge, Graph};
use crate::hamilton::hamilton_path;

/// Greedy proper edge colouring of the tree with edges `tree_edges` inside `g`,
/// breadth-first from `root`: child edges take the smallest colours other than
/// the parent edge's. Uses at most the tree's maximum degree.
fn proper_tree_colors(n: usize, tree_edges: &[Edge], root: usize) -> Vec<(Edge, Color)> {
    let mut adj = vec![0u64; n];
    for &(u, v) in tree_edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut parent_color = vec![0 as Color; n];
    let mut seen = 1u64 << root;
    let mut queue = VecDeque::from([root]);
    let mut out = Vec::with_capacity(tree_edges.len());
    while let Some(v) = queue.pop_front() {
        let mut next: Color = 1;
        for w in iter_bits(adj[v] & !seen) {
            if next == parent_color[v] {
                next += 1;
            }
            parent_color[w] = next;
            out.push((norm(v, w), next));
            next += 1;
            seen |= 1 << w;
            queue.push_back(w);
        }
    }
    out
}

/// Proper colouring of a tree with `Δ(T)` colours.
pub fn color_tree(t: &Graph) -> Result<PcCertificate> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 2 {
        return Err(Error::TooSmall("tree needs at least one edge"));
    }
    let k = t.max_degree() as Color;
    let assigned = proper_tree_colors(t.n(), t.edges(), 0);
    let coloring = EdgeColoring::from_fn(t.clone(), k, |e| {
        assigned.iter().find(|(f, _)| *f == e).map(|&(_, c)| c).unwrap_or(1)
    })?;
    PcCertificate::certify(coloring, Strategy::Tree, false)
}

/// Breadth-first spanning tree from vertex 0 coloured properly; other edges get colour 1.
pub fn color_spanning_tree(g: &Graph) -> Result<PcCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Err(Error::TooSmall("graph needs at least one edge"));
    }
    let mut tree = Vec::with_capacity(g.n() - 1);
    let mut seen = 1u64;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for w in iter_bits(g.neighbors(v) & !seen) {
            seen |= 1 << w;
            tree.push(norm(v, w));
            queue.push_back(w);
        }
    }
    let assigned = proper_tree_colors(g.n(), &tree, 0);
    let k = assigned.iter().map(|&(_, c)| c).max().unwrap_or(1);
    let coloring = EdgeColoring::from_fn(g.clone(), k, |e| {
        assigned.iter().find(|(f, _)| *f == e).map(|&(_, c)| c).unwrap_or(1)
    })?;
    PcCertificate::certify(coloring, Strategy::Tree, false)
}

/// Two colours alternating along a spanning path; every other edge gets colour 1.
pub fn color_hamilton_path(g: &Graph) -> Result<Option<PcCertificate>> {
    let Some(path) = hamilton_path(g)? else {
        return Ok(None);
    };
    let on_path: Vec<(Edge, Color)> = path
        .windows(2)
        .enumerate()
        .map(|(i, w)| (norm(w[0], w[1]), 1 + (i % 2) as Color))
        .collect();
    let coloring = EdgeColoring::from_fn(g.clone(), 2, |e| {
        on_path.iter().find(|(f, _)| *f == e).map(|&(_, c)| c).unwrap_or(1)
    })?;
    PcCertificate::certify(coloring, Strategy::HamiltonPath, false).map(Some)
}
