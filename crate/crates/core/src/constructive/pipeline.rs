//! Staged search for a verified 2-colouring, cheapest stage first.
//!
//! 1. spanning path coloured alternately;
//! 2. bridgeless maximum bipartite spanning subgraph `H`, coloured strongly;
//! 3. bridge-block tree of `H` with maximum degree at most 2, glued piecewise;
//! 4. a single degree-3 hub vertex in that tree, handled by [`substructure_s`];
//! 5. a seed subgraph grown one or two vertices at a time by extension.

use std::collections::BTreeMap;

use super::{
    color_by_bridge_blocks, color_hamilton_path, color_tree, extend_two_vertices, extend_vertex,
    strong_coloring_unguarded, substructure_s, PcCertificate, Piece, Strategy,
};
use crate::bridges::{bridge_block_tree, has_bridge, BridgeBlockTree};
use crate::coloring::{Color, EdgeColoring};
use crate::error::{guard, Error, Result};
use crate::graph::{iter_bits, norm, Edge, Graph, VertexSet};
use crate::hamilton::longest_path;
use crate::maxcut::{max_bipartite_spanning_subgraph, CutMode};

pub const PIPELINE_MAX_VERTICES: usize = 16;

/// Strong colourings need a longest-cycle search, which is limited to this block order.
fn strong_or_skip(g: &Graph) -> Result<Option<PcCertificate>> {
    match strong_coloring_unguarded(g) {
        Ok(cert) => Ok(Some(cert)),
        Err(Error::TooLarge { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// A verified 2-colouring of `g`, or `None` when every stage fails.
pub fn pc2_pipeline(g: &Graph) -> Result<Option<PcCertificate>> {
    guard("vertex count", g.n(), PIPELINE_MAX_VERTICES)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Ok(None);
    }
    if let Some(cert) = color_hamilton_path(g)? {
        return Ok(Some(cert));
    }
    let (h, _) = max_bipartite_spanning_subgraph(g, CutMode::LocalSearch)?;
    if h.is_connected() {
        if !has_bridge(&h) {
            if let Some(strong) = strong_or_skip(&h)? {
                return finish(g, &strong, Strategy::BipartiteBridgeless);
            }
        }
        let tree = bridge_block_tree(&h)?;
        if tree.max_node_degree() <= 2 {
            if let Some(cert) = color_by_bridge_blocks(&h, two_color_piece)? {
                if cert.k() <= 2 {
                    return finish(g, &cert, Strategy::Glue);
                }
            }
        }
        if let Some(cert) = hub_stage(g, &h, &tree)? {
            return Ok(Some(cert));
        }
    }
    closure_stage(g, &h)
}

fn finish(g: &Graph, cert: &PcCertificate, strategy: Strategy) -> Result<Option<PcCertificate>> {
    Ok(Some(cert.lift_to(g, strategy)?))
}

/// Piece solver using at most 2 colours: strong colouring of the component
/// absorbing up to two pendants, or a proper colouring of a star.
fn two_color_piece(piece: &Piece) -> Result<Option<PcCertificate>> {
    if piece.core == 1 {
        let cert = color_tree(&piece.graph)?;
        return Ok((cert.k() <= 2).then_some(cert));
    }
    if piece.pendants.len() > 2 {
        return Ok(None);
    }
    let core: Vec<usize> = (0..piece.core).collect();
    let Some(base) = strong_or_skip(&piece.graph.induced_subgraph(&core))? else {
        return Ok(None);
    };
    if base.k() > 2 {
        return Ok(None);
    }
    if piece.pendants.is_empty() {
        return Ok(Some(base));
    }
    extend_two_vertices(&base, &piece.pendants).map(Some)
}

/// Stage 4: one tree node of degree 3 that is a single vertex.
fn hub_stage(g: &Graph, h: &Graph, tree: &BridgeBlockTree) -> Result<Option<PcCertificate>> {
    if tree.max_node_degree() != 3 {
        return Ok(None);
    }
    let hubs: Vec<usize> = (0..tree.len()).filter(|&c| tree.node_degree(c) == 3).collect();
    if hubs.len() != 1 || tree.components[hubs[0]].len() != 1 {
        return Ok(None);
    }
    let hub = tree.components[hubs[0]][0];
    let rest = h.all_vertices() & !(1 << hub);
    let mut parts: Vec<Vec<usize>> = h.components_within(rest).into_iter().map(|c| iter_bits(c).collect()).collect();
    if parts.len() != 3 {
        return Ok(None);
    }
    // the branch joined to the hub by the most edges of g hosts the cycle
    parts.sort_by_key(|p| std::cmp::Reverse(p.iter().filter(|&&v| g.has_edge(hub, v)).count()));
    substructure_s(g, hub, [&parts[0], &parts[1], &parts[2]])
}

/// A certificate on vertices `verts` (local label `i` is `verts[i]`).
struct Grown {
    verts: Vec<usize>,
    cert: PcCertificate,
}

impl Grown {
    fn set(&self) -> VertexSet {
        self.verts.iter().fold(0, |a, &v| a | 1 << v)
    }

    fn local(&self, v: usize) -> usize {
        self.verts.iter().position(|&x| x == v).unwrap()
    }

    /// Add every vertex with at least two edges into the current set, lowest first.
    fn close(mut self, g: &Graph) -> Result<Option<Grown>> {
        loop {
            let set = self.set();
            if set == g.all_vertices() {
                return Ok(Some(self));
            }
            let Some(x) = iter_bits(g.all_vertices() & !set).find(|&x| (g.neighbors(x) & set).count_ones() >= 2) else {
                return Ok(None);
            };
            let n = self.verts.len();
            let edges: Vec<Edge> = iter_bits(g.neighbors(x) & set).map(|y| (self.local(y), n)).collect();
            self.cert = match extend_vertex(&self.cert, &edges) {
                Ok(c) => c,
                Err(Error::VerificationExhausted) => return Ok(None),
                Err(e) => return Err(e),
            };
            self.verts.push(x);
        }
    }

    /// Absorb `xs` (one or two outside vertices) with every edge of `g` they have into the set or each other.
    fn absorb(&self, g: &Graph, xs: &[usize]) -> Result<Option<Grown>> {
        let set = self.set();
        let n = self.verts.len();
        let mut edges = Vec::new();
        for (i, &x) in xs.iter().enumerate() {
            edges.extend(iter_bits(g.neighbors(x) & set).map(|y| (self.local(y), n + i)));
        }
        if xs.len() == 2 && g.has_edge(xs[0], xs[1]) {
            edges.push((n, n + 1));
        }
        if (0..xs.len()).any(|i| !edges.iter().any(|&(a, b)| a == n + i || b == n + i)) {
            return Ok(None);
        }
        match extend_two_vertices(&self.cert, &edges) {
            Ok(cert) => {
                let mut verts = self.verts.clone();
                verts.extend_from_slice(xs);
                Ok(Some(Grown { verts, cert }))
            }
            Err(Error::VerificationExhausted | Error::IsolatedNewVertex(_) | Error::Disconnected) => Ok(None),
            Err(e) => Err(e),
        }
    }

    fn into_certificate(self, g: &Graph) -> Result<PcCertificate> {
        let c = self.cert.coloring();
        let mut colors: BTreeMap<Edge, Color> = BTreeMap::new();
        for (&(a, b), &col) in c.graph().edges().iter().zip(c.colors()) {
            colors.insert(norm(self.verts[a], self.verts[b]), col);
        }
        let coloring = EdgeColoring::from_fn(g.clone(), 2, |e| colors.get(&e).copied().unwrap_or(1))?;
        PcCertificate::certify(coloring, Strategy::Pipeline, false)
    }
}

/// Stage 5: seeds are the 2-edge-connected pieces of `h` (largest first),
/// coloured strongly, then a longest path of `g`.
fn closure_stage(g: &Graph, h: &Graph) -> Result<Option<PcCertificate>> {
    let mut seeds: Vec<Vec<usize>> = Vec::new();
    if h.is_connected() {
        let tree = bridge_block_tree(h)?;
        seeds.extend(tree.components.iter().filter(|c| c.len() >= 3).cloned());
    } else {
        for comp in h.components() {
            let sub: Vec<usize> = iter_bits(comp).collect();
            if sub.len() >= 3 {
                let piece = h.induced_subgraph(&sub);
                let tree = bridge_block_tree(&piece)?;
                seeds.extend(
                    tree.components
                        .iter()
                        .filter(|c| c.len() >= 3)
                        .map(|c| c.iter().map(|&i| sub[i]).collect()),
                );
            }
        }
    }
    seeds.sort_by_key(|s| std::cmp::Reverse(s.len()));

    for seed in &seeds {
        let base = h.induced_subgraph(seed);
        let Some(cert) = strong_or_skip(&base)? else {
            continue;
        };
        if cert.k() > 2 {
            continue;
        }
        let grown = Grown {
            verts: seed.clone(),
            cert,
        };
        if let Some(done) = grow_from_strong(g, grown)? {
            return done.into_certificate(g).map(Some);
        }
    }

    let path = longest_path(g)?;
    if path.len() >= 2 {
        let pairs: Vec<Edge> = (0..path.len() - 1).map(|i| (i, i + 1)).collect();
        let p = Graph::from_edge_list(path.len(), &pairs)?;
        let coloring = EdgeColoring::from_fn(p, 2, |(a, _)| 1 + (a % 2) as Color)?;
        let grown = Grown {
            verts: path,
            cert: PcCertificate::certify(coloring, Strategy::Pipeline, false)?,
        };
        if let Some(done) = grown.close(g)? {
            return done.into_certificate(g).map(Some);
        }
    }
    Ok(None)
}

/// Close directly, else absorb one or two outside vertices first while the seed is still strong.
fn grow_from_strong(g: &Graph, grown: Grown) -> Result<Option<Grown>> {
    let set = grown.set();
    let outside = g.all_vertices() & !set;
    let attached: Vec<usize> = iter_bits(outside).filter(|&x| g.neighbors(x) & set != 0).collect();
    let plain = Grown {
        verts: grown.verts.clone(),
        cert: grown.cert.clone(),
    };
    if let Some(done) = plain.close(g)? {
        return Ok(Some(done));
    }
    for &x in &attached {
        if let Some(next) = grown.absorb(g, &[x])? {
            if let Some(done) = next.close(g)? {
                return Ok(Some(done));
            }
        }
    }
    for (i, &x) in attached.iter().enumerate() {
        for y in iter_bits(outside) {
            if y == x || (attached[..i].contains(&y)) {
                continue;
            }
            if let Some(next) = grown.absorb(g, &[x, y])? {
                if let Some(done) = next.close(g)? {
                    return Ok(Some(done));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_bridgeless_graph() {
        // K_{2,4} has no spanning path but is bipartite and bridgeless
        let cert = pc2_pipeline(&Graph::complete_bipartite(2, 4)).unwrap().unwrap();
        assert_eq!(cert.k(), 2);
        assert_eq!(cert.strategy(), Strategy::BipartiteBridgeless);
    }

    #[test]
    fn friendship_graph_fails() {
        assert_eq!(pc2_pipeline(&Graph::friendship(3)).unwrap(), None);
    }

    #[test]
    fn hamiltonian_graph_stage_one() {
        let cert = pc2_pipeline(&Graph::cycle(7)).unwrap().unwrap();
        assert_eq!(cert.strategy(), Strategy::HamiltonPath);
    }

    #[test]
    fn too_large() {
        assert!(matches!(pc2_pipeline(&Graph::cycle(17)), Err(Error::TooLarge { .. })));
    }
}
