//! Gluing colourings across a bridge.
//!
//! Each side is coloured as its own graph with the far bridge endpoint kept as
//! a pendant vertex. Renaming one side's palette makes both sides agree on the
//! bridge colour, and any crossing pair then joins a path ending with the
//! bridge to a path starting with it.

use std::collections::{BTreeMap, VecDeque};

use super::{PcCertificate, Strategy};
use crate::bridges::{bridge_block_tree, find_bridges, BridgeBlockTree};
use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{norm, Edge, Graph};

/// Vertex maps of the two sides into a composite graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueEmbedding {
    pub n: usize,
    pub map_a: Vec<usize>,
    pub map_b: Vec<usize>,
}

/// Glue `a` and `b` along `bridge`, a bridge of the composite graph.
///
/// `a` must contain the bridge with the `b`-side endpoint as a pendant, and
/// vice versa; the images of the two sides meet exactly in the bridge endpoints.
pub fn glue_across_bridge(
    a: &PcCertificate,
    b: &PcCertificate,
    bridge: Edge,
    emb: &GlueEmbedding,
) -> Result<PcCertificate> {
    let (ga, gb) = (a.graph(), b.graph());
    if emb.map_a.len() != ga.n() || emb.map_b.len() != gb.n() {
        return Err(Error::BadEmbedding("vertex maps do not match the certificates"));
    }
    let mut hits = vec![0u8; emb.n];
    for (side, map) in [&emb.map_a, &emb.map_b].into_iter().enumerate() {
        for &v in map {
            if v >= emb.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: emb.n });
            }
            if hits[v] & (1 << side) != 0 {
                return Err(Error::BadEmbedding("vertex map is not injective"));
            }
            hits[v] |= 1 << side;
        }
    }
    if hits.iter().any(|&h| h == 0) {
        return Err(Error::BadEmbedding("composite vertex not covered"));
    }
    let (u, v) = norm(bridge.0, bridge.1);
    if u >= emb.n || v >= emb.n {
        return Err(Error::NotABridge(bridge));
    }
    let mut pairs: Vec<Edge> = Vec::with_capacity(ga.m() + gb.m());
    pairs.extend(ga.edges().iter().map(|&(x, y)| norm(emb.map_a[x], emb.map_a[y])));
    pairs.extend(gb.edges().iter().map(|&(x, y)| norm(emb.map_b[x], emb.map_b[y])));
    pairs.sort_unstable();
    pairs.dedup();
    let composite = Graph::from_edge_list(emb.n, &pairs)?;
    if !composite.has_edge(u, v) || !find_bridges(&composite).contains(&(u, v)) {
        return Err(Error::NotABridge(bridge));
    }
    let shared: Vec<usize> = (0..emb.n).filter(|&x| hits[x] == 3).collect();
    if shared != [u, v] {
        return Err(Error::BadEmbedding("sides must meet exactly in the bridge endpoints"));
    }

    let inv = |map: &[usize], x: usize| map.iter().position(|&y| y == x).expect("shared vertex");
    let (au, av) = (inv(&emb.map_a, u), inv(&emb.map_a, v));
    let (bu, bv) = (inv(&emb.map_b, u), inv(&emb.map_b, v));
    // one endpoint belongs to each side and is a pendant on the other
    let v_on_a_side = ga.degree(av) == 1 && gb.degree(bu) == 1;
    let u_on_a_side = ga.degree(au) == 1 && gb.degree(bv) == 1;
    if !v_on_a_side && !u_on_a_side {
        return Err(Error::BadEmbedding("bridge endpoints must be pendants on the opposite side"));
    }
    if (ga.m() + gb.m()) != composite.m() + 1 {
        return Err(Error::BadEmbedding("sides share edges other than the bridge"));
    }

    let ca = a.coloring().color_of(au, av).expect("bridge in a");
    let cb = b.coloring().color_of(bu, bv).expect("bridge in b");
    let k = a.k().max(b.k());
    let mut rename: Vec<Color> = (0..=k).collect();
    rename.swap(ca as usize, cb as usize);

    let mut colors: BTreeMap<Edge, Color> = BTreeMap::new();
    for (&(x, y), &c) in ga.edges().iter().zip(a.coloring().colors()) {
        colors.insert(norm(emb.map_a[x], emb.map_a[y]), c);
    }
    for (&(x, y), &c) in gb.edges().iter().zip(b.coloring().colors()) {
        colors.insert(norm(emb.map_b[x], emb.map_b[y]), rename[c as usize]);
    }
    let coloring = EdgeColoring::from_fn(composite, k, |e| colors[&e])?;
    PcCertificate::certify(coloring, Strategy::Glue, false)
}

/// A 2-edge-connected component with the far endpoints of its bridges attached as pendants.
#[derive(Debug, Clone)]
pub struct Piece {
    pub component: usize,
    pub graph: Graph,
    /// Local label to vertex of the whole graph. Component vertices come first.
    pub vertices: Vec<usize>,
    /// Number of component vertices; later labels are pendants.
    pub core: usize,
    /// Bridges as `(inside, pendant)` in local labels.
    pub pendants: Vec<(usize, usize)>,
}

impl Piece {
    fn build(g: &Graph, tree: &BridgeBlockTree, c: usize) -> Piece {
        let mut vertices = tree.components[c].clone();
        let core = vertices.len();
        let bridges = tree.incident_bridges(c);
        vertices.extend(bridges.iter().map(|&(_, out)| out));
        let local = |x: usize| vertices.iter().position(|&y| y == x).unwrap();
        let mut pairs: Vec<Edge> = Vec::new();
        for (i, &x) in vertices[..core].iter().enumerate() {
            for (j, &y) in vertices[..core].iter().enumerate().skip(i + 1) {
                if g.has_edge(x, y) {
                    pairs.push((i, j));
                }
            }
        }
        let pendants: Vec<(usize, usize)> = bridges.iter().map(|&(inside, out)| (local(inside), local(out))).collect();
        pairs.extend(pendants.iter().copied());
        let graph = Graph::from_edge_list(vertices.len(), &pairs).expect("piece edges are valid");
        Piece {
            component: c,
            graph,
            vertices,
            core,
            pendants,
        }
    }
}

/// Colour every piece of the bridge-block tree with `solve` and glue the
/// results breadth-first from the component of vertex 0. `None` if any piece
/// solver gives up.
pub fn color_by_bridge_blocks(
    g: &Graph,
    mut solve: impl FnMut(&Piece) -> Result<Option<PcCertificate>>,
) -> Result<Option<PcCertificate>> {
    let tree = bridge_block_tree(g)?;
    let root = Piece::build(g, &tree, 0);
    let Some(mut cur) = solve(&root)? else {
        return Ok(None);
    };
    if tree.len() == 1 {
        return Ok(Some(cur));
    }
    // composite label to global vertex
    let mut cur_verts = root.vertices.clone();
    let mut done = vec![false; tree.len()];
    done[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for &(inside, out) in &tree.incident_bridges(c) {
            let next = tree.component_of[out];
            if done[next] {
                continue;
            }
            done[next] = true;
            queue.push_back(next);
            let piece = Piece::build(g, &tree, next);
            let Some(cert) = solve(&piece)? else {
                return Ok(None);
            };
            let map_a: Vec<usize> = (0..cur_verts.len()).collect();
            let mut map_b = Vec::with_capacity(piece.vertices.len());
            for &x in &piece.vertices {
                match cur_verts.iter().position(|&y| y == x) {
                    Some(i) => map_b.push(i),
                    None => {
                        map_b.push(cur_verts.len());
                        cur_verts.push(x);
                    }
                }
            }
            let emb = GlueEmbedding {
                n: cur_verts.len(),
                map_a,
                map_b,
            };
            let pos = |x: usize| cur_verts.iter().position(|&y| y == x).unwrap();
            cur = glue_across_bridge(&cur, &cert, (pos(inside), pos(out)), &emb)?;
        }
    }
    // back to the labels of g
    let cg = cur.coloring();
    let mut colors: BTreeMap<Edge, Color> = BTreeMap::new();
    for (&(x, y), &c) in cg.graph().edges().iter().zip(cg.colors()) {
        colors.insert(norm(cur_verts[x], cur_verts[y]), c);
    }
    let coloring = EdgeColoring::from_fn(g.clone(), cur.k(), |e| colors[&e])?;
    PcCertificate::certify(coloring, Strategy::Glue, false).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructive::color_tree;

    fn tri_with_pendant() -> PcCertificate {
        // triangle 0,1,2 plus pendant 3 on vertex 2
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let c = EdgeColoring::from_fn(g, 2, |e| if e == (2, 3) || e == (0, 1) { 2 } else { 1 }).unwrap();
        PcCertificate::certify(c, Strategy::Extend, false).unwrap()
    }

    #[test]
    fn two_triangles_joined_by_a_bridge() {
        let a = tri_with_pendant();
        let b = tri_with_pendant();
        // composite: triangle 0,1,2 and triangle 3,4,5 with bridge 2-3
        let emb = GlueEmbedding {
            n: 6,
            map_a: vec![0, 1, 2, 3],
            map_b: vec![4, 5, 3, 2],
        };
        let cert = glue_across_bridge(&a, &b, (2, 3), &emb).unwrap();
        assert_eq!(cert.k(), 2);
        assert!(cert.verified());
        assert_eq!(cert.graph().m(), 7);
    }

    #[test]
    fn palette_max() {
        let a = tri_with_pendant();
        // star K_{1,3} centred at 0; its leaf 1 is the pendant standing for the triangle side
        let b = color_tree(&Graph::star(3)).unwrap();
        let emb = GlueEmbedding {
            n: 6,
            map_a: vec![0, 1, 2, 3],
            map_b: vec![3, 2, 4, 5],
        };
        let cert = glue_across_bridge(&a, &b, (2, 3), &emb).unwrap();
        assert_eq!(cert.k(), 3);
    }

    #[test]
    fn not_a_bridge() {
        let a = tri_with_pendant();
        let b = tri_with_pendant();
        let emb = GlueEmbedding {
            n: 6,
            map_a: vec![0, 1, 2, 3],
            map_b: vec![4, 5, 3, 2],
        };
        assert_eq!(glue_across_bridge(&a, &b, (0, 1), &emb), Err(Error::NotABridge((0, 1))));
    }

    #[test]
    fn bridge_blocks_of_a_path() {
        let g = Graph::path(5);
        let cert = color_by_bridge_blocks(&g, |p| color_tree(&p.graph).map(Some)).unwrap().unwrap();
        assert_eq!(cert.k(), 2);
        assert_eq!(cert.strategy(), Strategy::Glue);
    }
}
