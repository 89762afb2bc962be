//! Large bipartite spanning subgraphs (max-cut).
//!
//! The default mode is single-vertex local search from a greedy bipartition,
//! which already guarantees `2 d_H(v) >= d_G(v)` at every vertex. The exact
//! mode scans all bipartitions and is limited to `n <= 20`.

use crate::error::{guard, Result};
use crate::graph::{full_set, iter_bits, Bipartition, Edge, Graph, VertexSet};

pub const EXACT_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CutMode {
    #[default]
    LocalSearch,
    Exact,
}

fn cut_edges(g: &Graph, side_u: VertexSet) -> Vec<Edge> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(a, b)| (side_u >> a & 1) != (side_u >> b & 1))
        .collect()
}

fn cut_size(g: &Graph, side_u: VertexSet) -> usize {
    let side_v = g.all_vertices() & !side_u;
    iter_bits(side_u)
        .map(|v| (g.neighbors(v) & side_v).count_ones() as usize)
        .sum()
}

fn greedy_side(g: &Graph) -> VertexSet {
    let mut side_u = 0u64;
    let mut placed = 0u64;
    for v in 0..g.n() {
        let nbrs = g.neighbors(v) & placed;
        let in_u = (nbrs & side_u).count_ones();
        let in_v = (nbrs & !side_u).count_ones();
        // join the side holding fewer placed neighbours; ties go to U
        if in_u <= in_v {
            side_u |= 1 << v;
        }
        placed |= 1 << v;
    }
    side_u
}

/// Move the first improving vertex in ascending order until no move helps.
fn local_search(g: &Graph, mut side_u: VertexSet) -> VertexSet {
    loop {
        let mut moved = false;
        for v in 0..g.n() {
            let same = if side_u >> v & 1 == 1 {
                g.neighbors(v) & side_u
            } else {
                g.neighbors(v) & !side_u
            };
            let same = same.count_ones();
            let other = g.degree(v) as u32 - same;
            if same > other {
                side_u ^= 1 << v;
                moved = true;
                break;
            }
        }
        if !moved {
            return side_u;
        }
    }
}

fn exact_side(g: &Graph) -> VertexSet {
    let n = g.n();
    if n <= 1 {
        return full_set(n);
    }
    let mut best = (0usize, full_set(n));
    // vertex 0 stays in U; the complement gives the same cut
    for rest in 0..(1u64 << (n - 1)) {
        let side_u = 1 | rest << 1;
        let c = cut_size(g, side_u);
        if c > best.0 {
            best = (c, side_u);
        }
    }
    best.1
}

/// A bipartite spanning subgraph `H` with its bipartition.
pub fn max_bipartite_spanning_subgraph(g: &Graph, mode: CutMode) -> Result<(Graph, Bipartition)> {
    let side_u = match mode {
        CutMode::LocalSearch => local_search(g, greedy_side(g)),
        CutMode::Exact => {
            guard("vertex count", g.n(), EXACT_MAX_VERTICES)?;
            exact_side(g)
        }
    };
    let h = g.spanning_subgraph(&cut_edges(g, side_u));
    let (side_u, side_v) = (0..g.n()).partition(|&v| side_u >> v & 1 == 1);
    Ok((h, Bipartition { side_u, side_v }))
}

/// Whether some single vertex could switch sides and enlarge the cut.
pub fn has_improving_move(g: &Graph, bip: &Bipartition) -> bool {
    let side_u = bip.side_u_set();
    (0..g.n()).any(|v| {
        let mine = if side_u >> v & 1 == 1 {
            side_u
        } else {
            !side_u
        };
        2 * (g.neighbors(v) & mine).count_ones() as usize > g.degree(v)
    })
}
