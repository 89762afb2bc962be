//! Bridges, the bridge-block tree and biconnected blocks via low-link DFS.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{iter_bits, norm, set_of, Edge, Graph, VertexSet};

struct LowLink<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    bridges: Vec<Edge>,
    edge_stack: Vec<Edge>,
    blocks: Vec<Vec<Edge>>,
}

impl<'a> LowLink<'a> {
    fn run(g: &'a Graph) -> Self {
        let mut ll = LowLink {
            g,
            order: vec![usize::MAX; g.n()],
            low: vec![0; g.n()],
            time: 0,
            bridges: Vec::new(),
            edge_stack: Vec::new(),
            blocks: Vec::new(),
        };
        for s in 0..g.n() {
            if ll.order[s] == usize::MAX {
                ll.dfs(s, usize::MAX);
            }
        }
        ll.bridges.sort_unstable();
        ll
    }

    fn dfs(&mut self, v: usize, parent: usize) {
        self.order[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        for w in iter_bits(self.g.neighbors(v)) {
            if w == parent {
                continue;
            }
            if self.order[w] == usize::MAX {
                self.edge_stack.push(norm(v, w));
                self.dfs(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] > self.order[v] {
                    self.bridges.push(norm(v, w));
                }
                if self.low[w] >= self.order[v] {
                    let mut block = Vec::new();
                    while let Some(e) = self.edge_stack.pop() {
                        block.push(e);
                        if e == norm(v, w) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    self.blocks.push(block);
                }
            } else if self.order[w] < self.order[v] {
                self.edge_stack.push(norm(v, w));
                self.low[v] = self.low[v].min(self.order[w]);
            }
        }
    }
}

/// All cut-edges, sorted.
pub fn find_bridges(g: &Graph) -> Vec<Edge> {
    LowLink::run(g).bridges
}

pub fn has_bridge(g: &Graph) -> bool {
    !find_bridges(g).is_empty()
}

/// Edge sets of the biconnected blocks (maximal 2-connected subgraphs and bridges),
/// each sorted, ordered by least edge.
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<Edge>> {
    let mut blocks = LowLink::run(g).blocks;
    blocks.sort_unstable();
    blocks
}

/// Contraction of the 2-edge-connected components of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeBlockTree {
    /// Vertex lists of the components, each sorted, ordered by least vertex.
    pub components: Vec<Vec<usize>>,
    pub bridges: Vec<Edge>,
    /// Adjacency between component indices, each list sorted.
    pub tree_adj: Vec<Vec<usize>>,
    /// Component index of every vertex.
    pub component_of: Vec<usize>,
}

impl BridgeBlockTree {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_set(&self, c: usize) -> VertexSet {
        set_of(&self.components[c])
    }

    pub fn node_degree(&self, c: usize) -> usize {
        self.tree_adj[c].len()
    }

    pub fn max_node_degree(&self) -> usize {
        self.tree_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Components that are leaves of the tree (end-blocks).
    pub fn end_blocks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.tree_adj[c].len() == 1).collect()
    }

    /// Bridges incident to component `c`, oriented as `(inside, outside)`.
    pub fn incident_bridges(&self, c: usize) -> Vec<(usize, usize)> {
        self.bridges
            .iter()
            .filter_map(|&(a, b)| {
                if self.component_of[a] == c {
                    Some((a, b))
                } else if self.component_of[b] == c {
                    Some((b, a))
                } else {
                    None
                }
            })
            .collect()
    }
}

pub fn bridge_block_tree(g: &Graph) -> Result<BridgeBlockTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let bridges = find_bridges(g);
    let mut rows = g.rows().to_vec();
    for &(u, v) in &bridges {
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
    }
    let reduced = Graph::from_rows(rows);
    let comps = reduced.components();
    let mut component_of = vec![0; g.n()];
    for (i, &c) in comps.iter().enumerate() {
        for v in iter_bits(c) {
            component_of[v] = i;
        }
    }
    let mut tree_adj = vec![Vec::new(); comps.len()];
    for &(u, v) in &bridges {
        let (a, b) = (component_of[u], component_of[v]);
        tree_adj[a].push(b);
        tree_adj[b].push(a);
    }
    for adj in &mut tree_adj {
        adj.sort_unstable();
    }
    Ok(BridgeBlockTree {
        components: comps.iter().map(|&c| iter_bits(c).collect()).collect(),
        bridges,
        tree_adj,
        component_of,
    })
}
