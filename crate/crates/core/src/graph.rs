//! Immutable simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is a row of bits per vertex, so edge tests and neighbourhood
//! intersections are single word operations. The sorted edge list is kept
//! alongside and defines the edge indexing used by colorings.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported order; matches the short graph6 form.
pub const MAX_VERTICES: usize = 62;

/// A set of vertices as a bit mask.
pub type VertexSet = u64;

/// An undirected edge `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

/// Iterate over the set bits of `mask`, lowest first.
#[inline]
pub fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub fn full_set(n: usize) -> VertexSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | (1u64 << v))
}

#[inline]
pub(crate) fn norm(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<Edge>,
}

/// Per-vertex degrees together with the minimum and maximum degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
}

/// A 2-coloring of the vertices certifying bipartiteness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side_u: Vec<usize>,
    pub side_v: Vec<usize>,
}

impl Bipartition {
    pub fn side_u_set(&self) -> VertexSet {
        set_of(&self.side_u)
    }

    pub fn side_v_set(&self) -> VertexSet {
        set_of(&self.side_v)
    }

    /// Whether both sides partition `0..g.n()` and every edge crosses.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let u = self.side_u_set();
        let v = self.side_v_set();
        u & v == 0
            && u | v == full_set(g.n())
            && self.side_u.len() + self.side_v.len() == g.n()
            && g.edges().iter().all(|&(a, b)| {
                let (ia, ib) = (u >> a & 1 == 1, u >> b & 1 == 1);
                ia != ib
            })
    }
}

impl Graph {
    /// Build a graph from vertex pairs. Duplicates and reversed pairs collapse.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        crate::error::guard("vertex count", n, MAX_VERTICES)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_rows(adj))
    }

    /// Build from symmetric, irreflexive adjacency rows. Callers guarantee the invariants.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        let mut edges = Vec::new();
        for u in 0..n {
            debug_assert_eq!(adj[u] >> u & 1, 0);
            for v in iter_bits(adj[u] >> (u + 1)) {
                let v = v + u + 1;
                debug_assert_eq!(adj[v] >> u & 1, 1);
                edges.push((u, v));
            }
        }
        Graph { n, adj, edges }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_rows(vec![0; n])
    }

    pub fn complete(n: usize) -> Graph {
        let all = full_set(n);
        Graph::from_rows((0..n).map(|v| all & !(1 << v)).collect())
    }

    /// Path on `n` vertices, `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &pairs).expect("valid path")
    }

    /// Cycle on `n >= 3` vertices, `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        pairs.push((n - 1, 0));
        Graph::from_edge_list(n, &pairs).expect("valid cycle")
    }

    /// Star `K_{1,m}` with centre 0.
    pub fn star(m: usize) -> Graph {
        let pairs: Vec<_> = (1..=m).map(|i| (0, i)).collect();
        Graph::from_edge_list(m + 1, &pairs).expect("valid star")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut pairs = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                pairs.push((u, v));
            }
        }
        Graph::from_edge_list(a + b, &pairs).expect("valid complete bipartite graph")
    }

    /// `k` triangles sharing the hub vertex 0.
    pub fn friendship(k: usize) -> Graph {
        let mut pairs = Vec::new();
        for i in 0..k {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            pairs.extend([(0, a), (0, b), (a, b)]);
        }
        Graph::from_edge_list(2 * k + 1, &pairs).expect("valid friendship graph")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn all_vertices(&self) -> VertexSet {
        full_set(self.n)
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&norm(u, v)).ok()
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let min = degrees.iter().copied().min().unwrap_or(0);
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeStats { degrees, min, max }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in iter_bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of `G[within]`, each as a vertex mask, ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reach_within(v, within);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.all_vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reach_within(0, self.all_vertices()) == self.all_vertices()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Vertex connectivity by exhaustive minimum vertex cut. Exponential in `n`.
    ///
    /// Complete graphs get `n - 1`; disconnected graphs get 0.
    pub fn connectivity(&self) -> usize {
        let n = self.n;
        if n <= 1 || !self.is_connected() {
            return 0;
        }
        if self.is_complete() {
            return n - 1;
        }
        let all = self.all_vertices();
        for size in 1..=n - 2 {
            let mut found = false;
            for_each_subset_of_size(n, size, |cut| {
                if found {
                    return;
                }
                let rest = all & !cut;
                let v = rest.trailing_zeros() as usize;
                if self.reach_within(v, rest) != rest {
                    found = true;
                }
            });
            if found {
                return size;
            }
        }
        n - 1
    }

    /// Edges with one end in `x` and the other in `y`.
    pub fn edges_between(&self, x: VertexSet, y: VertexSet) -> Result<Vec<Edge>> {
        if x & y != 0 {
            return Err(Error::OverlappingSets);
        }
        Ok(self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| {
                let (u, v) = (1u64 << u, 1u64 << v);
                (x & u != 0 && y & v != 0) || (x & v != 0 && y & u != 0)
            })
            .collect())
    }

    /// `d(X)`: number of edges leaving `x`.
    pub fn boundary_size(&self, x: VertexSet) -> usize {
        iter_bits(x)
            .map(|v| (self.adj[v] & !x).count_ones() as usize)
            .sum()
    }

    /// Proper vertex 2-coloring found by breadth-first search, if one exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in iter_bits(self.adj[v]) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let (side_u, side_v) = (0..self.n).partition(|&v| side[v] == 0);
        Some(Bipartition { side_u, side_v })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Induced subgraph on `vertices` (in the given order); vertex `i` of the
    /// result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let rows = vertices
            .iter()
            .map(|&v| {
                iter_bits(self.adj[v])
                    .filter(|&w| pos[w] != usize::MAX)
                    .fold(0u64, |acc, w| acc | 1 << pos[w])
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Spanning subgraph keeping only `edges`, which must be edges of `self`.
    pub fn spanning_subgraph(&self, edges: &[Edge]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for &(u, v) in edges {
            debug_assert!(self.has_edge(u, v));
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Graph::from_rows(adj)
    }

    /// Image under the vertex map `perm`, where `perm[v]` is the new label of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            let (a, b) = (perm[u], perm[v]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Graph::from_rows(adj)
    }

    /// Append one vertex adjacent to `nbrs`.
    pub fn with_new_vertex(&self, nbrs: VertexSet) -> Graph {
        debug_assert!(nbrs & !self.all_vertices() == 0);
        let v = self.n;
        let mut adj = self.adj.clone();
        for w in iter_bits(nbrs) {
            adj[w] |= 1 << v;
        }
        adj.push(nbrs);
        Graph::from_rows(adj)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph::from_rows(adj)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(u != v);
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Graph::from_rows(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Call `f` with every `size`-subset of `0..n` as a bit mask.
pub fn for_each_subset_of_size(n: usize, size: usize, mut f: impl FnMut(VertexSet)) {
    if size > n {
        return;
    }
    if size == 0 {
        f(0);
        return;
    }
    // Gosper's hack
    let mut s: u64 = (1u64 << size) - 1;
    let limit = 1u64 << n;
    while s < limit {
        f(s);
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_normalizes() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.n(), 4);
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(Error::LoopEdge(0))
        );
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn degree_stats_examples() {
        let k4 = Graph::complete(4).degree_stats();
        assert_eq!(k4.degrees, vec![3; 4]);
        assert_eq!((k4.min, k4.max), (3, 3));
        let star = Graph::star(3).degree_stats();
        assert_eq!(star.degrees, vec![3, 1, 1, 1]);
        assert_eq!((star.min, star.max), (1, 3));
        let p4 = Graph::path(4).degree_stats();
        assert_eq!((p4.min, p4.max), (1, 2));
        assert_eq!(p4.degrees.iter().sum::<usize>(), 2 * 3);
    }

    #[test]
    fn connectivity_examples() {
        let c4 = Graph::cycle(4);
        assert!(c4.is_connected());
        assert_eq!(c4.connectivity(), 2);
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.connectivity(), 0);
        let k5 = Graph::complete(5);
        assert!(k5.is_complete());
        assert_eq!(k5.connectivity(), 4);
        assert_eq!(Graph::friendship(3).connectivity(), 1);
        assert_eq!(Graph::complete_bipartite(3, 4).connectivity(), 3);
    }

    #[test]
    fn edges_between_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.edges_between(0b0001, 0b1110).unwrap().len(), 3);
        let c4 = Graph::cycle(4);
        assert_eq!(c4.edges_between(0b0101, 0b1010).unwrap().len(), 4);
        assert_eq!(c4.boundary_size(0b0101), 4);
        assert_eq!(k4.edges_between(1, 1), Err(Error::OverlappingSets));
    }

    #[test]
    fn bipartition_examples() {
        let b = Graph::cycle(4).bipartition().unwrap();
        assert_eq!(b.side_u, vec![0, 2]);
        assert_eq!(b.side_v, vec![1, 3]);
        assert!(Graph::complete(3).bipartition().is_none());
        let b6 = Graph::cycle(6).bipartition().unwrap();
        assert_eq!((b6.side_u.len(), b6.side_v.len()), (3, 3));
        assert!(b6.is_valid_for(&Graph::cycle(6)));
    }

    #[test]
    fn subset_enumeration_counts() {
        let mut count = 0;
        for_each_subset_of_size(6, 3, |s| {
            assert_eq!(s.count_ones(), 3);
            count += 1;
        });
        assert_eq!(count, 20);
    }

    #[test]
    fn induced_and_relabel() {
        let c5 = Graph::cycle(5);
        let p = c5.induced_subgraph(&[0, 1, 2]);
        assert_eq!(p, Graph::path(3));
        let r = c5.relabel(&[4, 3, 2, 1, 0]);
        assert_eq!(r, c5);
        let g = Graph::path(3).with_new_vertex(0b101);
        assert_eq!(g, Graph::cycle(4));
    }
}
