//! Edge colorings and exact proper-path reachability.
//!
//! Every decision here enumerates proper *simple* paths by depth-first search
//! over `(vertex, colour of last edge, visited set)`. The product-state
//! breadth-first search over proper walks ([`Checker::walks_connect`]) is only
//! a necessary condition: a pair with no proper walk has no proper path, but
//! not conversely, so it is used to discard candidates and never to accept.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{guard, Error, Result};
use crate::graph::{iter_bits, Edge, Graph, VertexSet};

pub type Color = u8;

/// Order limit for path enumeration.
pub const CHECK_MAX_VERTICES: usize = 16;

/// A total assignment of colours `1..=k` to the edges of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    graph: Graph,
    k: Color,
    /// Parallel to `graph.edges()`.
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(graph: Graph, k: Color, colors: Vec<Color>) -> Result<EdgeColoring> {
        if k == 0 {
            return Err(Error::InvalidColoring("palette must have at least one colour".into()));
        }
        if colors.len() != graph.m() {
            return Err(Error::ColoringGraphMismatch(format!(
                "{} colours for {} edges",
                colors.len(),
                graph.m()
            )));
        }
        if let Some(bad) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::InvalidColoring(format!("colour {bad} outside 1..={k}")));
        }
        Ok(EdgeColoring { graph, k, colors })
    }

    /// Every edge gets colour 1.
    pub fn uniform(graph: Graph, k: Color) -> EdgeColoring {
        let colors = vec![1; graph.m()];
        EdgeColoring::new(graph, k.max(1), colors).expect("uniform colouring is valid")
    }

    pub fn from_fn(graph: Graph, k: Color, mut f: impl FnMut(Edge) -> Color) -> Result<EdgeColoring> {
        let colors = graph.edges().iter().map(|&e| f(e)).collect();
        EdgeColoring::new(graph, k, colors)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        self.graph.edge_index(u, v).map(|i| self.colors[i])
    }

    /// Largest colour actually used (0 for edgeless graphs).
    pub fn max_color_used(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Apply the palette map `c -> rename[c - 1]`.
    pub fn renamed(&self, rename: &[Color]) -> Result<EdgeColoring> {
        let k = rename.iter().copied().max().unwrap_or(1).max(self.k);
        let colors = self.colors.iter().map(|&c| rename[c as usize - 1]).collect();
        EdgeColoring::new(self.graph.clone(), k, colors)
    }

    pub fn with_palette(&self, k: Color) -> Result<EdgeColoring> {
        EdgeColoring::new(self.graph.clone(), k, self.colors.clone())
    }

    /// Colour the edges of a spanning supergraph: edges of `self` keep their
    /// colour, every other edge of `supergraph` gets `fill`.
    pub fn lift_to(&self, supergraph: &Graph, fill: Color) -> Result<EdgeColoring> {
        let colors = supergraph
            .edges()
            .iter()
            .map(|&(u, v)| self.color_of(u, v).unwrap_or(fill))
            .collect();
        EdgeColoring::new(supergraph.clone(), self.k.max(fill), colors)
    }
}

/// The `(start colour, end colour)` pairs realised by proper simple paths
/// between an ordered vertex pair.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathProfile {
    pub pairs: BTreeSet<(Color, Color)>,
}

impl PathProfile {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn reversed(&self) -> PathProfile {
        PathProfile {
            pairs: self.pairs.iter().map(|&(s, e)| (e, s)).collect(),
        }
    }

    /// Two witnesses with different start colours and different end colours.
    pub fn is_strong(&self) -> bool {
        self.pairs
            .iter()
            .any(|&(s1, e1)| self.pairs.iter().any(|&(s2, e2)| s1 != s2 && e1 != e2))
    }
}

fn check_order(g: &Graph) -> Result<()> {
    guard("vertex count", g.n(), CHECK_MAX_VERTICES)
}

fn check_connected(g: &Graph) -> Result<()> {
    check_order(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// True iff the consecutive edge colours of the simple path `path` differ.
pub fn is_proper_path(c: &EdgeColoring, path: &[usize]) -> Result<bool> {
    let g = c.graph();
    if path.len() < 2 {
        return Err(Error::NotAPath);
    }
    let mut seen = 0u64;
    for &v in path {
        if v >= g.n() || seen >> v & 1 == 1 {
            return Err(Error::NotAPath);
        }
        seen |= 1 << v;
    }
    let mut colors = Vec::with_capacity(path.len() - 1);
    for w in path.windows(2) {
        colors.push(c.color_of(w[0], w[1]).ok_or(Error::NotAPath)?);
    }
    Ok(colors.windows(2).all(|w| w[0] != w[1]))
}

/// Exact profile of proper simple paths from `u` to `v`.
pub fn path_profile(c: &EdgeColoring, u: usize, v: usize) -> Result<PathProfile> {
    let g = c.graph();
    check_order(g)?;
    for w in [u, v] {
        if w >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let mut checker = Checker::new(g, c.k());
    checker.load(c.colors());
    Ok(checker.profile(u, v))
}

pub fn is_proper_connected(c: &EdgeColoring) -> Result<bool> {
    Ok(first_unconnected_pair(c)?.is_none())
}

/// The lexicographically first pair `(u, v)`, `u < v`, without a proper path.
pub fn first_unconnected_pair(c: &EdgeColoring) -> Result<Option<(usize, usize)>> {
    check_connected(c.graph())?;
    let mut checker = Checker::new(c.graph(), c.k());
    checker.load(c.colors());
    Ok(checker.first_unconnected_pair())
}

pub fn has_strong_property(c: &EdgeColoring) -> Result<bool> {
    Ok(first_weak_pair(c)?.is_none())
}

/// The lexicographically first pair lacking two proper paths with distinct
/// start colours and distinct end colours.
pub fn first_weak_pair(c: &EdgeColoring) -> Result<Option<(usize, usize)>> {
    check_connected(c.graph())?;
    let mut checker = Checker::new(c.graph(), c.k());
    checker.load(c.colors());
    Ok(checker.first_weak_pair())
}

/// Proper-walk reachability for all pairs. Necessary for proper connectivity.
pub fn proper_walks_connect(c: &EdgeColoring) -> Result<bool> {
    check_connected(c.graph())?;
    let mut checker = Checker::new(c.graph(), c.k());
    checker.load(c.colors());
    Ok(checker.walks_connect())
}

/// Reusable evaluator for many colourings of one graph.
///
/// Colourings are loaded as slices parallel to the graph's edge list.
#[derive(Clone)]
pub struct Checker {
    n: usize,
    k: usize,
    adj: Vec<VertexSet>,
    edges: Vec<Edge>,
    /// `by_color[v * (k + 1) + c]`: neighbours of `v` across edges of colour `c`.
    by_color: Vec<VertexSet>,
    /// `color_at[u * n + v]`, 0 when not adjacent.
    color_at: Vec<Color>,
    pairs: Vec<Vec<(Color, Color)>>,
}

impl Checker {
    pub fn new(g: &Graph, k: Color) -> Checker {
        let n = g.n();
        let k = k as usize;
        Checker {
            n,
            k,
            adj: g.rows().to_vec(),
            edges: g.edges().to_vec(),
            by_color: vec![0; n * (k + 1)],
            color_at: vec![0; n * n],
            pairs: vec![Vec::new(); n],
        }
    }

    pub fn load(&mut self, colors: &[Color]) {
        debug_assert_eq!(colors.len(), self.edges.len());
        self.by_color.iter_mut().for_each(|x| *x = 0);
        let k1 = self.k + 1;
        for (&(u, v), &c) in self.edges.iter().zip(colors) {
            let c = c as usize;
            debug_assert!(c >= 1 && c <= self.k);
            self.by_color[u * k1 + c] |= 1 << v;
            self.by_color[v * k1 + c] |= 1 << u;
            self.color_at[u * self.n + v] = c as Color;
            self.color_at[v * self.n + u] = c as Color;
        }
    }

    #[inline]
    fn same_color_nbrs(&self, v: usize, c: Color) -> VertexSet {
        self.by_color[v * (self.k + 1) + c as usize]
    }

    #[inline]
    fn color(&self, u: usize, v: usize) -> Color {
        self.color_at[u * self.n + v]
    }

    /// Depth-first search over proper simple paths; returns true once `goal ⊆ reached`.
    fn reach(&self, x: usize, last: Color, visited: VertexSet, reached: &mut VertexSet, goal: VertexSet) -> bool {
        let next = self.adj[x] & !visited & !self.same_color_nbrs(x, last);
        *reached |= next;
        if *reached & goal == goal {
            return true;
        }
        for y in iter_bits(next) {
            if self.reach(y, self.color(x, y), visited | 1 << y, reached, goal) {
                return true;
            }
        }
        false
    }

    /// Vertices joined to `s` by a proper path, stopping early once `goal` is covered.
    fn reach_from(&self, s: usize, goal: VertexSet) -> VertexSet {
        let mut reached = 0;
        if goal == 0 {
            return 0;
        }
        // colour 0 is never used, so the first step is unrestricted
        self.reach(s, 0, 1 << s, &mut reached, goal);
        reached
    }

    pub fn first_unconnected_pair(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            let goal = crate::graph::full_set(self.n) & !crate::graph::full_set(u + 1);
            let got = self.reach_from(u, goal);
            let missing = goal & !got;
            if missing != 0 {
                return Some((u, missing.trailing_zeros() as usize));
            }
        }
        None
    }

    pub fn proper_connected(&self) -> bool {
        self.first_unconnected_pair().is_none()
    }

    /// Proper-walk reachability from every vertex (product-state search).
    pub fn walks_connect(&self) -> bool {
        let k1 = self.k + 1;
        let all = crate::graph::full_set(self.n);
        let mut vis = vec![0u64; k1];
        let mut frontier = vec![0u64; k1];
        let mut next = vec![0u64; k1];
        // walks are reversible, so checking each source against later vertices suffices
        for s in 0..self.n {
            let goal = all & !crate::graph::full_set(s + 1);
            if goal == 0 {
                break;
            }
            for c in 1..k1 {
                vis[c] = self.by_color[s * k1 + c];
                frontier[c] = vis[c];
            }
            loop {
                let reached = vis[1..].iter().fold(0, |a, &b| a | b);
                if reached & goal == goal {
                    break;
                }
                next.iter_mut().for_each(|x| *x = 0);
                let mut grew = false;
                for c in 1..k1 {
                    for x in iter_bits(frontier[c]) {
                        for c2 in 1..k1 {
                            if c2 == c {
                                continue;
                            }
                            let add = self.by_color[x * k1 + c2] & !vis[c2];
                            if add != 0 {
                                vis[c2] |= add;
                                next[c2] |= add;
                                grew = true;
                            }
                        }
                    }
                }
                if !grew {
                    return false;
                }
                std::mem::swap(&mut frontier, &mut next);
            }
        }
        true
    }

    fn profile_dfs(&self, x: usize, last: Color, start: Color, visited: VertexSet, target: usize, out: &mut BTreeSet<(Color, Color)>) {
        let next = self.adj[x] & !visited & !self.same_color_nbrs(x, last);
        for y in iter_bits(next) {
            let c = self.color(x, y);
            let s = if start == 0 { c } else { start };
            if y == target {
                out.insert((s, c));
            } else {
                self.profile_dfs(y, c, s, visited | 1 << y, target, out);
            }
        }
    }

    pub fn profile(&self, u: usize, v: usize) -> PathProfile {
        let mut pairs = BTreeSet::new();
        self.profile_dfs(u, 0, 0, 1 << u, v, &mut pairs);
        PathProfile { pairs }
    }

    fn strong_dfs(&mut self, x: usize, last: Color, start: Color, visited: VertexSet, goal: VertexSet, satisfied: &mut VertexSet) -> bool {
        let next = self.adj[x] & !visited & !self.same_color_nbrs(x, last);
        for y in iter_bits(next) {
            let c = self.color(x, y);
            let s = if start == 0 { c } else { start };
            if goal >> y & 1 == 1 && *satisfied >> y & 1 == 0 {
                let seen = &mut self.pairs[y];
                if !seen.contains(&(s, c)) {
                    if seen.iter().any(|&(s2, e2)| s2 != s && e2 != c) {
                        *satisfied |= 1 << y;
                        if *satisfied & goal == goal {
                            return true;
                        }
                    }
                    seen.push((s, c));
                }
            }
            if self.strong_dfs(y, c, s, visited | 1 << y, goal, satisfied) {
                return true;
            }
        }
        false
    }

    pub fn first_weak_pair(&mut self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            let goal = crate::graph::full_set(self.n) & !crate::graph::full_set(u + 1);
            if goal == 0 {
                break;
            }
            self.pairs.iter_mut().for_each(Vec::clear);
            let mut satisfied = 0;
            self.strong_dfs(u, 0, 0, 1 << u, goal, &mut satisfied);
            let missing = goal & !satisfied;
            if missing != 0 {
                return Some((u, missing.trailing_zeros() as usize));
            }
        }
        None
    }

    pub fn strong(&mut self) -> bool {
        self.first_weak_pair().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_alternating() -> EdgeColoring {
        // C4 edges sorted: (0,1),(0,3),(1,2),(2,3); alternate around 0-1-2-3-0
        EdgeColoring::from_fn(Graph::cycle(4), 2, |e| match e {
            (0, 1) | (2, 3) => 1,
            _ => 2,
        })
        .unwrap()
    }

    #[test]
    fn proper_path_examples() {
        let p3 = Graph::path(3);
        let good = EdgeColoring::new(p3.clone(), 2, vec![1, 2]).unwrap();
        let bad = EdgeColoring::new(p3, 2, vec![1, 1]).unwrap();
        assert!(is_proper_path(&good, &[0, 1, 2]).unwrap());
        assert!(!is_proper_path(&bad, &[0, 1, 2]).unwrap());
        assert!(is_proper_path(&bad, &[1, 2]).unwrap());
        assert_eq!(is_proper_path(&bad, &[0, 2]), Err(Error::NotAPath));
        assert_eq!(is_proper_path(&bad, &[0, 1, 0]), Err(Error::NotAPath));
    }

    #[test]
    fn profile_examples() {
        let p3 = EdgeColoring::new(Graph::path(3), 2, vec![1, 2]).unwrap();
        let prof = path_profile(&p3, 0, 2).unwrap();
        assert_eq!(prof.pairs, BTreeSet::from([(1, 2)]));
        // adjacent pair on alternating C4: direct edge (1,1) and the long way (2,2)
        let c4 = c4_alternating();
        let prof = path_profile(&c4, 0, 1).unwrap();
        assert_eq!(prof.pairs, BTreeSet::from([(1, 1), (2, 2)]));
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let c = EdgeColoring::uniform(two, 1);
        assert!(path_profile(&c, 0, 3).unwrap().is_empty());
        assert_eq!(path_profile(&c, 1, 1), Err(Error::SameVertex(1)));
    }

    #[test]
    fn proper_connected_examples() {
        for n in 2..=7 {
            let c = EdgeColoring::uniform(Graph::complete(n), 1);
            assert!(is_proper_connected(&c).unwrap());
        }
        let p3 = EdgeColoring::new(Graph::path(3), 2, vec![1, 1]).unwrap();
        assert!(!is_proper_connected(&p3).unwrap());
        assert_eq!(first_unconnected_pair(&p3).unwrap(), Some((0, 2)));
        assert!(is_proper_connected(&c4_alternating()).unwrap());
        let two = EdgeColoring::uniform(Graph::empty(2), 1);
        assert_eq!(is_proper_connected(&two), Err(Error::Disconnected));
    }

    #[test]
    fn strong_examples() {
        let k2 = EdgeColoring::uniform(Graph::complete(2), 1);
        assert!(!has_strong_property(&k2).unwrap());
        assert!(has_strong_property(&c4_alternating()).unwrap());
        let k3 = EdgeColoring::uniform(Graph::complete(3), 2);
        assert!(!has_strong_property(&k3).unwrap());
    }

    #[test]
    fn walk_filter_is_weaker() {
        // P3 with equal colours: no proper walk between the ends either
        let p3 = EdgeColoring::new(Graph::path(3), 2, vec![1, 1]).unwrap();
        assert!(!proper_walks_connect(&p3).unwrap());
        // two pendants 0, 2 on vertex 1 with equal colours, plus a triangle 1-3-4:
        // a walk can detour around the triangle, a path cannot revisit 1
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (1, 3), (3, 4), (1, 4)]).unwrap();
        let c = EdgeColoring::from_fn(g, 2, |e| match e {
            (1, 3) | (1, 4) => 2,
            _ => 1,
        })
        .unwrap();
        assert!(proper_walks_connect(&c).unwrap());
        assert!(!is_proper_connected(&c).unwrap());
        assert_eq!(first_unconnected_pair(&c).unwrap(), Some((0, 2)));
    }

    #[test]
    fn invalid_colorings() {
        assert!(EdgeColoring::new(Graph::path(3), 2, vec![1]).is_err());
        assert!(EdgeColoring::new(Graph::path(3), 2, vec![1, 3]).is_err());
        assert!(EdgeColoring::new(Graph::path(3), 0, vec![]).is_err());
    }
}
