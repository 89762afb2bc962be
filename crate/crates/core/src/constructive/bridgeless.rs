//! Strong colourings of bridgeless graphs.
//!
//! A bridgeless graph is a tree of 2-connected blocks glued at cut vertices.
//! The strong property survives such gluing and survives adding edges, so each
//! block is coloured on a sparse spanning skeleton (a cycle plus ears) and
//! every other edge gets colour 1. The skeleton is coloured ear by ear with
//! backtracking; a full exhaustive pass over the skeleton is the fallback.

use std::collections::{BTreeMap, VecDeque};

use super::{PcCertificate, Strategy};
use crate::bridges::{biconnected_blocks, has_bridge};
use crate::coloring::{Checker, Color, EdgeColoring};
use crate::error::{guard, Error, Result};
use crate::graph::{iter_bits, norm, Edge, Graph, VertexSet};
use crate::hamilton::longest_cycle_where;
use crate::search::{search_colorings, SearchOutcome};

pub const BRIDGELESS_MAX_VERTICES: usize = 10;

/// Checks spent in the ear-by-ear phase before the exhaustive fallback.
const EAR_SEARCH_CHECKS: usize = 20_000;

/// Strong colouring with 2 colours for bipartite graphs and at most 3 otherwise.
pub fn strong_coloring_bridgeless(g: &Graph) -> Result<PcCertificate> {
    guard("vertex count", g.n(), BRIDGELESS_MAX_VERTICES)?;
    strong_coloring_unguarded(g)
}

pub(crate) fn strong_coloring_unguarded(g: &Graph) -> Result<PcCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 3 {
        return Err(Error::TooSmall("bridgeless graph needs at least 3 vertices"));
    }
    if has_bridge(g) {
        let bridge = crate::bridges::find_bridges(g)[0];
        return Err(Error::HasBridge(bridge));
    }
    let mut assigned: BTreeMap<Edge, Color> = BTreeMap::new();
    let mut k: Color = 2;
    for block in biconnected_blocks(g) {
        let (block_k, colors) = color_block(&block)?;
        k = k.max(block_k);
        assigned.extend(colors);
    }
    let strategy = if g.is_bipartite() {
        Strategy::BipartiteBridgeless
    } else {
        Strategy::Bridgeless3
    };
    let coloring = EdgeColoring::from_fn(g.clone(), k, |e| assigned.get(&e).copied().unwrap_or(1))?;
    PcCertificate::certify_strong(coloring, strategy)
}

/// Colour one 2-connected block given by its edges; returns colours for skeleton edges only.
fn color_block(block: &[Edge]) -> Result<(Color, Vec<(Edge, Color)>)> {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let local = |v: usize| verts.binary_search(&v).unwrap();
    let pairs: Vec<Edge> = block.iter().map(|&(u, v)| (local(u), local(v))).collect();
    let h = Graph::from_edge_list(verts.len(), &pairs)?;
    let bipartite = h.is_bipartite();

    let mut tries: Vec<Color> = vec![2];
    if !bipartite {
        tries.push(3);
    }
    for k in tries {
        let cycle = if k == 2 {
            longest_cycle_where(&h, |len| len % 2 == 0)?
        } else {
            longest_cycle_where(&h, |_| true)?
        };
        let Some(cycle) = cycle else { continue };
        let skeleton = Skeleton::build(&h, &cycle);
        if let Some(colors) = skeleton.color(k) {
            let out = colors
                .into_iter()
                .map(|((a, b), c)| (norm(verts[a], verts[b]), c))
                .collect();
            return Ok((k, out));
        }
    }
    Err(Error::VerificationExhausted)
}

/// Cycle followed by open ears, relabelled in discovery order so that every
/// prefix of ears spans vertices `0..n_i`.
struct Skeleton {
    /// `ears[i]` lists the ear's edges in path order, in discovery labels.
    ears: Vec<Vec<Edge>>,
    /// Vertex count after each ear.
    sizes: Vec<usize>,
    /// Discovery label to block label.
    order: Vec<usize>,
}

impl Skeleton {
    fn build(h: &Graph, cycle: &[usize]) -> Skeleton {
        let n = h.n();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut covered: VertexSet = 0;
        let visit = |v: usize, label: &mut Vec<usize>, order: &mut Vec<usize>| {
            label[v] = order.len();
            order.push(v);
        };
        for &v in cycle {
            visit(v, &mut label, &mut order);
            covered |= 1 << v;
        }
        let mut ears_raw: Vec<Vec<usize>> = vec![{
            let mut c = cycle.to_vec();
            c.push(cycle[0]);
            c
        }];
        while covered.count_ones() as usize != n {
            let path = next_ear(h, covered);
            for &v in &path[1..path.len() - 1] {
                visit(v, &mut label, &mut order);
                covered |= 1 << v;
            }
            ears_raw.push(path);
        }
        let mut sizes = Vec::with_capacity(ears_raw.len());
        let mut count = cycle.len();
        let ears = ears_raw
            .iter()
            .enumerate()
            .map(|(i, path)| {
                if i > 0 {
                    count += path.len() - 2;
                }
                sizes.push(count);
                path.windows(2).map(|w| (label[w[0]], label[w[1]])).collect()
            })
            .collect();
        Skeleton { ears, sizes, order }
    }

    /// Skeleton colouring in block labels, or `None` if no strong `k`-colouring was found.
    fn color(&self, k: Color) -> Option<Vec<(Edge, Color)>> {
        let found = self.ear_search(k).or_else(|| self.exhaustive(k))?;
        Some(
            found
                .into_iter()
                .map(|((a, b), c)| ((self.order[a], self.order[b]), c))
                .collect(),
        )
    }

    fn prefix_graph(&self, i: usize) -> Graph {
        let pairs: Vec<Edge> = self.ears[..=i].iter().flatten().copied().collect();
        Graph::from_edge_list(self.sizes[i], &pairs).expect("skeleton edges are valid")
    }

    fn ear_search(&self, k: Color) -> Option<Vec<(Edge, Color)>> {
        let graphs: Vec<Graph> = (0..self.ears.len()).map(|i| self.prefix_graph(i)).collect();
        let mut checkers: Vec<Checker> = graphs.iter().map(|g| Checker::new(g, k)).collect();
        let mut assigned: BTreeMap<Edge, Color> = BTreeMap::new();
        let mut budget = EAR_SEARCH_CHECKS;
        let ok = self.extend(0, k, &graphs, &mut checkers, &mut assigned, &mut budget);
        ok.then(|| assigned.into_iter().collect())
    }

    fn extend(
        &self,
        i: usize,
        k: Color,
        graphs: &[Graph],
        checkers: &mut [Checker],
        assigned: &mut BTreeMap<Edge, Color>,
        budget: &mut usize,
    ) -> bool {
        if i == self.ears.len() {
            return true;
        }
        let ear = &self.ears[i];
        for pattern in ear_patterns(ear.len(), k, i == 0) {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            for (&(a, b), &c) in ear.iter().zip(&pattern) {
                assigned.insert(norm(a, b), c);
            }
            let colors: Vec<Color> = graphs[i].edges().iter().map(|e| assigned[e]).collect();
            checkers[i].load(&colors);
            if checkers[i].strong() && self.extend(i + 1, k, graphs, checkers, assigned, budget) {
                return true;
            }
        }
        for &(a, b) in ear {
            assigned.remove(&norm(a, b));
        }
        false
    }

    fn exhaustive(&self, k: Color) -> Option<Vec<(Edge, Color)>> {
        let g = self.prefix_graph(self.ears.len() - 1);
        let outcome = search_colorings(g.m(), k, None, || {
            let mut checker = Checker::new(&g, k);
            move |colors: &[Color]| {
                checker.load(colors);
                checker.strong()
            }
        });
        match outcome {
            SearchOutcome::Found(colors) => Some(g.edges().iter().copied().zip(colors).collect()),
            _ => None,
        }
    }
}

/// Shortest ear: a path leaving the covered set and returning to a different covered vertex.
fn next_ear(h: &Graph, covered: VertexSet) -> Vec<usize> {
    for s in iter_bits(covered) {
        for x in iter_bits(h.neighbors(s) & !covered) {
            // breadth-first from x through uncovered vertices to covered \ {s}
            let mut prev = vec![usize::MAX; h.n()];
            prev[x] = x;
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                let targets = h.neighbors(y) & covered & !(1 << s);
                if targets != 0 {
                    let t = targets.trailing_zeros() as usize;
                    let mut path = vec![t, y];
                    let mut cur = y;
                    while cur != x {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    path.push(s);
                    path.reverse();
                    return path;
                }
                for z in iter_bits(h.neighbors(y) & !covered) {
                    if prev[z] == usize::MAX {
                        prev[z] = y;
                        queue.push_back(z);
                    }
                }
            }
        }
    }
    unreachable!("a 2-connected graph always has an ear leaving a proper covered subset")
}

/// Colour sequences for an ear of `len` edges, most promising first: sequences
/// with fewer equal neighbours come earlier, ties broken lexicographically.
/// The initial cycle also counts the wrap-around pair and gets only proper sequences.
fn ear_patterns(len: usize, k: Color, closed: bool) -> Vec<Vec<Color>> {
    let total = (k as usize).pow(len as u32);
    let mut all: Vec<(usize, Vec<Color>)> = (0..total)
        .map(|mut code| {
            let mut seq = vec![0; len];
            for slot in seq.iter_mut().rev() {
                *slot = (code % k as usize) as Color + 1;
                code /= k as usize;
            }
            let mut clashes = seq.windows(2).filter(|w| w[0] == w[1]).count();
            if closed && seq[0] == seq[len - 1] {
                clashes += 1;
            }
            (clashes, seq)
        })
        .filter(|(clashes, seq)| !closed || (*clashes == 0 && seq[0] == 1))
        .collect();
    all.sort();
    all.into_iter().map(|(_, seq)| seq).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_is_strong_with_two() {
        let cert = strong_coloring_bridgeless(&Graph::cycle(4)).unwrap();
        assert_eq!(cert.k(), 2);
        assert!(cert.strong());
        assert_eq!(cert.strategy(), Strategy::BipartiteBridgeless);
    }

    #[test]
    fn k23_is_strong_with_two() {
        let cert = strong_coloring_bridgeless(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!(cert.k(), 2);
        assert!(cert.strong());
    }

    #[test]
    fn k4_and_triangle() {
        let cert = strong_coloring_bridgeless(&Graph::complete(4)).unwrap();
        assert!(cert.k() <= 3 && cert.strong());
        let tri = strong_coloring_bridgeless(&Graph::cycle(3)).unwrap();
        assert_eq!(tri.k(), 3);
        assert_eq!(tri.strategy(), Strategy::Bridgeless3);
    }

    #[test]
    fn blocks_glued_at_cut_vertex() {
        let bowtie = Graph::friendship(2);
        let cert = strong_coloring_bridgeless(&bowtie).unwrap();
        assert!(cert.strong());
    }

    #[test]
    fn errors() {
        assert!(matches!(strong_coloring_bridgeless(&Graph::path(3)), Err(Error::HasBridge(_))));
        let two_triangles = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(strong_coloring_bridgeless(&two_triangles), Err(Error::Disconnected));
        assert!(matches!(strong_coloring_bridgeless(&Graph::cycle(11)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn cycle_patterns_are_proper() {
        for p in ear_patterns(5, 3, true) {
            assert!(p.windows(2).all(|w| w[0] != w[1]) && p[0] != p[4]);
        }
        assert_eq!(ear_patterns(4, 2, true), vec![vec![1, 2, 1, 2]]);
    }
}
