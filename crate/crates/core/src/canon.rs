//! Canonical labeling for small graphs.
//!
//! Search tree over vertex orderings: colour refinement (degree partition,
//! iterated), then individualization of each vertex of the first non-singleton
//! cell. Vertices of that cell with identical open neighbourhoods (twins) are
//! interchangeable by an automorphism, so only one per twin class is tried.
//! Each leaf yields the upper-triangle adjacency code under its ordering; the
//! minimum is the canonical code.

use crate::error::{guard, Result};
use crate::graph::{iter_bits, Graph, VertexSet};
use crate::graph6::to_graph6;

pub const CANON_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// The relabeled graph.
    pub graph: Graph,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    pub code: u128,
}

impl CanonicalForm {
    /// The vertex placed last by the canonical ordering.
    pub fn last_vertex(&self) -> usize {
        self.labeling
            .iter()
            .position(|&p| p + 1 == self.labeling.len())
            .unwrap_or(0)
    }
}

struct Search<'a> {
    adj: &'a [VertexSet],
    n: usize,
    best_code: u128,
    best_labeling: Vec<usize>,
    found: bool,
}

fn rerank(colors: &mut [u8]) {
    let mut present = [false; 256];
    for &c in colors.iter() {
        present[c as usize] = true;
    }
    let mut rank = [0u8; 256];
    let mut next = 0u8;
    for c in 0..256 {
        if present[c] {
            rank[c] = next;
            next += 1;
        }
    }
    for c in colors.iter_mut() {
        *c = rank[*c as usize];
    }
}

fn class_count(colors: &[u8]) -> usize {
    colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
}

impl<'a> Search<'a> {
    /// Iterated refinement by neighbour colour counts. Keeps the relative order
    /// of existing classes, so initial vertex colours are respected.
    fn refine(&self, colors: &mut [u8]) {
        let n = self.n;
        let mut classes = class_count(colors);
        loop {
            let mut keys: Vec<([u8; 17], usize)> = (0..n)
                .map(|v| {
                    let mut key = [0u8; 17];
                    key[0] = colors[v];
                    for w in iter_bits(self.adj[v]) {
                        key[1 + colors[w] as usize] += 1;
                    }
                    (key, v)
                })
                .collect();
            keys.sort_unstable();
            let mut next = 0u8;
            for i in 0..n {
                if i > 0 && keys[i].0 != keys[i - 1].0 {
                    next += 1;
                }
                colors[keys[i].1] = next;
            }
            let now = next as usize + 1;
            if now == classes {
                return;
            }
            classes = now;
        }
    }

    fn leaf(&mut self, colors: &[u8]) {
        let n = self.n;
        let mut inv = [0usize; 16];
        for v in 0..n {
            inv[colors[v] as usize] = v;
        }
        let mut code: u128 = 0;
        for j in 1..n {
            let row = self.adj[inv[j]];
            for &vi in inv.iter().take(j) {
                code = code << 1 | (row >> vi & 1) as u128;
            }
        }
        if !self.found || code < self.best_code {
            self.found = true;
            self.best_code = code;
            self.best_labeling = colors.iter().map(|&c| c as usize).collect();
        }
    }

    fn search(&mut self, mut colors: Vec<u8>) {
        self.refine(&mut colors);
        let n = self.n;
        if class_count(&colors) == n {
            self.leaf(&colors);
            return;
        }
        let mut sizes = [0u8; 16];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1).expect("non-discrete partition") as u8;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::with_capacity(cell.len());
        for &v in &cell {
            let twin_of_tried = tried.iter().any(|&u| {
                self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u)
            });
            if twin_of_tried {
                continue;
            }
            tried.push(v);
            let mut child: Vec<u8> = colors.iter().map(|&c| 2 * c + 1).collect();
            child[v] = 2 * target;
            rerank(&mut child);
            self.search(child);
        }
    }
}

fn run(g: &Graph, initial: Vec<u8>) -> CanonicalForm {
    let n = g.n();
    let mut s = Search {
        adj: g.rows(),
        n,
        best_code: 0,
        best_labeling: Vec::new(),
        found: false,
    };
    if n == 0 {
        return CanonicalForm {
            graph: g.clone(),
            labeling: Vec::new(),
            code: 0,
        };
    }
    s.search(initial);
    CanonicalForm {
        graph: g.relabel(&s.best_labeling),
        labeling: s.best_labeling,
        code: s.best_code,
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    guard("vertex count", g.n(), CANON_MAX_VERTICES)?;
    Ok(run(g, vec![0; g.n()]))
}

/// Canonical form of a vertex-coloured graph. Colour classes occupy
/// consecutive canonical positions in increasing colour order.
pub fn canonical_form_colored(g: &Graph, colors: &[u8]) -> Result<CanonicalForm> {
    guard("vertex count", g.n(), CANON_MAX_VERTICES)?;
    assert_eq!(colors.len(), g.n());
    let mut initial = colors.to_vec();
    rerank(&mut initial);
    Ok(run(g, initial))
}

/// Isomorphism-invariant byte string: the graph6 line of the canonical form.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    Ok(to_graph6(&canonical_form(g)?.graph).into_bytes())
}

/// Compact invariant `(n, code)` used for hashing during enumeration.
pub fn canonical_key(g: &Graph) -> Result<(usize, u128)> {
    Ok((g.n(), canonical_form(g)?.code))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    Ok(canonical_form(a)?.code == canonical_form(b)?.code)
}

/// Whether an automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Ok(true);
    }
    if g.degree(u) != g.degree(v) {
        return Ok(false);
    }
    let mark = |x: usize| -> Vec<u8> { (0..g.n()).map(|w| (w != x) as u8).collect() };
    Ok(canonical_form_colored(g, &mark(u))?.code == canonical_form_colored(g, &mark(v))?.code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_path_same_code() {
        let a = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edge_list(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
        assert_ne!(
            canonical_code(&Graph::complete(3)).unwrap(),
            canonical_code(&a).unwrap()
        );
    }

    #[test]
    fn guard_rejects_large() {
        assert!(canonical_code(&Graph::empty(13)).is_err());
    }

    #[test]
    fn orbits() {
        let p4 = Graph::path(4);
        assert!(same_orbit(&p4, 0, 3).unwrap());
        assert!(same_orbit(&p4, 1, 2).unwrap());
        assert!(!same_orbit(&p4, 0, 1).unwrap());
        let star = Graph::star(3);
        assert!(same_orbit(&star, 1, 3).unwrap());
        assert!(!same_orbit(&star, 0, 3).unwrap());
    }

    #[test]
    fn complete_and_empty_are_cheap() {
        let k = canonical_form(&Graph::complete(12)).unwrap();
        assert_eq!(k.graph, Graph::complete(12));
        let e = canonical_form(&Graph::empty(12)).unwrap();
        assert_eq!(e.code, 0);
    }
}
