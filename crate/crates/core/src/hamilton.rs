//! Exact spanning path and cycle search by dynamic programming over vertex subsets.
//!
//! `reach[mask]` holds the possible last vertices of a simple path that starts
//! at a fixed vertex (or anywhere) and visits exactly `mask`. Table size is
//! `2^n`, hence the hard order limits.

use crate::error::{guard, Error, Result};
use crate::graph::{full_set, iter_bits, Graph, VertexSet};

pub const HAMILTON_MAX_VERTICES: usize = 16;
pub const CYCLE_SEARCH_MAX_VERTICES: usize = 12;

struct PathTable {
    reach: Vec<VertexSet>,
}

impl PathTable {
    /// Paths starting in `starts` (each start counted separately) using only `within`.
    fn build(g: &Graph, starts: VertexSet, within: VertexSet) -> PathTable {
        let n = g.n();
        let mut reach = vec![0u64; 1 << n];
        for s in iter_bits(starts & within) {
            reach[1 << s] |= 1 << s;
        }
        for mask in 1..reach.len() as u64 {
            let ends = reach[mask as usize];
            if ends == 0 {
                continue;
            }
            for v in iter_bits(ends) {
                for w in iter_bits(g.neighbors(v) & within & !mask) {
                    reach[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
        PathTable { reach }
    }

    /// Rebuild a path visiting `mask` and ending at `end`; smallest predecessors first.
    fn path(&self, g: &Graph, mut mask: VertexSet, mut end: usize) -> Vec<usize> {
        let mut rev = vec![end];
        while mask.count_ones() > 1 {
            let prev_mask = mask & !(1 << end);
            let prev = (self.reach[prev_mask as usize] & g.neighbors(end)).trailing_zeros() as usize;
            debug_assert!(prev < g.n());
            rev.push(prev);
            mask = prev_mask;
            end = prev;
        }
        rev.reverse();
        rev
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        Err(Error::VertexOutOfRange { vertex: v, n: g.n() })
    } else {
        Ok(())
    }
}

/// A spanning path, if one exists.
pub fn hamilton_path(g: &Graph) -> Result<Option<Vec<usize>>> {
    guard("vertex count", g.n(), HAMILTON_MAX_VERTICES)?;
    let n = g.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let all = full_set(n);
    let table = PathTable::build(g, all, all);
    let ends = table.reach[all as usize];
    Ok((ends != 0).then(|| table.path(g, all, ends.trailing_zeros() as usize)))
}

/// A spanning path starting at `u`.
pub fn hamilton_path_from(g: &Graph, u: usize) -> Result<Option<Vec<usize>>> {
    guard("vertex count", g.n(), HAMILTON_MAX_VERTICES)?;
    check_vertex(g, u)?;
    let all = g.all_vertices();
    let table = PathTable::build(g, 1 << u, all);
    let ends = table.reach[all as usize];
    Ok((ends != 0).then(|| table.path(g, all, ends.trailing_zeros() as usize)))
}

/// A spanning path from `u` to `v`.
pub fn hamilton_path_between(g: &Graph, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
    guard("vertex count", g.n(), HAMILTON_MAX_VERTICES)?;
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let all = g.all_vertices();
    let table = PathTable::build(g, 1 << u, all);
    Ok((table.reach[all as usize] >> v & 1 == 1).then(|| table.path(g, all, v)))
}

/// A spanning cycle through `u`, listed from `u` without repeating it.
pub fn hamilton_cycle_through(g: &Graph, u: usize) -> Result<Option<Vec<usize>>> {
    guard("vertex count", g.n(), HAMILTON_MAX_VERTICES)?;
    check_vertex(g, u)?;
    if g.n() < 3 {
        return Ok(None);
    }
    let all = g.all_vertices();
    let table = PathTable::build(g, 1 << u, all);
    let closing = table.reach[all as usize] & g.neighbors(u);
    Ok((closing != 0).then(|| table.path(g, all, closing.trailing_zeros() as usize)))
}

pub fn hamilton_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    if g.n() == 0 {
        return Ok(None);
    }
    hamilton_cycle_through(g, 0)
}

/// A longest simple cycle, or `None` for forests.
pub fn longest_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    longest_cycle_where(g, |_| true)
}

/// A longest cycle whose length satisfies `accept`.
pub fn longest_cycle_where(
    g: &Graph,
    accept: impl Fn(usize) -> bool,
) -> Result<Option<Vec<usize>>> {
    guard("vertex count", g.n(), CYCLE_SEARCH_MAX_VERTICES)?;
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        // cycles whose least vertex is s
        let within = full_set(n) & !((1u64 << s) - 1);
        let table = PathTable::build(g, 1 << s, within);
        let mut local: Option<(usize, VertexSet, usize)> = None;
        for mask in 0..(1u64 << n) {
            let len = mask.count_ones() as usize;
            if len < 3 || mask >> s & 1 == 0 || !accept(len) {
                continue;
            }
            let closing = table.reach[mask as usize] & g.neighbors(s);
            if closing != 0 && local.is_none_or(|(l, _, _)| len > l) {
                local = Some((len, mask, closing.trailing_zeros() as usize));
            }
        }
        if let Some((len, mask, end)) = local {
            if best.as_ref().is_none_or(|b| len > b.len()) {
                best = Some(table.path(g, mask, end));
            }
        }
    }
    Ok(best)
}

/// A longest simple path (vertex count maximal), preferring least vertex masks.
pub fn longest_path(g: &Graph) -> Result<Vec<usize>> {
    guard("vertex count", g.n(), HAMILTON_MAX_VERTICES)?;
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let all = g.all_vertices();
    let table = PathTable::build(g, all, all);
    let mut best = (0u32, 1u64, 0usize);
    for (mask, &ends) in table.reach.iter().enumerate() {
        let len = (mask as u64).count_ones();
        if ends != 0 && len > best.0 {
            best = (len, mask as u64, ends.trailing_zeros() as usize);
        }
    }
    Ok(table.path(g, best.1, best.2))
}

/// Whether a simple `u`–`v` path with exactly `len` edges exists.
pub fn has_path_of_length(g: &Graph, u: usize, v: usize, len: usize) -> Result<bool> {
    guard("vertex count", g.n(), CYCLE_SEARCH_MAX_VERTICES)?;
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v || len == 0 || len >= g.n() {
        return Ok(false);
    }
    let table = PathTable::build(g, 1 << u, g.all_vertices());
    Ok(table
        .reach
        .iter()
        .enumerate()
        .any(|(mask, &ends)| (mask as u64).count_ones() as usize == len + 1 && ends >> v & 1 == 1))
}

/// Whether `seq` is a spanning path of `g`.
pub fn is_hamilton_path(g: &Graph, seq: &[usize]) -> bool {
    seq.len() == g.n()
        && seq.iter().fold(0u64, |acc, &v| acc | 1 << v) == g.all_vertices()
        && seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}
