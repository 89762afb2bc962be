//! Exhaustive enumeration of edge colourings up to palette renaming.
//!
//! Colourings are restricted growth strings: the first edge has colour 1 and
//! every edge uses at most one colour above the largest seen so far. Every
//! colouring is a renaming of exactly one such string, and the lexicographically
//! least valid colouring is itself one, so scanning them in lexicographic order
//! finds the least witness. The space is split into prefix blocks scanned in
//! parallel; the earliest block with a hit wins, so results do not depend on
//! scheduling.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::coloring::Color;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Vec<Color>),
    Exhausted,
    OutOfBudget,
}

const PREFIX_LEN: usize = 10;
const DEADLINE_POLL: u32 = 512;

fn prefixes(len: usize, k: Color) -> Vec<Vec<Color>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, k: Color, top: Color, cur: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let limit = if cur.is_empty() { 1 } else { (top + 1).min(k) };
        for c in 1..=limit {
            cur.push(c);
            rec(len, k, top.max(c), cur, out);
            cur.pop();
        }
    }
    rec(len, k, 0, &mut cur, &mut out);
    out
}

struct Block<'a, F> {
    k: Color,
    m: usize,
    accept: F,
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    polls: u32,
    out_of_budget: bool,
}

impl<F: FnMut(&[Color]) -> bool> Block<'_, F> {
    fn rec(&mut self, cur: &mut Vec<Color>, top: Color) -> bool {
        if cur.len() == self.m {
            self.polls += 1;
            if self.polls >= DEADLINE_POLL {
                self.polls = 0;
                if self.stop.load(Ordering::Relaxed) {
                    self.out_of_budget = true;
                    return true;
                }
                if self.deadline.is_some_and(|d| Instant::now() >= d) {
                    self.stop.store(true, Ordering::Relaxed);
                    self.out_of_budget = true;
                    return true;
                }
            }
            return (self.accept)(cur);
        }
        let limit = if cur.is_empty() { 1 } else { (top + 1).min(self.k) };
        for c in 1..=limit {
            cur.push(c);
            if self.rec(cur, top.max(c)) {
                return true;
            }
            cur.pop();
            if self.out_of_budget {
                return true;
            }
        }
        false
    }
}

/// Scan colourings of `m` edges with colours `1..=k` in lexicographic order of
/// restricted growth strings. `make_accept` builds one predicate per worker.
pub fn search_colorings<M, F>(m: usize, k: Color, deadline: Option<Instant>, make_accept: M) -> SearchOutcome
where
    M: Fn() -> F + Sync,
    F: FnMut(&[Color]) -> bool,
{
    if m == 0 {
        return if make_accept()(&[]) {
            SearchOutcome::Found(Vec::new())
        } else {
            SearchOutcome::Exhausted
        };
    }
    let stop = AtomicBool::new(false);
    let plen = m.min(PREFIX_LEN);
    let blocks = prefixes(plen, k);
    let result = blocks.par_iter().find_map_first(|prefix| {
        let top = prefix.iter().copied().max().unwrap_or(0);
        let mut block = Block {
            k,
            m,
            accept: make_accept(),
            deadline,
            stop: &stop,
            polls: 0,
            out_of_budget: false,
        };
        let mut cur = prefix.clone();
        if block.rec(&mut cur, top) {
            if block.out_of_budget {
                Some(SearchOutcome::OutOfBudget)
            } else {
                Some(SearchOutcome::Found(cur))
            }
        } else {
            None
        }
    });
    result.unwrap_or(SearchOutcome::Exhausted)
}

/// Number of restricted growth strings of length `m` over `k` colours.
pub fn count_colorings(m: usize, k: Color) -> u128 {
    // rgs[j] = strings so far using exactly j colours
    let k = k as usize;
    let mut rgs = vec![0u128; k + 1];
    if m == 0 {
        return 1;
    }
    rgs[1] = 1;
    for _ in 1..m {
        let mut next = vec![0u128; k + 1];
        for j in 1..=k {
            next[j] += rgs[j] * j as u128;
            if j < k {
                next[j + 1] += rgs[j];
            }
        }
        rgs = next;
    }
    rgs.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_colour_count_is_half_the_space() {
        assert_eq!(count_colorings(19, 2), 1 << 18);
        assert_eq!(count_colorings(4, 3), 14);
    }

    #[test]
    fn scans_all_strings_in_order() {
        let seen = std::sync::Mutex::new(Vec::new());
        let out = search_colorings(4, 3, None, || {
            |c: &[Color]| {
                seen.lock().unwrap().push(c.to_vec());
                false
            }
        });
        assert_eq!(out, SearchOutcome::Exhausted);
        let mut seen = seen.into_inner().unwrap();
        assert_eq!(seen.len(), 14);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 14);
        assert!(seen.iter().all(|c| c[0] == 1));
    }

    #[test]
    fn finds_least_witness() {
        // accept any string whose last entry is 2
        let out = search_colorings(12, 2, None, || |c: &[Color]| c[11] == 2);
        let mut expect = vec![1; 12];
        expect[11] = 2;
        assert_eq!(out, SearchOutcome::Found(expect));
    }
}
