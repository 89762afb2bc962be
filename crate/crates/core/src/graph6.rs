//! graph6 encoding, short form only (`n <= 62`).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed big-endian
//! into 6-bit groups, each written as `group + 63`. Trailing pad bits are zero.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |why: &str| Error::MalformedGraph6(format!("{why}: {line:?}"));
    let (&head, body) = bytes.split_first().ok_or_else(|| bad("empty line"))?;
    if !(63..=126).contains(&head) {
        return Err(bad("header byte outside printable range"));
    }
    let n = (head - 63) as usize;
    if n > MAX_VERTICES {
        return Err(bad("long form (n > 62) is not supported"));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad("wrong body length"));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k >= nbits {
                break 'outer;
            }
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(bad("body byte outside printable range"));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        if !(63..=126).contains(&last) {
            return Err(bad("body byte outside printable range"));
        }
        let pad = body.len() * 6 - nbits;
        if pad > 0 && (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows(adj))
}

/// Parse a corpus: one graph per non-empty line; lines starting with `#` or `>` are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('>'))
        .map(from_graph6)
        .collect()
}
