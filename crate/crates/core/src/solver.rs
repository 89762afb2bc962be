//! Exact proper connection numbers.
//!
//! Upper bounds come from the constructive colourings; lower bounds come only
//! from exhausting every colouring with one colour fewer (plus `pc ≥ 2` for
//! non-complete graphs).

use std::time::{Duration, Instant};

use crate::bridges::has_bridge;
use crate::coloring::{first_unconnected_pair, first_weak_pair, Checker, Color, EdgeColoring};
use crate::constructive::{
    color_by_bridge_blocks, color_complete, color_hamilton_path, color_spanning_tree, color_tree,
    extend_two_vertices, pc2_pipeline, strong_coloring_bridgeless, PcCertificate, Piece, Strategy,
    BRIDGELESS_MAX_VERTICES, PIPELINE_MAX_VERTICES,
};
use crate::error::{guard, Error, Result};
use crate::graph::Graph;
use crate::hamilton::HAMILTON_MAX_VERTICES;
use crate::search::{search_colorings, SearchOutcome};

/// Order limit for `pc_exact`'s exhaustive phase.
pub const EXACT_MAX_VERTICES: usize = 10;
/// Size limit for every exhaustive phase.
pub const EXACT_MAX_EDGES: usize = 24;
/// Order limit for the bounded decision procedure [`find_coloring`].
pub const DECIDE_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolverOptions {
    /// Wall-clock cap for the exhaustive search of one graph.
    pub budget: Option<Duration>,
}

/// Result of searching for a colouring with a fixed palette.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Found(PcCertificate),
    Exhausted,
    OutOfBudget,
}

/// Search every colouring with colours `1..=k` (first edge fixed to 1) for a
/// proper-connected one, in lexicographic order. Colourings are screened by
/// proper-walk reachability before the exact path check.
pub fn find_coloring(g: &Graph, k: Color, opts: &SolverOptions) -> Result<Decision> {
    guard("vertex count", g.n(), DECIDE_MAX_VERTICES)?;
    guard("edge count", g.m(), EXACT_MAX_EDGES)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let deadline = opts.budget.map(|b| Instant::now() + b);
    let outcome = search_colorings(g.m(), k, deadline, || {
        let mut checker = Checker::new(g, k);
        move |colors: &[Color]| {
            checker.load(colors);
            checker.walks_connect() && checker.proper_connected()
        }
    });
    Ok(match outcome {
        SearchOutcome::Found(colors) => {
            let coloring = EdgeColoring::new(g.clone(), k, colors)?;
            Decision::Found(PcCertificate::certify(coloring, Strategy::Exhaustive, false)?)
        }
        SearchOutcome::Exhausted => Decision::Exhausted,
        SearchOutcome::OutOfBudget => Decision::OutOfBudget,
    })
}

fn keep_better(best: &mut Option<PcCertificate>, cand: PcCertificate) {
    if best.as_ref().is_none_or(|b| cand.k() < b.k()) {
        *best = Some(cand);
    }
}

/// Constructive bounds without bridge gluing.
fn basic_upper(g: &Graph) -> Result<PcCertificate> {
    if g.is_complete() {
        return color_complete(g);
    }
    if g.n() <= HAMILTON_MAX_VERTICES {
        if let Some(cert) = color_hamilton_path(g)? {
            return Ok(cert);
        }
    }
    if g.n() <= PIPELINE_MAX_VERTICES {
        if let Some(cert) = pc2_pipeline(g)? {
            return Ok(cert);
        }
    }
    color_spanning_tree(g)
}

/// Piece solver for gluing: trees exactly, small-pendant components by strong
/// colouring plus extension, anything else small enough by exact search.
fn solve_piece(piece: &Piece) -> Result<Option<PcCertificate>> {
    let g = &piece.graph;
    if g.is_tree() {
        return color_tree(g).map(Some);
    }
    let mut best = None;
    if piece.pendants.len() <= 2 && piece.core >= 3 && piece.core <= BRIDGELESS_MAX_VERTICES {
        let core: Vec<usize> = (0..piece.core).collect();
        let base = strong_coloring_bridgeless(&g.induced_subgraph(&core))?;
        let cert = if piece.pendants.is_empty() {
            base
        } else {
            extend_two_vertices(&base, &piece.pendants)?
        };
        keep_better(&mut best, cert);
    }
    if g.n() <= EXACT_MAX_VERTICES && g.m() <= EXACT_MAX_EDGES {
        let upper = basic_upper(g)?;
        let exact = exact_below(g, upper, None, &SolverOptions::default())?;
        keep_better(&mut best, exact.1);
    }
    Ok(best)
}

/// Smallest verified certificate from the constructive strategies.
pub fn pc_upper(g: &Graph) -> Result<PcCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Err(Error::TooSmall("graph needs at least one edge"));
    }
    let first = basic_upper(g)?;
    if first.k() <= 2 {
        return Ok(first);
    }
    let mut best = Some(first);
    if !has_bridge(g) && g.n() <= BRIDGELESS_MAX_VERTICES {
        keep_better(&mut best, strong_coloring_bridgeless(g)?);
    }
    if has_bridge(g) && g.n() <= DECIDE_MAX_VERTICES {
        if let Some(glued) = color_by_bridge_blocks(g, solve_piece)? {
            keep_better(&mut best, glued);
        }
    }
    Ok(best.expect("spanning tree bound always exists"))
}

/// Exact search below a known certificate; `kmax` caps the palettes tried.
fn exact_below(g: &Graph, upper: PcCertificate, kmax: Option<Color>, opts: &SolverOptions) -> Result<(Color, PcCertificate)> {
    let ub = upper.k();
    let limit = kmax.unwrap_or(ub).min(ub);
    if ub <= 2 || g.is_complete() {
        if limit < ub {
            return Err(Error::SearchBudgetExceeded { lower: ub as usize, upper: ub as usize });
        }
        return Ok((ub, upper));
    }
    for k in 2..ub {
        if k > limit {
            return Err(Error::SearchBudgetExceeded { lower: k as usize, upper: ub as usize });
        }
        guard("vertex count", g.n(), EXACT_MAX_VERTICES)?;
        match find_coloring(g, k, opts)? {
            Decision::Found(cert) => return Ok((k, cert)),
            Decision::Exhausted => {}
            Decision::OutOfBudget => {
                return Err(Error::SearchBudgetExceeded { lower: k as usize, upper: ub as usize })
            }
        }
    }
    if limit < ub {
        return Err(Error::SearchBudgetExceeded { lower: ub as usize, upper: ub as usize });
    }
    Ok((ub, upper))
}

/// Exact `pc(g)` with a verified witness.
pub fn pc_exact(g: &Graph, kmax: Option<Color>) -> Result<(Color, PcCertificate)> {
    pc_exact_with(g, kmax, &SolverOptions::default())
}

pub fn pc_exact_with(g: &Graph, kmax: Option<Color>, opts: &SolverOptions) -> Result<(Color, PcCertificate)> {
    let upper = pc_upper(g)?;
    exact_below(g, upper, kmax, opts)
}

/// Outcome of re-checking a certificate's claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub reasons: Vec<String>,
}

/// Re-check proper connectivity, the palette bound and (when claimed) the strong property.
pub fn verify_certificate(cert: &PcCertificate) -> VerifyReport {
    let mut reasons = Vec::new();
    let c = cert.coloring();
    if c.max_color_used() > cert.k() {
        reasons.push(format!("uses colour {} but claims k = {}", c.max_color_used(), cert.k()));
    }
    match first_unconnected_pair(c) {
        Ok(Some((u, v))) => reasons.push(format!("no proper path between {u} and {v}")),
        Ok(None) => {}
        Err(e) => reasons.push(e.to_string()),
    }
    if cert.strong() {
        match first_weak_pair(c) {
            Ok(Some((u, v))) => reasons.push(format!("strong property fails between {u} and {v}")),
            Ok(None) => {}
            Err(e) => reasons.push(e.to_string()),
        }
    }
    VerifyReport {
        ok: reasons.is_empty(),
        reasons,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_bounds() {
        assert_eq!(pc_upper(&Graph::complete(5)).unwrap().k(), 1);
        assert_eq!(pc_upper(&Graph::star(4)).unwrap().k(), 4);
        assert_eq!(pc_upper(&Graph::cycle(6)).unwrap().k(), 2);
    }

    #[test]
    fn exact_values() {
        assert_eq!(pc_exact(&Graph::star(3), None).unwrap().0, 3);
        assert_eq!(pc_exact(&Graph::friendship(3), None).unwrap().0, 3);
        assert_eq!(pc_exact(&Graph::complete(4), None).unwrap().0, 1);
        assert_eq!(pc_exact(&Graph::path(5), None).unwrap().0, 2);
    }

    #[test]
    fn kmax_below_answer() {
        assert!(matches!(
            pc_exact(&Graph::friendship(3), Some(2)),
            Err(Error::SearchBudgetExceeded { lower: 3, .. })
        ));
    }

    #[test]
    fn verify_reports() {
        let cert = pc_upper(&Graph::cycle(5)).unwrap();
        assert!(verify_certificate(&cert).ok);
        let tampered = EdgeColoring::new(Graph::path(3), 2, vec![1, 1]).unwrap();
        let fake = PcCertificate::from_claims(tampered, 2, Strategy::Tree, false, true);
        assert!(!verify_certificate(&fake).ok);
        let k2 = EdgeColoring::uniform(Graph::complete(2), 1);
        let fake = PcCertificate::from_claims(k2, 1, Strategy::Complete, true, true);
        assert!(!verify_certificate(&fake).ok);
    }
}
