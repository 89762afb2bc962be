//! Three branches hanging off one hub vertex: a spanning cycle of the first
//! branch through the hub and spanning paths of the other two from the hub.

use super::{PcCertificate, Strategy};
use crate::coloring::{Checker, Color, EdgeColoring};
use crate::error::{guard, Error, Result};
use crate::graph::{norm, Edge, Graph};
use crate::hamilton::{hamilton_cycle_through, hamilton_path_from, HAMILTON_MAX_VERTICES};
use crate::search::{search_colorings, SearchOutcome};

/// Spanning cycle or path of `{hub} ∪ part` anchored at the hub, in labels of `g`.
fn piece_walk(g: &Graph, hub: usize, part: &[usize], cycle: bool) -> Result<Option<Vec<usize>>> {
    let mut verts = vec![hub];
    verts.extend_from_slice(part);
    let sub = g.induced_subgraph(&verts);
    let found = if cycle {
        hamilton_cycle_through(&sub, 0)?.map(|mut c| {
            c.push(0);
            c
        })
    } else {
        hamilton_path_from(&sub, 0)?
    };
    Ok(found.map(|w| w.into_iter().map(|i| verts[i]).collect()))
}

fn alternate(walk: &[usize], first: Color, out: &mut Vec<(Edge, Color)>) {
    for (i, w) in walk.windows(2).enumerate() {
        let c = if i % 2 == 0 { first } else { 3 - first };
        out.push((norm(w[0], w[1]), c));
    }
}

/// Two-colour certificate built on the substructure, or `None` when the
/// spanning cycle or paths do not exist or no 2-colouring of it works.
pub fn substructure_s(g: &Graph, hub: usize, parts: [&[usize]; 3]) -> Result<Option<PcCertificate>> {
    guard("vertex count", g.n(), HAMILTON_MAX_VERTICES)?;
    if hub >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: hub, n: g.n() });
    }
    let mut seen = 1u64 << hub;
    for part in parts {
        if part.is_empty() {
            return Err(Error::BadPartition("empty part"));
        }
        for &v in part {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::BadPartition("parts overlap or contain the hub"));
            }
            seen |= 1 << v;
        }
    }
    if seen != g.all_vertices() {
        return Err(Error::BadPartition("parts do not cover every vertex"));
    }

    let Some(cycle) = piece_walk(g, hub, parts[0], true)? else {
        return Ok(None);
    };
    let Some(p2) = piece_walk(g, hub, parts[1], false)? else {
        return Ok(None);
    };
    let Some(p3) = piece_walk(g, hub, parts[2], false)? else {
        return Ok(None);
    };

    // even cycle alternates 1,2 from the hub so its two hub edges differ;
    // the paths leave the hub with different colours
    let mut fixed = Vec::new();
    alternate(&cycle, 1, &mut fixed);
    alternate(&p2, 1, &mut fixed);
    alternate(&p3, 2, &mut fixed);
    let pairs: Vec<Edge> = fixed.iter().map(|&(e, _)| e).collect();
    let s = Graph::from_edge_list(g.n(), &pairs)?;
    let pattern: Vec<Color> = s
        .edges()
        .iter()
        .map(|e| fixed.iter().find(|(f, _)| f == e).map(|&(_, c)| c).unwrap())
        .collect();

    let mut checker = Checker::new(&s, 2);
    checker.load(&pattern);
    let colors = if checker.proper_connected() {
        pattern
    } else {
        let found = search_colorings(s.m(), 2, None, || {
            let mut checker = Checker::new(&s, 2);
            move |c: &[Color]| {
                checker.load(c);
                checker.proper_connected()
            }
        });
        match found {
            SearchOutcome::Found(c) => c,
            _ => return Ok(None),
        }
    };
    let on_s = EdgeColoring::new(s, 2, colors)?;
    PcCertificate::certify(on_s.lift_to(g, 1)?, Strategy::SubstructureS, false).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Hub 0 and three copies of K5 on 1..=5, 6..=10, 11..=15.
    fn three_k5() -> Graph {
        let mut pairs = vec![(0, 1), (0, 2), (0, 6), (0, 11)];
        for base in [1, 6, 11] {
            for i in 0..5 {
                for j in i + 1..5 {
                    pairs.push((base + i, base + j));
                }
            }
        }
        Graph::from_edge_list(16, &pairs).unwrap()
    }

    #[test]
    fn three_complete_branches() {
        let g = three_k5();
        let parts: [Vec<usize>; 3] = [(1..=5).collect(), (6..=10).collect(), (11..=15).collect()];
        let cert = substructure_s(&g, 0, [&parts[0], &parts[1], &parts[2]]).unwrap().unwrap();
        assert_eq!(cert.k(), 2);
        assert_eq!(cert.strategy(), Strategy::SubstructureS);
    }

    #[test]
    fn bad_partition() {
        let g = three_k5();
        let parts: [Vec<usize>; 3] = [(1..=5).collect(), (6..=10).collect(), (11..=14).collect()];
        assert!(matches!(
            substructure_s(&g, 0, [&parts[0], &parts[1], &parts[2]]),
            Err(Error::BadPartition(_))
        ));
    }

    #[test]
    fn star_shaped_part_has_no_path() {
        // hub 0; part 1 is a triangle 1,2,3; parts 2 and 3 are stars whose
        // centre touches the hub, so no spanning path starts at the hub
        let g = Graph::from_edge_list(
            10,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (4, 6), (0, 7), (7, 8), (7, 9)],
        )
        .unwrap();
        let parts: [Vec<usize>; 3] = [vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]];
        assert_eq!(substructure_s(&g, 0, [&parts[0], &parts[1], &parts[2]]).unwrap(), None);
    }
}
