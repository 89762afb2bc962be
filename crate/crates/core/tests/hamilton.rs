mod common;

use pconn::hamilton::{
    hamilton_cycle, hamilton_path, hamilton_path_between, has_path_of_length, is_hamilton_path, longest_cycle,
};
use pconn::survey::{enumerate_connected, GraphFilter};
use pconn::Graph;
use proptest::prelude::*;

fn graphs_with_min_degree(n: usize, min_degree: usize) -> Vec<Graph> {
    let filter = GraphFilter {
        min_degree,
        ..GraphFilter::default()
    };
    enumerate_connected(n, &filter).unwrap()
}

/// Hamilton path between `u` and `v` by trying every vertex order.
fn brute_path_between(g: &Graph, u: usize, v: usize) -> bool {
    fn go(g: &Graph, path: &mut Vec<usize>, target: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == g.n() {
            return last == target;
        }
        (0..g.n()).any(|x| {
            if g.has_edge(last, x) && !path.contains(&x) && (x != target || path.len() + 1 == g.n()) {
                path.push(x);
                let ok = go(g, path, target);
                path.pop();
                ok
            } else {
                false
            }
        })
    }
    if u == v {
        return g.n() == 1;
    }
    go(g, &mut vec![u], v)
}

proptest! {
    #[test]
    fn path_between_agrees_with_brute_force(seed in any::<u64>(), n in 2usize..=7, p in 0.1..0.9f64) {
        let g = common::random_connected(&mut common::rng(seed), n, p);
        for u in 0..n {
            for v in u + 1..n {
                let got = hamilton_path_between(&g, u, v).unwrap();
                prop_assert_eq!(got.is_some(), brute_path_between(&g, u, v));
                if let Some(path) = got {
                    prop_assert!(is_hamilton_path(&g, &path));
                    prop_assert_eq!((path[0], path[n - 1]), (u, v));
                }
            }
        }
    }
}

#[test]
fn dirac_cycles_up_to_eight() {
    for n in 3..=8 {
        for g in graphs_with_min_degree(n, n.div_ceil(2)) {
            let cycle = hamilton_cycle(&g).unwrap().expect("Dirac graph has a Hamilton cycle");
            assert_eq!(cycle.len(), n);
            assert!(g.has_edge(cycle[0], cycle[n - 1]));
        }
    }
}

#[test]
fn spanning_paths_and_hamilton_connectivity() {
    for n in 2..=8 {
        for g in graphs_with_min_degree(n, (n - 1).div_ceil(2)) {
            assert!(hamilton_path(&g).unwrap().is_some());
        }
        for g in graphs_with_min_degree(n, (n + 1).div_ceil(2)) {
            for u in 0..n {
                for v in u + 1..n {
                    assert!(hamilton_path_between(&g, u, v).unwrap().is_some());
                }
            }
        }
    }
}

#[test]
fn panconnected_up_to_eight() {
    for n in 3..=8 {
        for g in graphs_with_min_degree(n, (n + 2).div_ceil(2)) {
            for u in 0..n {
                for v in u + 1..n {
                    for len in 2..n {
                        assert!(has_path_of_length(&g, u, v, len).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn two_connected_graphs_have_long_cycles() {
    for n in 3..=8 {
        for g in graphs_with_min_degree(n, 2).into_iter().filter(|g| g.connectivity() >= 2) {
            let longest = longest_cycle(&g).unwrap().expect("2-connected graphs have cycles").len();
            assert!(longest == n || longest >= 2 * g.min_degree());
        }
    }
}

#[test]
fn petersen_has_no_hamilton_cycle() {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    let g = Graph::from_edge_list(10, &pairs).unwrap();
    assert!(hamilton_cycle(&g).unwrap().is_none());
    assert!(hamilton_path(&g).unwrap().is_some());
}
