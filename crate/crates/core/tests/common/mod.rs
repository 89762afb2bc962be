//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use pconn::{Color, EdgeColoring, Graph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Random connected graph: a random spanning tree plus each other pair with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        pairs.push((order[i], parent));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

pub fn random_coloring(rng: &mut impl Rng, g: &Graph, k: Color) -> EdgeColoring {
    let colors = (0..g.m()).map(|_| rng.gen_range(1..=k)).collect();
    EdgeColoring::new(g.clone(), k, colors).unwrap()
}

/// Components counted by union-find over an explicit edge list.
pub fn component_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut count = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

pub fn brute_bridges(g: &Graph) -> Vec<(usize, usize)> {
    let base = component_count(g.n(), g.edges());
    g.edges()
        .iter()
        .copied()
        .filter(|&e| {
            let rest: Vec<_> = g.edges().iter().copied().filter(|&f| f != e).collect();
            component_count(g.n(), &rest) > base
        })
        .collect()
}

/// Every simple path from `path`'s last vertex, with properness tested only on complete paths.
fn all_paths(c: &EdgeColoring, path: &mut Vec<usize>, reach: &mut [Vec<bool>]) {
    let last = *path.last().unwrap();
    let proper = path.windows(3).all(|w| c.color_of(w[0], w[1]) != c.color_of(w[1], w[2]));
    if proper {
        reach[path[0]][last] = true;
    }
    for next in 0..c.graph().n() {
        if c.graph().has_edge(last, next) && !path.contains(&next) {
            path.push(next);
            all_paths(c, path, reach);
            path.pop();
        }
    }
}

/// Proper connectivity decided by listing all simple paths.
pub fn brute_proper_connected(c: &EdgeColoring) -> bool {
    let n = c.graph().n();
    let mut reach = vec![vec![false; n]; n];
    for u in 0..n {
        all_paths(c, &mut vec![u], &mut reach);
    }
    (0..n).all(|u| (0..n).all(|v| reach[u][v]))
}

/// Brute-force `pc` by trying every colouring with 1, 2, .. colours.
pub fn brute_pc(g: &Graph) -> Color {
    for k in 1..=g.m().max(1) as Color {
        let total = (k as u64).pow(g.m() as u32);
        for code in 0..total {
            let mut x = code;
            let colors: Vec<Color> = (0..g.m())
                .map(|_| {
                    let c = (x % k as u64) as Color + 1;
                    x /= k as u64;
                    c
                })
                .collect();
            if brute_proper_connected(&EdgeColoring::new(g.clone(), k, colors).unwrap()) {
                return k;
            }
        }
    }
    unreachable!("a connected graph has a proper colouring with m colours")
}

/// Two random sides joined by a bridge, each side given with the far endpoint as a pendant.
pub struct Composite {
    pub side_a: Graph,
    pub side_b: Graph,
    pub bridge: (usize, usize),
    pub emb: pconn::constructive::GlueEmbedding,
}

/// Random composite with `a` and `b` vertices on the two sides.
pub fn random_composite(rng: &mut impl Rng, a: usize, b: usize) -> Composite {
    let core_a = random_connected(rng, a, 0.5);
    let core_b = random_connected(rng, b, 0.5);
    let (x, y) = (rng.gen_range(0..a), rng.gen_range(0..b));
    let mut pa = core_a.edges().to_vec();
    pa.push((x, a));
    let mut pb = core_b.edges().to_vec();
    pb.push((y, b));
    let side_a = Graph::from_edge_list(a + 1, &pa).unwrap();
    let side_b = Graph::from_edge_list(b + 1, &pb).unwrap();
    let mut map_a: Vec<usize> = (0..a).collect();
    map_a.push(a + y);
    let mut map_b: Vec<usize> = (a..a + b).collect();
    map_b.push(x);
    Composite {
        side_a,
        side_b,
        bridge: (x, a + y),
        emb: pconn::constructive::GlueEmbedding { n: a + b, map_a, map_b },
    }
}
