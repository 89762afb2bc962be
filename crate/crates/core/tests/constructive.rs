mod common;

use pconn::coloring::{has_strong_property, is_proper_connected};
use pconn::constructive::{
    color_spanning_tree, color_tree, extend_two_vertices, extend_vertex, glue_across_bridge, pc2_pipeline,
    strong_coloring_bridgeless,
};
use pconn::solver::{pc_exact, pc_upper, verify_certificate};
use pconn::{Error, Graph, PcCertificate};
use proptest::prelude::*;

fn recheck(cert: &PcCertificate) -> bool {
    cert.verified() && verify_certificate(cert).ok && is_proper_connected(cert.coloring()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn glued_certificates_verify(seed in any::<u64>(), a in 1usize..=5, b in 1usize..=5) {
        let mut rng = common::rng(seed);
        let comp = common::random_composite(&mut rng, a, b);
        let ca = pc_exact(&comp.side_a, None).unwrap().1;
        let cb = pc_exact(&comp.side_b, None).unwrap().1;
        let glued = glue_across_bridge(&ca, &cb, comp.bridge, &comp.emb).unwrap();
        prop_assert!(recheck(&glued));
        prop_assert_eq!(glued.k(), ca.k().max(cb.k()));
    }

    #[test]
    fn bridgeless_colorings_are_strong(seed in any::<u64>(), n in 3usize..=9, p in 0.2..0.8f64) {
        let g = common::random_connected(&mut common::rng(seed), n, p);
        prop_assume!(!pconn::bridges::has_bridge(&g));
        let cert = strong_coloring_bridgeless(&g).unwrap();
        prop_assert!(recheck(&cert));
        prop_assert!(cert.strong() && has_strong_property(cert.coloring()).unwrap());
        let bound = if g.is_bipartite() { 2 } else { 3 };
        prop_assert!(cert.k() <= bound);
    }

    #[test]
    fn one_vertex_extension_keeps_two_colors(seed in any::<u64>(), n in 3usize..=7, d in 2usize..=3) {
        let mut rng = common::rng(seed);
        let base = common::random_connected(&mut rng, n, 0.5);
        let cert = pc_upper(&base).unwrap();
        prop_assume!(cert.k() <= 2);
        let targets = common::random_permutation(&mut rng, n);
        let edges: Vec<(usize, usize)> = targets[..d.min(n)].iter().map(|&t| (t, n)).collect();
        let out = extend_vertex(&cert, &edges).unwrap();
        prop_assert!(recheck(&out));
        prop_assert!(out.k() <= 2);
    }

    #[test]
    fn pipeline_certificates_verify(seed in any::<u64>(), n in 4usize..=12, p in 0.1..0.6f64) {
        let g = common::random_connected(&mut common::rng(seed), n, p);
        if let Some(cert) = pc2_pipeline(&g).unwrap() {
            prop_assert!(recheck(&cert));
            prop_assert!(cert.k() <= 2);
        }
    }

    #[test]
    fn spanning_tree_bound_verifies(seed in any::<u64>(), n in 2usize..=12, p in 0.0..0.5f64) {
        let g = common::random_connected(&mut common::rng(seed), n, p);
        let cert = color_spanning_tree(&g).unwrap();
        prop_assert!(recheck(&cert));
    }
}

#[test]
fn two_vertex_extension_on_a_strong_cycle() {
    let base = strong_coloring_bridgeless(&Graph::cycle(4)).unwrap();
    let out = extend_two_vertices(&base, &[(0, 4), (4, 5), (2, 5)]).unwrap();
    assert!(recheck(&out));
    assert_eq!(out.k(), 2);
    let pendant = extend_two_vertices(&base, &[(0, 4)]).unwrap();
    assert!(recheck(&pendant));
}

#[test]
fn extension_rejects_weak_or_low_degree_input() {
    let path = pc_upper(&Graph::path(4)).unwrap();
    assert!(matches!(extend_vertex(&path, &[(0, 4)]), Err(Error::DegreeTooLow(1))));
    assert!(matches!(extend_two_vertices(&path, &[(0, 4)]), Err(Error::RequiresStrongProperty)));
}

#[test]
fn tree_colorings_use_max_degree() {
    let mut rng = common::rng(11);
    for n in 2..=12 {
        let t = common::random_connected(&mut rng, n, 0.0);
        let cert = color_tree(&t).unwrap();
        assert_eq!(cert.k() as usize, t.max_degree());
        assert!(recheck(&cert));
    }
}
