mod common;

use std::collections::BTreeSet;

use pconn::canon::canonical_code;
use pconn::formats::{certificate_from_json, certificate_to_json, coloring_from_json, coloring_to_json};
use pconn::graph6::to_graph6;
use pconn::solver::{pc_upper, verify_certificate};
use pconn::survey::{
    enumerate_connected, exception_fixture_codes, survey_bipartite_theorem8, survey_corpus, survey_main_theorem,
    SurveyOptions, Theorem,
};
use proptest::prelude::*;

#[test]
fn main_survey_is_deterministic_and_matches_fixtures() {
    let opts = SurveyOptions::default();
    let a = survey_main_theorem(5, 8, &opts).unwrap();
    let b = survey_main_theorem(5, 8, &opts).unwrap();
    assert_eq!(a.without_timing().to_json(), b.without_timing().to_json());
    assert_eq!(a.exception_codes(), exception_fixture_codes().unwrap());
    for e in &a.exceptions {
        let cert = certificate_from_json(&e.witness.to_string()).unwrap();
        assert!(verify_certificate(&cert).ok);
        assert_eq!(cert.k(), e.pc);
    }
}

#[test]
fn bipartite_graphs_are_consistent_across_surveys() {
    let opts = SurveyOptions::default();
    let bip = survey_bipartite_theorem8(5, 8, &opts).unwrap();
    for n in 5..=8 {
        let main: BTreeSet<Vec<u8>> = enumerate_connected(n, &Theorem::Main.filter(n))
            .unwrap()
            .iter()
            .map(|g| canonical_code(g).unwrap())
            .collect();
        for g in enumerate_connected(n, &Theorem::Bipartite.filter(n)).unwrap() {
            let in_main = main.contains(&canonical_code(&g).unwrap());
            let qualifies = g.min_degree() >= n.div_ceil(4) && !g.is_complete();
            assert_eq!(in_main, qualifies, "{}", to_graph6(&g));
        }
    }
    assert!(bip.exceptions.is_empty());
}

#[test]
fn corpus_survey_reproduces_builtin_result() {
    let corpus: String = (5..=8)
        .flat_map(|n| enumerate_connected(n, &Theorem::Main.filter(n)).unwrap())
        .map(|g| to_graph6(&g) + "\n")
        .collect();
    let report = survey_corpus(Theorem::Main, &corpus, &SurveyOptions::default()).unwrap();
    assert_eq!(report.exception_codes(), exception_fixture_codes().unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coloring_and_certificate_files_round_trip(seed in any::<u64>(), n in 2usize..=9) {
        let mut rng = common::rng(seed);
        let g = common::random_connected(&mut rng, n, 0.4);
        let c = common::random_coloring(&mut rng, &g, 3);
        prop_assert_eq!(coloring_from_json(&coloring_to_json(&c), &g).unwrap(), c);
        let cert = pc_upper(&g).unwrap();
        prop_assert_eq!(certificate_from_json(&certificate_to_json(&cert)).unwrap(), cert);
    }
}
