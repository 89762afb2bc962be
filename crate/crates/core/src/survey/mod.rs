//! Exhaustive sweeps over small graphs and the known exceptional graphs.

mod enumerate;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_code, canonical_form};
use crate::coloring::Color;
use crate::constructive::{pc2_pipeline, PcCertificate};
use crate::error::{Error, Result};
use crate::formats::certificate_to_json;
use crate::graph::Graph;
use crate::graph6::{parse_graph6_lines, to_graph6};
use crate::solver::{pc_exact_with, verify_certificate, SolverOptions};

pub use enumerate::{
    enumerate_by_labeled_sweep, enumerate_connected, GraphFilter, ENUMERATE_MAX_VERTICES, SWEEP_MAX_VERTICES,
};

const FIXTURES: &str = include_str!("../../fixtures/exceptions.g6");

/// Which statement a survey checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// Connected, non-complete, `δ ≥ ⌈n/4⌉`.
    Main,
    /// Connected bipartite, `δ ≥ ⌈(n+6)/8⌉`.
    Bipartite,
}

impl Theorem {
    pub fn filter(self, n: usize) -> GraphFilter {
        match self {
            Theorem::Main => GraphFilter {
                min_degree: n.div_ceil(4),
                bipartite: false,
                noncomplete: true,
            },
            Theorem::Bipartite => GraphFilter {
                min_degree: (n + 6).div_ceil(8),
                bipartite: true,
                noncomplete: true,
            },
        }
    }

    /// Orders the built-in enumeration covers for this statement.
    pub fn range(self) -> (usize, usize) {
        match self {
            Theorem::Main => (5, 8),
            Theorem::Bipartite => (4, 9),
        }
    }

    fn min_degree_rule(self) -> &'static str {
        match self {
            Theorem::Main => "ceil(n/4)",
            Theorem::Bipartite => "ceil((n+6)/8)",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurveyOptions {
    /// Wall-clock cap for the exact fallback on one graph.
    pub budget: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FilterDescription {
    pub connected: bool,
    pub noncomplete: bool,
    pub bipartite: bool,
    pub min_degree: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderTotals {
    pub n: usize,
    pub graphs: usize,
    /// Graphs the 2-colouring pipeline could not settle, handed to exact search.
    pub exact_fallbacks: usize,
    pub exceptions: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyException {
    pub n: usize,
    pub graph6: String,
    pub pc: Color,
    pub witness: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Inconclusive {
    pub n: usize,
    pub graph6: String,
    pub lower: usize,
    pub upper: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub n: usize,
    pub seconds: f64,
}

/// Outcome of a sweep. Fields serialize in declaration order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub theorem: Theorem,
    pub n_range: [usize; 2],
    pub filter: FilterDescription,
    pub totals: Vec<OrderTotals>,
    pub exceptions: Vec<SurveyException>,
    pub inconclusive: Vec<Inconclusive>,
    pub timing: Vec<Timing>,
}

impl SurveyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without wall-clock data, for run-to-run comparison.
    pub fn without_timing(&self) -> SurveyReport {
        SurveyReport {
            timing: Vec::new(),
            ..self.clone()
        }
    }

    /// One graph6 line per exception, for the sidecar file.
    pub fn exceptions_graph6(&self) -> String {
        self.exceptions.iter().map(|e| format!("{}\n", e.graph6)).collect()
    }

    /// Canonical codes of the exceptions.
    pub fn exception_codes(&self) -> Vec<String> {
        self.exceptions.iter().map(|e| e.graph6.clone()).collect()
    }
}

enum Verdict {
    Two { fallback: bool },
    Exception(Color, PcCertificate),
    Inconclusive(usize, usize),
}

fn judge(g: &Graph, opts: &SurveyOptions) -> Result<Verdict> {
    if pc2_pipeline(g)?.is_some() {
        return Ok(Verdict::Two { fallback: false });
    }
    let solver = SolverOptions { budget: opts.budget };
    match pc_exact_with(g, None, &solver) {
        Ok((2, _)) => Ok(Verdict::Two { fallback: true }),
        Ok((pc, cert)) => {
            if !verify_certificate(&cert).ok {
                return Err(Error::VerificationFailed(format!("witness for {}", to_graph6(g))));
            }
            Ok(Verdict::Exception(pc, cert))
        }
        Err(Error::SearchBudgetExceeded { lower, upper }) => Ok(Verdict::Inconclusive(lower, upper)),
        Err(e) => Err(e),
    }
}

fn check_range(theorem: Theorem, n_lo: usize, n_hi: usize, hi_limit: usize) -> Result<()> {
    let (lo, _) = theorem.range();
    if n_lo > n_hi {
        return Err(Error::TooSmall("empty order range"));
    }
    if n_lo < lo {
        return Err(Error::TooSmall("order below the statement's range"));
    }
    crate::error::guard("vertex count", n_hi, hi_limit)
}

/// Judge every graph of each order; `graphs_for(n)` supplies the classes.
fn run_survey(
    theorem: Theorem,
    n_lo: usize,
    n_hi: usize,
    opts: &SurveyOptions,
    mut graphs_for: impl FnMut(usize) -> Result<Vec<Graph>>,
) -> Result<SurveyReport> {
    let mut report = SurveyReport {
        theorem,
        n_range: [n_lo, n_hi],
        filter: FilterDescription {
            connected: true,
            noncomplete: true,
            bipartite: theorem == Theorem::Bipartite,
            min_degree: theorem.min_degree_rule().to_string(),
        },
        totals: Vec::new(),
        exceptions: Vec::new(),
        inconclusive: Vec::new(),
        timing: Vec::new(),
    };
    for n in n_lo..=n_hi {
        let start = Instant::now();
        let graphs = graphs_for(n)?;
        let verdicts: Vec<Verdict> = graphs.par_iter().map(|g| judge(g, opts)).collect::<Result<_>>()?;
        let mut totals = OrderTotals {
            n,
            graphs: graphs.len(),
            exact_fallbacks: 0,
            exceptions: 0,
            inconclusive: 0,
        };
        for (g, verdict) in graphs.iter().zip(verdicts) {
            let code = String::from_utf8(canonical_code(g)?).expect("graph6 is ascii");
            match verdict {
                Verdict::Two { fallback } => totals.exact_fallbacks += fallback as usize,
                Verdict::Exception(pc, cert) => {
                    totals.exact_fallbacks += 1;
                    totals.exceptions += 1;
                    report.exceptions.push(SurveyException {
                        n,
                        graph6: code,
                        pc,
                        witness: serde_json::from_str(&certificate_to_json(&cert)).expect("valid json"),
                    });
                }
                Verdict::Inconclusive(lower, upper) => {
                    totals.exact_fallbacks += 1;
                    totals.inconclusive += 1;
                    report.inconclusive.push(Inconclusive {
                        n,
                        graph6: code,
                        lower,
                        upper,
                    });
                }
            }
        }
        report.totals.push(totals);
        report.timing.push(Timing {
            n,
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    Ok(report)
}

/// Every connected non-complete graph with `δ ≥ ⌈n/4⌉`, `5 ≤ n ≤ 8`.
pub fn survey_main_theorem(n_lo: usize, n_hi: usize, opts: &SurveyOptions) -> Result<SurveyReport> {
    check_range(Theorem::Main, n_lo, n_hi, 8)?;
    run_survey(Theorem::Main, n_lo, n_hi, opts, |n| enumerate_connected(n, &Theorem::Main.filter(n)))
}

/// Every connected bipartite graph with `δ ≥ ⌈(n+6)/8⌉`, `4 ≤ n ≤ 9`.
pub fn survey_bipartite_theorem8(n_lo: usize, n_hi: usize, opts: &SurveyOptions) -> Result<SurveyReport> {
    check_range(Theorem::Bipartite, n_lo, n_hi, 9)?;
    run_survey(Theorem::Bipartite, n_lo, n_hi, opts, |n| {
        enumerate_connected(n, &Theorem::Bipartite.filter(n))
    })
}

/// Survey an external graph6 corpus instead of the built-in enumeration.
/// Graphs failing the statement's filter are skipped; isomorphic duplicates are dropped.
pub fn survey_corpus(theorem: Theorem, corpus: &str, opts: &SurveyOptions) -> Result<SurveyReport> {
    let graphs = parse_graph6_lines(corpus)?;
    let mut by_order: std::collections::BTreeMap<usize, std::collections::BTreeMap<u128, Graph>> = Default::default();
    for g in graphs {
        crate::error::guard("vertex count", g.n(), 9)?;
        if theorem.filter(g.n()).accepts(&g) {
            let form = canonical_form(&g)?;
            by_order.entry(g.n()).or_default().entry(form.code).or_insert(form.graph);
        }
    }
    let Some((&lo, _)) = by_order.first_key_value() else {
        return run_survey(theorem, 0, 0, opts, |_| Ok(Vec::new())).map(|mut r| {
            r.totals.clear();
            r.timing.clear();
            r
        });
    };
    let hi = *by_order.last_key_value().unwrap().0;
    run_survey(theorem, lo, hi, opts, |n| {
        Ok(by_order.get(&n).map(|m| m.values().cloned().collect()).unwrap_or_default())
    })
}

/// Four copies of `K_{t,t}`, one distinguished vertex each, the first
/// distinguished vertex joined to the other three. Block `i` occupies
/// vertices `2ti..2ti+2t`, its first `t` vertices forming one side, and its
/// distinguished vertex is `2ti`.
pub fn make_section4_graph(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::TooSmall("part size must be at least 1"));
    }
    crate::error::guard("vertex count", 8 * t, crate::graph::MAX_VERTICES)?;
    let mut pairs = Vec::new();
    for i in 0..4 {
        let base = 2 * t * i;
        for a in 0..t {
            for b in 0..t {
                pairs.push((base + a, base + t + b));
            }
        }
    }
    for j in 1..4 {
        pairs.push((0, 2 * t * j));
    }
    Graph::from_edge_list(8 * t, &pairs)
}

/// The two exceptional graphs `(G1 on 7 vertices, G2 on 8 vertices)` recorded
/// in the checked-in fixtures.
pub fn exceptional_graphs() -> Result<(Graph, Graph)> {
    exceptional_graphs_from(FIXTURES)
}

fn exceptional_graphs_from(text: &str) -> Result<(Graph, Graph)> {
    let graphs = parse_graph6_lines(text)?;
    let g1 = graphs.iter().find(|g| g.n() == 7).cloned().ok_or(Error::FixturesMissing)?;
    let g2 = graphs.iter().find(|g| g.n() == 8).cloned().ok_or(Error::FixturesMissing)?;
    if cut_vertex_with_triangles(&g1).is_none() {
        return Err(Error::BadCertificate("7-vertex fixture lacks the expected cut vertex"));
    }
    Ok((g1, g2))
}

/// The raw fixture lines, for comparison with survey output.
pub fn exception_fixture_codes() -> Result<Vec<String>> {
    let graphs = parse_graph6_lines(FIXTURES)?;
    if graphs.is_empty() {
        return Err(Error::FixturesMissing);
    }
    graphs
        .iter()
        .map(|g| Ok(String::from_utf8(canonical_code(g)?).expect("graph6 is ascii")))
        .collect()
}

/// A cut vertex whose removal leaves exactly three components of two
/// vertices, each forming a triangle with it.
pub fn cut_vertex_with_triangles(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&c| {
        let rest = g.all_vertices() & !(1 << c);
        let comps = g.components_within(rest);
        comps.len() == 3
            && comps.iter().all(|&comp| {
                comp.count_ones() == 2 && {
                    let vs: Vec<usize> = crate::graph::iter_bits(comp).collect();
                    g.has_edge(vs[0], vs[1]) && g.has_edge(c, vs[0]) && g.has_edge(c, vs[1])
                }
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn section4_shape() {
        let g = make_section4_graph(2).unwrap();
        assert_eq!((g.n(), g.m(), g.min_degree()), (16, 19, 2));
        assert!(g.is_connected());
        let g1 = make_section4_graph(1).unwrap();
        assert_eq!((g1.n(), g1.min_degree()), (8, 1));
    }

    #[test]
    fn thresholds() {
        for n in 5..=8 {
            assert_eq!(Theorem::Main.filter(n).min_degree, 2);
        }
        for n in 4..=9 {
            assert_eq!(Theorem::Bipartite.filter(n).min_degree, 2);
        }
    }

    #[test]
    fn friendship_has_the_cut_vertex() {
        assert_eq!(cut_vertex_with_triangles(&Graph::friendship(3)), Some(0));
        assert_eq!(cut_vertex_with_triangles(&Graph::cycle(7)), None);
    }

    #[test]
    fn missing_fixtures_refused() {
        assert_eq!(exceptional_graphs_from("# nothing yet\n"), Err(Error::FixturesMissing));
    }

    #[test]
    fn small_main_survey_is_clean() {
        let report = survey_main_theorem(5, 6, &SurveyOptions::default()).unwrap();
        assert!(report.exceptions.is_empty());
        assert_eq!(report.totals.len(), 2);
    }

    #[test]
    fn range_guards() {
        assert!(matches!(survey_main_theorem(5, 9, &SurveyOptions::default()), Err(Error::TooLarge { .. })));
        assert!(survey_main_theorem(4, 5, &SurveyOptions::default()).is_err());
    }
}
