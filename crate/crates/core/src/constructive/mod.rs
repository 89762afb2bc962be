//! Certificate-producing colourings.
//!
//! Every constructor re-runs the exact checker on its output before returning
//! it; a certificate with `verified == true` has passed [`crate::coloring`]'s
//! path enumeration, never just a construction argument.

mod bridgeless;
mod extend;
mod glue;
mod pipeline;
mod substructure;
mod tree;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::{first_unconnected_pair, first_weak_pair, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use bridgeless::{strong_coloring_bridgeless, BRIDGELESS_MAX_VERTICES};
pub use extend::{extend_two_vertices, extend_vertex};
pub use glue::{color_by_bridge_blocks, glue_across_bridge, GlueEmbedding, Piece};
pub use pipeline::{pc2_pipeline, PIPELINE_MAX_VERTICES};
pub use substructure::substructure_s;
pub use tree::{color_hamilton_path, color_spanning_tree, color_tree};

pub(crate) use bridgeless::strong_coloring_unguarded;

/// How a certificate was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Complete,
    HamiltonPath,
    Tree,
    BipartiteBridgeless,
    #[serde(rename = "bridgeless_3")]
    Bridgeless3,
    Glue,
    Extend,
    #[serde(rename = "substructure_S")]
    SubstructureS,
    Pipeline,
    Exhaustive,
}

impl Strategy {
    pub fn tag(self) -> &'static str {
        match self {
            Strategy::Complete => "complete",
            Strategy::HamiltonPath => "hamilton_path",
            Strategy::Tree => "tree",
            Strategy::BipartiteBridgeless => "bipartite_bridgeless",
            Strategy::Bridgeless3 => "bridgeless_3",
            Strategy::Glue => "glue",
            Strategy::Extend => "extend",
            Strategy::SubstructureS => "substructure_S",
            Strategy::Pipeline => "pipeline",
            Strategy::Exhaustive => "exhaustive",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::BadCertificate("unknown strategy tag"))
    }
}

/// A colouring together with the claims it certifies.
///
/// `k` is the palette size; the colouring uses only colours `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcCertificate {
    coloring: EdgeColoring,
    k: Color,
    strategy: Strategy,
    strong: bool,
    verified: bool,
}

impl PcCertificate {
    /// Verify `coloring` and wrap it. With `want_strong` the strong property is
    /// checked too and recorded when it holds.
    pub fn certify(coloring: EdgeColoring, strategy: Strategy, want_strong: bool) -> Result<PcCertificate> {
        if let Some((u, v)) = first_unconnected_pair(&coloring)? {
            return Err(Error::VerificationFailed(format!(
                "{strategy}: no proper path between {u} and {v}"
            )));
        }
        let strong = want_strong && first_weak_pair(&coloring)?.is_none();
        Ok(PcCertificate {
            k: coloring.k(),
            coloring,
            strategy,
            strong,
            verified: true,
        })
    }

    /// Like [`PcCertificate::certify`] but fails unless the strong property holds.
    pub fn certify_strong(coloring: EdgeColoring, strategy: Strategy) -> Result<PcCertificate> {
        let cert = PcCertificate::certify(coloring, strategy, true)?;
        if !cert.strong {
            let pair = first_weak_pair(&cert.coloring)?.unwrap_or((0, 0));
            return Err(Error::VerificationFailed(format!(
                "{strategy}: strong property fails at {pair:?}"
            )));
        }
        Ok(cert)
    }

    /// Assemble claims without checking them, e.g. when reading a file.
    pub fn from_claims(coloring: EdgeColoring, k: Color, strategy: Strategy, strong: bool, verified: bool) -> PcCertificate {
        PcCertificate {
            coloring,
            k,
            strategy,
            strong,
            verified,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.coloring.graph()
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn strong(&self) -> bool {
        self.strong
    }

    pub fn verified(&self) -> bool {
        self.verified
    }

    /// Re-certify on a spanning supergraph, filling new edges with colour 1.
    pub fn lift_to(&self, supergraph: &Graph, strategy: Strategy) -> Result<PcCertificate> {
        PcCertificate::certify(self.coloring.lift_to(supergraph, 1)?, strategy, false)
    }
}

/// `K_n` with every edge coloured 1.
pub fn color_complete(g: &Graph) -> Result<PcCertificate> {
    if !g.is_complete() {
        return Err(Error::BadCertificate("graph is not complete"));
    }
    PcCertificate::certify(EdgeColoring::uniform(g.clone(), 1), Strategy::Complete, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategy_tags_round_trip() {
        for s in [
            Strategy::Complete,
            Strategy::HamiltonPath,
            Strategy::Tree,
            Strategy::BipartiteBridgeless,
            Strategy::Bridgeless3,
            Strategy::Glue,
            Strategy::Extend,
            Strategy::SubstructureS,
            Strategy::Pipeline,
            Strategy::Exhaustive,
        ] {
            assert_eq!(s.tag().parse::<Strategy>().unwrap(), s);
        }
    }

    #[test]
    fn certify_rejects_improper() {
        let c = EdgeColoring::new(Graph::path(3), 2, vec![1, 1]).unwrap();
        assert!(matches!(
            PcCertificate::certify(c, Strategy::Tree, false),
            Err(Error::VerificationFailed(_))
        ));
    }

    #[test]
    fn complete_certificate() {
        let cert = color_complete(&Graph::complete(5)).unwrap();
        assert_eq!(cert.k(), 1);
        assert!(cert.verified());
        assert!(color_complete(&Graph::path(3)).is_err());
    }
}
