//! Toolkit for the proper connection number `pc(G)` of small graphs.
//!
//! * [`graph`], [`graph6`], [`bridges`], [`maxcut`], [`canon`]: immutable graphs,
//!   decompositions and canonical codes.
//! * [`hamilton`]: exact spanning path/cycle search.
//! * [`coloring`]: exact proper-path connectivity and the strong property.
//! * [`constructive`]: certificate-producing colorings, each re-verified.
//! * [`solver`]: exact `pc` by exhaustive search with constructive upper bounds.
//! * [`survey`]: isomorph-free enumeration and exhaustive theorem sweeps.
//! * [`formats`]: edge-list, coloring and certificate files.

pub mod bridges;
pub mod canon;
pub mod coloring;
pub mod constructive;
pub mod error;
pub mod formats;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod maxcut;
pub mod search;
pub mod solver;
pub mod survey;

pub use coloring::{Color, EdgeColoring, PathProfile};
pub use constructive::{PcCertificate, Strategy};
pub use error::{Error, Result};
pub use graph::{Bipartition, Edge, Graph, VertexSet};
pub use bridges::BridgeBlockTree;
pub use survey::SurveyReport;
