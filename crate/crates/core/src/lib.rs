//! Exact chromatic numbers, the edge-count bound `|E| >= chi(chi-1)/2 + |V| - chi`
//! for connected graphs, a structural recognizer for the graphs attaining it,
//! and an exhaustive/randomized harness that checks the characterization on
//! small graphs.
//!
//! ```
//! use chigap::{extremal, Graph};
//!
//! let g = Graph::cycle(5);
//! let report = extremal::gap(&g).unwrap();
//! assert_eq!((report.chi, report.gap), (3, 0));
//! assert_eq!(extremal::classify(&g).unwrap().kind, extremal::Kind::TypeB { cycle_length: 5 });
//! ```

pub mod coloring;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod oracle;

pub use coloring::{chromatic_number, is_k_colorable, verify_coloring, Coloring};
pub use extremal::{build_decorated, classify, gap, strip_to_core, Classification, GapReport, Kind};
pub use graph::{Graph, GraphError, VertexId};
pub use io::{from_graph6, to_graph6, Format, FormatError};
