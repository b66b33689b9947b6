//! Exact computation of the disjoint-matchings parameters of small graphs.
//!
//! For a finite simple graph `G` the crate computes
//!
//! * `nu` — the matching number,
//! * `lambda` — the largest `|H| + |H'|` over pairs of edge-disjoint matchings
//!   (the size of a maximum 2-edge-colorable subgraph),
//! * `mu` — the largest `|H|` among pairs reaching `lambda`, and
//!   `mu' = lambda - mu`,
//! * `nu_k` for `k <= 4` — the most edges coverable by `k` disjoint matchings,
//!
//! together with witnesses. On top of the solvers sit builders for the spanner
//! graph family (graphs whose ratio `mu / nu` sits strictly below one), the
//! alternating-path analysis of maximum intersection triples, a subgraph
//! detector for diamond spanners and a batch harness that runs all of the
//! structural checks over enumerated or random graphs.
//!
//! ```
//! use matchcover::{constructions, cover, Limits};
//!
//! let spanner = constructions::make_spanner(constructions::SpannerSpec::new(0, 0)).unwrap();
//! let report = cover::lambda_mu(&spanner.graph, &Limits::default()).unwrap();
//! assert_eq!((report.nu, report.lambda, report.mu), (5, 8, 4));
//! assert_eq!(report.ratio().unwrap(), (4, 5));
//! ```

pub mod cli;
pub mod constructions;
pub mod cover;
mod error;
pub mod graph;
pub mod harness;
mod limits;
pub mod matching;
pub mod structure;

pub use error::{Error, Graph6Error, ParseErrorKind, Result};
pub use graph::{DisjointPair, Edge, Graph, Matching, Vertex};
pub use limits::Limits;
