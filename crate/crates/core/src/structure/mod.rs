//! Intersection triples, alternating-path properties, diamond-spanner
//! detection and the new-edge criterion.

mod augpaths;
mod detect;
mod new_edge;

pub use augpaths::{
    check_augpaths, max_intersection_triple, maximal_alternating_paths, AlternatingPath,
    AugpathsReport, IntersectionTriple, PathVerdict,
};
pub use detect::{
    find_diamond_spanner, find_embedding, find_pattern_family, verify_theorem2, DetectionWitness,
    Theorem2Verdict,
};
pub use new_edge::{check_new_edge_lemma, NewEdgeReport, NonEdgeOutcome};
