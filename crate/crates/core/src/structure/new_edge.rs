//! Adding one edge: when does `lambda` grow?

use serde::Serialize;

use crate::cover::{enumerate_lambda_pairs, lambda_mu};
use crate::graph::{DisjointPair, Graph, Vertex};
use crate::limits::Limits;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonEdgeOutcome {
    pub u: Vertex,
    pub v: Vertex,
    pub lambda_after: usize,
    /// Some pair in `Lambda` leaves `u` and `v` both uncovered by one class.
    pub predicted: bool,
    pub increased: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewEdgeReport {
    pub check: &'static str,
    pub lambda: usize,
    pub pairs: usize,
    pub non_edges: usize,
    pub passed: bool,
    pub violations: Vec<NonEdgeOutcome>,
}

fn frees_both(pair: &DisjointPair, u: Vertex, v: Vertex) -> bool {
    let free = |m: &crate::graph::Matching| !m.saturates(u) && !m.saturates(v);
    free(&pair.h) || free(&pair.h_prime)
}

/// For every non-adjacent `u, v`: `lambda(g + uv) > lambda(g)` exactly when
/// some pair in `Lambda(g)` leaves both unsaturated in one of its matchings.
pub fn check_new_edge_lemma(g: &Graph, limits: &Limits) -> Result<NewEdgeReport> {
    Limits::check("new-edge edge", limits.new_edge_edges, g.edge_count())?;
    let pairs = enumerate_lambda_pairs(g, false, &Limits { enumeration_edges: usize::MAX, ..*limits })?;
    let lambda = pairs[0].total();
    let unbounded = Limits { solver_edges: usize::MAX, ..*limits };
    let mut violations = Vec::new();
    let mut non_edges = 0;
    for u in g.vertices() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            non_edges += 1;
            let lambda_after = lambda_mu(&g.with_edge(u, v)?, &unbounded)?.lambda;
            let predicted = pairs.iter().any(|p| frees_both(p, u, v));
            let increased = lambda_after > lambda;
            if predicted != increased {
                violations.push(NonEdgeOutcome { u, v, lambda_after, predicted, increased });
            }
        }
    }
    Ok(NewEdgeReport {
        check: "new_edge",
        lambda,
        pairs: pairs.len(),
        non_edges,
        passed: violations.is_empty(),
        violations,
    })
}
