//! Maximum matchings: cardinality, lexicographic tie-breaking and an
//! exhaustive oracle.

mod blossom;
mod weighted;

use crate::graph::{Edge, Graph, Matching};
use crate::limits::Limits;
use crate::{Error, Result};

pub(crate) use weighted::max_weight_matching;

/// A maximum-cardinality matching. Deterministic for a given graph.
pub fn max_matching(g: &Graph) -> Matching {
    let mates = blossom::maximum_mates(g);
    Matching::from_unchecked(mates_to_edges(&mates))
}

/// The matching number `nu(g)`.
pub fn matching_number(g: &Graph) -> usize {
    blossom::maximum_mates(g).iter().filter(|&&m| m != usize::MAX).count() / 2
}

fn mates_to_edges(mates: &[usize]) -> Vec<Edge> {
    mates
        .iter()
        .enumerate()
        .filter(|&(v, &m)| m != usize::MAX && v < m)
        .map(|(v, &m)| Edge::new(v, m))
        .collect()
}

/// Three-tier integer edge weight: cardinality first, then membership in `a`,
/// then membership in `b`.
///
/// `w(e) = K^2 + K*[e in a] + [e in b]` with `K = 2|E| + 3`. A matching has at
/// most `|E|` edges, so the lower tiers sum to at most `|E|(K + 1) < K^2` and
/// the last tier to at most `|E| < K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedObjective {
    pub k: i64,
}

impl WeightedObjective {
    pub fn for_graph(g: &Graph) -> Self {
        WeightedObjective { k: 2 * g.edge_count() as i64 + 3 }
    }

    pub fn weight(&self, in_a: bool, in_b: bool) -> i64 {
        self.k * self.k + self.k * i64::from(in_a) + i64::from(in_b)
    }

    /// Splits a total weight back into `(|M|, |M & a|, |M & b|)`.
    pub fn decode(&self, total: i64) -> (usize, usize, usize) {
        let k2 = self.k * self.k;
        let size = total / k2;
        let rest = total % k2;
        (size as usize, (rest / self.k) as usize, (rest % self.k) as usize)
    }
}

/// Among maximum matchings, one maximizing `|M & a|` and then `|M & b|`.
///
/// Requires `b` within `a` within `E(g)`.
pub fn max_matching_lex(g: &Graph, a: &[Edge], b: &[Edge]) -> Result<Matching> {
    if let Some(e) = a.iter().find(|e| !g.contains_edge(**e)) {
        return Err(Error::Precondition(format!("edge {e} of a is not in the graph")));
    }
    if let Some(e) = b.iter().find(|e| !a.contains(e)) {
        return Err(Error::Precondition(format!("edge {e} of b is not in a")));
    }
    let objective = WeightedObjective::for_graph(g);
    let weighted: Vec<(usize, usize, i64)> = g
        .edges()
        .iter()
        .map(|e| (e.u(), e.v(), objective.weight(a.contains(e), b.contains(e))))
        .collect();
    let mates = max_weight_matching(g.n(), &weighted, false);
    let mates: Vec<usize> = mates.into_iter().map(|m| m.unwrap_or(usize::MAX)).collect();
    Ok(Matching::from_unchecked(mates_to_edges(&mates)))
}

/// Maximum matching by exhaustive include/exclude search over edges.
/// Intended as an oracle; refuses graphs above `limits.brute_force_edges`.
pub fn brute_force_matching(g: &Graph, limits: &Limits) -> Result<Matching> {
    Limits::check("brute-force matching edges", limits.brute_force_edges, g.edge_count())?;
    let mut used = vec![false; g.n()];
    let mut current = Vec::new();
    let mut best = Vec::new();
    exhaust(g.edges(), 0, &mut used, &mut current, &mut best);
    Ok(Matching::from_unchecked(best))
}

fn exhaust(edges: &[Edge], i: usize, used: &mut [bool], cur: &mut Vec<Edge>, best: &mut Vec<Edge>) {
    if cur.len() > best.len() {
        best.clone_from(cur);
    }
    if i == edges.len() || cur.len() + (edges.len() - i) <= best.len() {
        return;
    }
    let e = edges[i];
    if !used[e.u()] && !used[e.v()] {
        used[e.u()] = true;
        used[e.v()] = true;
        cur.push(e);
        exhaust(edges, i + 1, used, cur, best);
        cur.pop();
        used[e.u()] = false;
        used[e.v()] = false;
    }
    exhaust(edges, i + 1, used, cur, best);
}
