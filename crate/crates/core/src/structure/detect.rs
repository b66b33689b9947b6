//! Subgraph detection for diamond spanners.

use serde::Serialize;

use crate::constructions::{make_diamond_spanner, DiamondSpannerSpec};
use crate::cover::{self, small::SmallGraph};
use crate::graph::{Graph, Vertex};
use crate::limits::Limits;
use crate::{Error, Result};

/// `embedding[p]` is the host vertex of pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DetectionWitness {
    pub d: usize,
    pub embedding: Vec<Vertex>,
}

/// An injective map from pattern vertices to host vertices carrying every
/// pattern edge onto a host edge (a not necessarily induced subgraph).
pub fn find_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<Vertex>> {
    let p = pattern.n();
    if p > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    if p == 0 {
        return Some(Vec::new());
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; p];
    let mut used = vec![false; host.n()];
    if place(pattern, host, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Pattern vertices in an order where each one after the first of its
/// component has an earlier neighbour; components start at a highest-degree
/// vertex.
fn search_order(pattern: &Graph) -> Vec<Vertex> {
    let mut order = Vec::with_capacity(pattern.n());
    let mut seen = vec![false; pattern.n()];
    let mut starts: Vec<Vertex> = pattern.vertices().collect();
    starts.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut i = order.len();
        order.push(s);
        while i < order.len() {
            let v = order[i];
            i += 1;
            let mut next: Vec<Vertex> = pattern.neighbors(v).iter().copied().filter(|&w| !seen[w]).collect();
            next.sort_by_key(|&w| std::cmp::Reverse(pattern.degree(w)));
            for w in next {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

fn place(
    pattern: &Graph,
    host: &Graph,
    order: &[Vertex],
    i: usize,
    map: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(i) else { return true };
    let anchor = pattern.neighbors(v).iter().copied().find(|&w| map[w] != usize::MAX);
    let candidates: Vec<Vertex> = match anchor {
        Some(a) => host.neighbors(map[a]).to_vec(),
        None => host.vertices().collect(),
    };
    for c in candidates {
        if used[c] || host.degree(c) < pattern.degree(v) {
            continue;
        }
        let fits = pattern
            .neighbors(v)
            .iter()
            .all(|&w| map[w] == usize::MAX || host.has_edge(c, map[w]));
        if !fits {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if place(pattern, host, order, i + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[c] = false;
    }
    false
}

/// First `d` in `0..=max_d` whose pattern embeds into `g`.
pub fn find_pattern_family<F>(g: &Graph, max_d: usize, pattern: F) -> Option<DetectionWitness>
where
    F: Fn(usize) -> Graph,
{
    (0..=max_d).find_map(|d| {
        find_embedding(&pattern(d), g).map(|embedding| DetectionWitness { d, embedding })
    })
}

/// Searches `D_0, D_1, ...` up to `floor((n - 10) / 4)`; the patterns are not
/// nested, so every size is tried.
pub fn find_diamond_spanner(g: &Graph) -> Option<DetectionWitness> {
    if g.n() < 10 {
        return None;
    }
    find_pattern_family(g, (g.n() - 10) / 4, |d| {
        make_diamond_spanner(DiamondSpannerSpec::new(d)).expect("valid diamond spec")
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Verdict {
    pub check: &'static str,
    pub nu: usize,
    pub mu: usize,
    pub ratio_lt_one: bool,
    /// Only searched when `mu < nu`.
    pub detector_found: Option<bool>,
    pub witness: Option<DetectionWitness>,
    pub consistent: bool,
}

/// `(nu, mu)` exactly; bitmask evaluation for small graphs, branch and bound
/// otherwise.
pub(crate) fn nu_mu(g: &Graph, limits: &Limits) -> Result<(usize, usize)> {
    match SmallGraph::from_graph(g) {
        Some(s) => Ok(s.nu_mu()),
        None => cover::lambda_mu(g, limits).map(|r| (r.nu, r.mu)),
    }
}

/// If `mu < nu` the graph must contain a diamond spanner; `mu = nu` asserts
/// nothing.
pub fn verify_theorem2(g: &Graph, limits: &Limits) -> Result<Theorem2Verdict> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (nu, mu) = nu_mu(g, limits)?;
    let ratio_lt_one = mu < nu;
    let witness = if ratio_lt_one { find_diamond_spanner(g) } else { None };
    let detector_found = ratio_lt_one.then_some(witness.is_some());
    Ok(Theorem2Verdict {
        check: "theorem2",
        nu,
        mu,
        ratio_lt_one,
        detector_found,
        consistent: !ratio_lt_one || witness.is_some(),
        witness,
    })
}
