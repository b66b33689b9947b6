//! Covering edges with disjoint matchings: `nu_k`, `lambda`, `mu`, the sets
//! of optimal pairs, and the greedy two-matching baseline.

mod search;
pub mod small;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{DisjointPair, Edge, Graph, Matching};
use crate::limits::Limits;
use crate::matching::{matching_number, max_matching};
use crate::{Error, Result};

use search::{Assignment, Goal, UNUSED};

/// Exact parameters of one graph with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamsReport {
    pub n: usize,
    pub m: usize,
    pub nu: usize,
    pub lambda: usize,
    pub mu: usize,
    pub mu_prime: usize,
    /// `k -> nu_k`; always holds `1 -> nu` and `2 -> lambda`.
    pub nu_k: BTreeMap<usize, usize>,
    pub max_matching: Matching,
    /// A pair in `Lambda_mu`.
    pub pair: DisjointPair,
}

impl ParamsReport {
    /// `mu / nu` in lowest terms.
    pub fn ratio(&self) -> Result<(usize, usize)> {
        ratio(self.mu, self.nu)
    }
}

/// `(p / g, q / g)` for `g = gcd(p, q)`; undefined when `q = 0`.
pub fn ratio(p: usize, q: usize) -> Result<(usize, usize)> {
    if q == 0 {
        return Err(Error::UndefinedRatio);
    }
    let (mut a, mut b) = (p, q);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    Ok((p / a, q / a))
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    n: usize,
    m: usize,
    nu: usize,
    lambda: usize,
    mu: usize,
    mu_prime: usize,
    ratio: Option<[usize; 2]>,
    nu_k: BTreeMap<String, usize>,
    witnesses: WitnessJson,
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    max_matching: Vec<Edge>,
    #[serde(rename = "H")]
    h: Vec<Edge>,
    #[serde(rename = "H_prime")]
    h_prime: Vec<Edge>,
}

impl Serialize for ParamsReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ReportJson {
            n: self.n,
            m: self.m,
            nu: self.nu,
            lambda: self.lambda,
            mu: self.mu,
            mu_prime: self.mu_prime,
            ratio: self.ratio().ok().map(|(p, q)| [p, q]),
            nu_k: self.nu_k.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            witnesses: WitnessJson {
                max_matching: self.max_matching.edges().to_vec(),
                h: self.pair.h.edges().to_vec(),
                h_prime: self.pair.h_prime.edges().to_vec(),
            },
        }
        .serialize(s)
    }
}

/// `k` pairwise disjoint matchings covering `size` edges in total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub size: usize,
    pub matchings: Vec<Matching>,
}

fn cover_from(g: &Graph, a: &Assignment, k: usize) -> Cover {
    let matchings = a
        .classes_by_size(k)
        .into_iter()
        .map(|c| Matching::from_unchecked(a.class(g, c)))
        .collect();
    Cover { size: a.total, matchings }
}

/// Repeatedly removes a maximum matching; the colours of the result.
fn greedy_colours(g: &Graph, k: usize) -> Vec<u8> {
    let mut colours = vec![UNUSED; g.edge_count()];
    let mut rest = g.clone();
    for c in 0..k {
        let m = max_matching(&rest);
        for e in m.edges() {
            colours[g.edge_index(*e).expect("subgraph edge")] = c as u8;
        }
        rest = rest.without_edges(m.edges());
    }
    colours
}

fn path_colours(g: &Graph, limits: &Limits) -> Option<Vec<u8>> {
    if g.n() > limits.hamiltonian_vertices || !g.is_connected() {
        return None;
    }
    let path = g.hamiltonian_path(limits).ok()??;
    let mut colours = vec![UNUSED; g.edge_count()];
    for (i, w) in path.windows(2).enumerate() {
        colours[g.edge_index(Edge::new(w[0], w[1]))?] = (i % 2) as u8;
    }
    Some(colours)
}

/// `sum_v min(deg v, k) / 2`, the per-vertex capacity bound.
fn capacity_bound(g: &Graph, k: usize) -> usize {
    g.vertices().map(|v| g.degree(v).min(k)).sum::<usize>() / 2
}

/// Two matchings cover at most `|C|` edges of a component `C`, and only an
/// even component can reach that (a spanning union of alternating cycles).
fn parity_bound(g: &Graph) -> usize {
    let mut comp = vec![usize::MAX; g.n()];
    let mut sizes = Vec::new();
    let mut edges = Vec::new();
    for s in g.vertices() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        comp[s] = id;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for &w in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
        edges.push(0usize);
    }
    for e in g.edges() {
        edges[comp[e.u()]] += 1;
    }
    sizes
        .iter()
        .zip(&edges)
        .map(|(&c, &m)| m.min(c - c % 2))
        .sum()
}

fn total_ceiling(g: &Graph, k: usize, nu: usize) -> usize {
    let mut ceiling = g.edge_count().min(capacity_bound(g, k)).min(k * nu);
    if k == 2 {
        ceiling = ceiling.min(parity_bound(g));
    }
    ceiling
}

/// `nu_k(g)` with `k` witnessing matchings, largest first.
pub fn nu_k(g: &Graph, k: usize, limits: &Limits) -> Result<Cover> {
    if !(1..=4).contains(&k) {
        return Err(Error::Precondition(format!("k must be in 1..=4, got {k}")));
    }
    if k == 1 {
        let m = max_matching(g);
        return Ok(Cover { size: m.len(), matchings: vec![m] });
    }
    Limits::check("cover solver edge", limits.solver_edges, g.edge_count())?;
    let nu = matching_number(g);
    let mut incumbent = Assignment::from_colours(greedy_colours(g, k), k);
    if k == 2 {
        if let Some(p) = path_colours(g, limits) {
            let p = Assignment::from_colours(p, k);
            if p.total > incumbent.total {
                incumbent = p;
            }
        }
    }
    let ceiling = total_ceiling(g, k, nu);
    let best = search::optimize(g, k, Goal::Total, incumbent, (ceiling, 0));
    Ok(cover_from(g, &best, k))
}

fn solve_pair(g: &Graph, limits: &Limits) -> Result<(Matching, Assignment)> {
    Limits::check("cover solver edge", limits.solver_edges, g.edge_count())?;
    let m = max_matching(g);
    let nu = m.len();
    let mut incumbent = Assignment::from_colours(greedy_colours(g, 2), 2);
    if let Some(p) = path_colours(g, limits) {
        let p = Assignment::from_colours(p, 2);
        if (p.total, p.largest) > (incumbent.total, incumbent.largest) {
            incumbent = p;
        }
    }
    let ceiling = (total_ceiling(g, 2, nu), nu);
    Ok((m, search::optimize(g, 2, Goal::TotalThenLargest, incumbent, ceiling)))
}

fn pair_from(g: &Graph, a: &Assignment) -> DisjointPair {
    DisjointPair::normalized(
        Matching::from_unchecked(a.class(g, 0)),
        Matching::from_unchecked(a.class(g, 1)),
    )
}

/// Exact `nu`, `lambda`, `mu` and `mu'` with a maximum matching and a pair
/// in `Lambda_mu` as witnesses.
pub fn lambda_mu(g: &Graph, limits: &Limits) -> Result<ParamsReport> {
    let (m, best) = solve_pair(g, limits)?;
    let nu = m.len();
    Ok(ParamsReport {
        n: g.n(),
        m: g.edge_count(),
        nu,
        lambda: best.total,
        mu: best.largest,
        mu_prime: best.total - best.largest,
        nu_k: BTreeMap::from([(1, nu), (2, best.total)]),
        max_matching: m,
        pair: pair_from(g, &best),
    })
}

/// [`lambda_mu`] plus `nu_k` for each requested `k` in `1..=4`.
pub fn params_report(g: &Graph, ks: &[usize], limits: &Limits) -> Result<ParamsReport> {
    let mut report = lambda_mu(g, limits)?;
    for &k in ks {
        if let std::collections::btree_map::Entry::Vacant(e) = report.nu_k.entry(k) {
            e.insert(nu_k(g, k, limits)?.size);
        }
    }
    Ok(report)
}

/// All pairs in `Lambda(g)`, or in `Lambda_mu(g)` when `mu_only`, each
/// unordered pair once and normalized to `|H| >= |H'|`. The order is the
/// deterministic search order.
pub fn enumerate_lambda_pairs(g: &Graph, mu_only: bool, limits: &Limits) -> Result<Vec<DisjointPair>> {
    Limits::check("pair enumeration edge", limits.enumeration_edges, g.edge_count())?;
    let (_, best) = solve_pair(g, &Limits { solver_edges: usize::MAX, ..*limits })?;
    let found = search::collect(g, 2, best.total, mu_only.then_some(best.largest));
    Ok(found
        .into_iter()
        .map(|colours| pair_from(g, &Assignment::from_colours(colours, 2)))
        .collect())
}

/// A maximum matching, then a maximum matching of the remaining edges.
pub fn greedy_two_cover(g: &Graph) -> (usize, DisjointPair) {
    let h = max_matching(g);
    let h_prime = max_matching(&g.without_edges(h.edges()));
    let total = h.len() + h_prime.len();
    (total, DisjointPair::normalized(h, h_prime))
}
