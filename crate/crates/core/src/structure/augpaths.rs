//! Maximum intersection triples and the alternating paths they induce.

use serde::Serialize;

use crate::cover::enumerate_lambda_pairs;
use crate::graph::{Edge, Graph, Matching, Vertex};
use crate::limits::Limits;
use crate::matching::max_matching_lex;
use crate::{Error, Result};

/// `(M, H, H')`: `M` maximum, `(H, H')` in `Lambda_mu`, with
/// `|M & (H | H')|` and then `|M & H|` as large as possible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionTriple {
    pub m: Matching,
    pub h: Matching,
    pub h_prime: Matching,
}

impl IntersectionTriple {
    /// `(|M & (H | H')|, |M & H|)`.
    pub fn score(&self) -> (usize, usize) {
        let with_h = self.m.intersection_len(self.h.edges());
        (with_h + self.m.intersection_len(self.h_prime.edges()), with_h)
    }
}

/// Scans `Lambda_mu` in enumeration order (both orientations of a pair when
/// its classes have equal size) and keeps the first best triple.
pub fn max_intersection_triple(g: &Graph, limits: &Limits) -> Result<IntersectionTriple> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let mut best: Option<(IntersectionTriple, (usize, usize))> = None;
    for pair in enumerate_lambda_pairs(g, true, limits)? {
        let mut orientations = vec![(pair.h.clone(), pair.h_prime.clone())];
        if pair.h.len() == pair.h_prime.len() {
            orientations.push((pair.h_prime.clone(), pair.h.clone()));
        }
        for (h, h_prime) in orientations {
            let mut a: Vec<Edge> = h.edges().iter().chain(h_prime.edges()).copied().collect();
            a.sort();
            let m = max_matching_lex(g, &a, h.edges())?;
            let triple = IntersectionTriple { m, h, h_prime };
            let score = triple.score();
            if best.as_ref().is_none_or(|(_, s)| score > *s) {
                best = Some((triple, score));
            }
        }
    }
    Ok(best.expect("Lambda_mu is never empty").0)
}

/// A component of the symmetric difference of two matchings: a simple path
/// oriented from its smaller end, or a cycle starting at its smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternatingPath {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub cycle: bool,
}

impl AlternatingPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn interior(&self) -> &[Vertex] {
        if self.cycle {
            &self.vertices
        } else if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn end_edges(&self) -> Vec<Edge> {
        match (self.cycle, self.edges.first(), self.edges.last()) {
            (false, Some(&a), Some(&b)) if a == b => vec![a],
            (false, Some(&a), Some(&b)) => vec![a, b],
            _ => Vec::new(),
        }
    }
}

/// The maximal `M`-`H` alternating paths: components of `M ^ H`. Every edge
/// of the symmetric difference lies in exactly one of them.
pub fn maximal_alternating_paths(g: &Graph, m: &Matching, h: &Matching) -> Vec<AlternatingPath> {
    let n = g.n();
    // at most one edge of each kind per vertex
    let mut from_m = vec![None; n];
    let mut from_h = vec![None; n];
    for &e in m.edges() {
        if !h.contains(e) {
            from_m[e.u()] = Some(e);
            from_m[e.v()] = Some(e);
        }
    }
    for &e in h.edges() {
        if !m.contains(e) {
            from_h[e.u()] = Some(e);
            from_h[e.v()] = Some(e);
        }
    }
    let degree = |v: usize| usize::from(from_m[v].is_some()) + usize::from(from_h[v].is_some());
    let mut visited = vec![false; n];
    let mut out = Vec::new();

    let walk = |start: Vertex, first: Edge, visited: &mut Vec<bool>| {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let mut v = start;
        let mut e = first;
        visited[start] = true;
        loop {
            edges.push(e);
            let w = e.other(v);
            if w == start {
                break;
            }
            vertices.push(w);
            visited[w] = true;
            let next = if from_m[w] == Some(e) { from_h[w] } else { from_m[w] };
            match next {
                Some(f) => {
                    v = w;
                    e = f;
                }
                None => break,
            }
        }
        (vertices, edges)
    };

    for v in 0..n {
        if !visited[v] && degree(v) == 1 {
            let first = from_m[v].or(from_h[v]).unwrap();
            let (vertices, edges) = walk(v, first, &mut visited);
            out.push(AlternatingPath { vertices, edges, cycle: false });
        }
    }
    for v in 0..n {
        if !visited[v] && degree(v) == 2 {
            let (a, b) = (from_m[v].unwrap(), from_h[v].unwrap());
            let first = if a.other(v) < b.other(v) { a } else { b };
            let (vertices, edges) = walk(v, first, &mut visited);
            out.push(AlternatingPath { vertices, edges, cycle: true });
        }
    }
    out.sort_by(|a, b| a.vertices[0].cmp(&b.vertices[0]));
    out
}

/// Outcome of one item of the path lemma on one path. `None` when the item
/// does not apply (a cycle has no end edges).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathVerdict {
    pub path: AlternatingPath,
    pub not_cycle: bool,
    pub odd_with_m_ends: Option<bool>,
    pub ends_in_h_prime: Option<bool>,
    pub interior_saturated_by_h_prime: bool,
    pub has_m_minus_h_prime_edge: bool,
    pub no_forbidden_even_cycle: bool,
    /// A forbidden even cycle, as a closed vertex walk, when one exists.
    pub forbidden_cycle: Option<Vec<Vertex>>,
}

impl PathVerdict {
    pub fn passed(&self) -> bool {
        self.not_cycle
            && self.odd_with_m_ends == Some(true)
            && self.ends_in_h_prime == Some(true)
            && self.interior_saturated_by_h_prime
            && self.has_m_minus_h_prime_edge
            && self.no_forbidden_even_cycle
    }

    /// Item labels `i`..`vi` with their outcomes.
    pub fn items(&self) -> [(&'static str, Option<bool>); 6] {
        [
            ("i", Some(self.not_cycle)),
            ("ii", self.odd_with_m_ends),
            ("iii", self.ends_in_h_prime),
            ("iv", Some(self.interior_saturated_by_h_prime)),
            ("v", Some(self.has_m_minus_h_prime_edge)),
            ("vi", Some(self.no_forbidden_even_cycle)),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugpathsReport {
    pub check: &'static str,
    pub nu: usize,
    pub mu: usize,
    /// False when `mu >= nu`; the lemma then says nothing.
    pub applicable: bool,
    pub passed: bool,
    pub triple: IntersectionTriple,
    pub paths: Vec<PathVerdict>,
}

/// Evaluates items (i)-(vi) on every maximal `M`-`H` alternating path of
/// length at least two.
pub fn check_augpaths(g: &Graph, t: &IntersectionTriple) -> AugpathsReport {
    let (nu, mu) = (t.m.len(), t.h.len());
    let applicable = mu < nu;
    let mut paths = Vec::new();
    if applicable {
        for p in maximal_alternating_paths(g, &t.m, &t.h) {
            if p.len() >= 2 {
                paths.push(judge(g, t, p));
            }
        }
    }
    let passed = paths.iter().all(PathVerdict::passed);
    AugpathsReport { check: "augpaths", nu, mu, applicable, passed, triple: t.clone(), paths }
}

fn judge(g: &Graph, t: &IntersectionTriple, p: AlternatingPath) -> PathVerdict {
    let ends = p.end_edges();
    let (odd_with_m_ends, ends_in_h_prime) = if p.cycle {
        (None, None)
    } else {
        (
            Some(p.len() % 2 == 1 && ends.iter().all(|&e| t.m.contains(e))),
            Some(ends.iter().all(|&e| t.h_prime.contains(e))),
        )
    };
    let interior_saturated_by_h_prime = p.interior().iter().all(|&v| t.h_prime.saturates(v));
    let has_m_minus_h_prime_edge =
        p.edges.iter().any(|&e| t.m.contains(e) && !t.h_prime.contains(e));
    let forbidden_cycle = p
        .edges
        .iter()
        .filter(|&&e| t.m.contains(e))
        .find_map(|&e| forbidden_cycle_through(g, t, e));
    PathVerdict {
        not_cycle: !p.cycle,
        odd_with_m_ends,
        ends_in_h_prime,
        interior_saturated_by_h_prime,
        has_m_minus_h_prime_edge,
        no_forbidden_even_cycle: forbidden_cycle.is_none(),
        forbidden_cycle,
        path: p,
    }
}

/// An even cycle through the `M` edge `e` whose edges alternate between `M`
/// and `(H | H') \ M`. The walk from one end of `e` is forced on `M` steps
/// and has at most two choices on the others, so depth-first search with a
/// length cap of `2n` is exhaustive.
fn forbidden_cycle_through(g: &Graph, t: &IntersectionTriple, e: Edge) -> Option<Vec<Vertex>> {
    let (x, y) = (e.u(), e.v());
    let mut on_path = vec![false; g.n()];
    on_path[x] = true;
    on_path[y] = true;
    let mut walk = vec![x, y];
    if extend_cycle(t, x, y, &mut on_path, &mut walk, 2 * g.n()) {
        walk.push(x);
        Some(walk)
    } else {
        None
    }
}

fn cover_edges_at(t: &IntersectionTriple, v: Vertex) -> impl Iterator<Item = Edge> + '_ {
    [t.h.edge_at(v), t.h_prime.edge_at(v)]
        .into_iter()
        .flatten()
        .filter(move |&f| !t.m.contains(f))
}

/// `walk` ends at `v` after an `M` step; take a cover step, then an `M` step.
fn extend_cycle(
    t: &IntersectionTriple,
    start: Vertex,
    v: Vertex,
    on_path: &mut [bool],
    walk: &mut Vec<Vertex>,
    cap: usize,
) -> bool {
    if walk.len() >= cap {
        return false;
    }
    for f in cover_edges_at(t, v) {
        let w = f.other(v);
        if w == start {
            return true;
        }
        if on_path[w] {
            continue;
        }
        let Some(mw) = t.m.edge_at(w) else { continue };
        let z = mw.other(w);
        if on_path[z] {
            continue;
        }
        on_path[w] = true;
        on_path[z] = true;
        walk.push(w);
        walk.push(z);
        if extend_cycle(t, start, z, on_path, walk, cap) {
            return true;
        }
        walk.pop();
        walk.pop();
        on_path[w] = false;
        on_path[z] = false;
    }
    false
}
