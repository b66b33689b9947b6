//! Simple undirected graphs on dense vertex ids, matchings and disjoint pairs.

mod io;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Limits, Result};

pub use io::{
    parse_edge_list, parse_graph6, parse_graph6_lines, serialize_edge_list, serialize_graph6,
    to_dot, DotLayer,
};

pub type Vertex = usize;

/// An undirected edge, stored with the smaller endpoint first.
///
/// Serializes as a two-element array `[u, v]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Normalizes the endpoint order. Loops are representable here;
    /// [`Graph::new`] is where they get rejected.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn endpoints(self) -> [Vertex; 2] {
        [self.0, self.1]
    }

    pub fn touches(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint opposite to `x`. `x` must be an endpoint.
    pub fn other(self, x: Vertex) -> Vertex {
        debug_assert!(self.touches(x));
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }

    pub fn shares_vertex(self, other: Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Self {
        Edge::new(a, b)
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Edges are kept sorted, which fixes the edge index used throughout the
/// solvers. Adjacency is stored in compressed form with each neighbour list
/// sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    adjacency: Vec<Vertex>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges. Loops and out-of-range
    /// endpoints are rejected.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list = Vec::new();
        for e in edges {
            let e = e.into();
            if e.0 == e.1 {
                return Err(Error::LoopEdge(e.0));
            }
            if e.1 >= n {
                return Err(Error::VertexOutOfRange { vertex: e.1, n });
            }
            list.push(e);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    /// `edges` must be sorted, deduplicated, loop-free and in range.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut degree = vec![0usize; n];
        let mut lower_degree = vec![0usize; n];
        for e in &edges {
            degree[e.0] += 1;
            degree[e.1] += 1;
            lower_degree[e.1] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        // Scanning sorted edges, the neighbours below a vertex arrive in
        // increasing order as first endpoints, and those above it arrive in
        // increasing order as second endpoints.
        let mut below: Vec<usize> = offsets[..n].to_vec();
        let mut above: Vec<usize> = (0..n).map(|v| offsets[v] + lower_degree[v]).collect();
        let mut adjacency = vec![0; 2 * edges.len()];
        for e in &edges {
            adjacency[above[e.0]] = e.1;
            above[e.0] += 1;
            adjacency[below[e.1]] = e.0;
            below[e.1] += 1;
        }
        Graph {
            n,
            edges,
            offsets,
            adjacency,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order; the position is the edge index.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && b < self.n && self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edge_index(e).is_some()
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// A new graph with the edge `ab` added; adding an existing edge is a
    /// no-op.
    pub fn with_edge(&self, a: Vertex, b: Vertex) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied().chain([Edge::new(a, b)]))
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        let edges = self.edges.iter().copied().filter(|&f| f != e).collect();
        Graph::from_sorted(self.n, edges)
    }

    /// The subgraph on all vertices keeping only edges not in `removed`.
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|f| !removed.contains(f))
            .collect();
        Graph::from_sorted(self.n, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge(e.0 + shift, e.1 + shift)));
        Graph::from_sorted(self.n + other.n, edges)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_sizes().len() == 1
    }

    /// Sizes of the connected components, in order of their smallest vertex.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut size = 0;
            while let Some(v) = queue.pop_front() {
                size += 1;
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.vertices().all(|v| self.degree(v) == d)
    }

    /// Exact Hamiltonian path test by dynamic programming over vertex
    /// subsets, refusing graphs above `limits.hamiltonian_vertices`.
    pub fn has_hamiltonian_path(&self, limits: &Limits) -> Result<bool> {
        Ok(self.hamiltonian_path(limits)?.is_some())
    }

    /// A Hamiltonian path as a vertex sequence, if one exists.
    pub fn hamiltonian_path(&self, limits: &Limits) -> Result<Option<Vec<Vertex>>> {
        Limits::check("hamiltonian path vertex", limits.hamiltonian_vertices, self.n)?;
        if self.n <= 1 {
            return Ok(Some((0..self.n).collect()));
        }
        if !self.is_connected() {
            return Ok(None);
        }
        let n = self.n;
        let adj: Vec<u32> = (0..n)
            .map(|v| self.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        // ends[mask] = set of vertices at which some path covering `mask` ends.
        let full = (1u32 << n) - 1;
        let mut ends = vec![0u32; 1 << n];
        for v in 0..n {
            ends[1 << v] = 1 << v;
        }
        for mask in 1..full {
            let mut e = ends[mask as usize];
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut next = adj[v] & !mask;
                while next != 0 {
                    let w = next.trailing_zeros();
                    next &= next - 1;
                    ends[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
        if ends[full as usize] == 0 {
            return Ok(None);
        }
        let mut mask = full;
        let mut v = ends[full as usize].trailing_zeros() as usize;
        let mut path = vec![v];
        while mask.count_ones() > 1 {
            mask &= !(1 << v);
            v = (ends[mask as usize] & adj[v]).trailing_zeros() as usize;
            path.push(v);
        }
        Ok(Some(path))
    }
}

/// True iff `edges` is a subset of `E(g)` with pairwise disjoint endpoints.
pub fn is_matching(g: &Graph, edges: &[Edge]) -> bool {
    let mut used = vec![false; g.n()];
    for &e in edges {
        if !g.contains_edge(e) || used[e.0] || used[e.1] {
            return false;
        }
        used[e.0] = true;
        used[e.1] = true;
    }
    true
}

/// A set of pairwise non-adjacent edges, validated against its host graph at
/// construction. Edges are kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(host: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        if !is_matching(host, &edges) {
            return Err(Error::Precondition(format!(
                "{} is not a matching of the host graph",
                fmt_edges(&edges)
            )));
        }
        Ok(Matching { edges })
    }

    pub(crate) fn from_unchecked(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn saturates(&self, v: Vertex) -> bool {
        self.edges.iter().any(|e| e.touches(v))
    }

    /// The matching edge at `v`, if any.
    pub fn edge_at(&self, v: Vertex) -> Option<Edge> {
        self.edges.iter().copied().find(|e| e.touches(v))
    }

    pub fn intersection_len(&self, other: &[Edge]) -> usize {
        other.iter().filter(|&&e| self.contains(e)).count()
    }
}

/// An ordered pair of edge-disjoint matchings of one host, normalized so that
/// `h` is at least as large as `h_prime`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DisjointPair {
    pub h: Matching,
    pub h_prime: Matching,
}

impl DisjointPair {
    /// Validates disjointness and swaps the two matchings if needed so that
    /// `|h| >= |h_prime|`.
    pub fn new(h: Matching, h_prime: Matching) -> Result<Self> {
        if let Some(e) = h.edges().iter().find(|&&e| h_prime.contains(e)) {
            return Err(Error::Precondition(format!(
                "matchings share the edge {e}"
            )));
        }
        Ok(Self::normalized(h, h_prime))
    }

    pub(crate) fn normalized(h: Matching, h_prime: Matching) -> Self {
        if h.len() >= h_prime.len() {
            DisjointPair { h, h_prime }
        } else {
            DisjointPair {
                h: h_prime,
                h_prime: h,
            }
        }
    }

    /// `|h| + |h_prime|`.
    pub fn total(&self) -> usize {
        self.h.len() + self.h_prime.len()
    }

    /// `h ∪ h_prime`, sorted.
    pub fn union(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> = self
            .h
            .edges()
            .iter()
            .chain(self.h_prime.edges())
            .copied()
            .collect();
        all.sort_unstable();
        all
    }

    /// The same pair with the roles of the matchings exchanged. The result
    /// is not normalized.
    pub fn swapped(&self) -> DisjointPair {
        DisjointPair {
            h: self.h_prime.clone(),
            h_prime: self.h.clone(),
        }
    }
}

pub(crate) fn fmt_edges(edges: &[Edge]) -> String {
    let parts: Vec<String> = edges.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn adjacency_matches_edges() {
        let g = Graph::new(6, [(4, 1), (0, 5), (1, 0), (3, 1), (5, 2), (1, 4)]).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.neighbors(1), &[0, 3, 4]);
        assert_eq!(g.neighbors(5), &[0, 2]);
        let mut rebuilt = Vec::new();
        for v in g.vertices() {
            for &w in g.neighbors(v) {
                if v < w {
                    rebuilt.push(Edge::new(v, w));
                }
            }
        }
        assert_eq!(rebuilt, g.edges());
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::new(3, [(1, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn matching_predicate() {
        let triangle = complete(3);
        assert!(!is_matching(&triangle, &[Edge::new(0, 1), Edge::new(1, 2)]));
        assert!(is_matching(&triangle, &[]));
        assert!(is_matching(&triangle, &[Edge::new(0, 2)]));
        // non-host edges are rejected without raising
        assert!(!is_matching(&path(3), &[Edge::new(0, 2)]));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(path(5).is_connected());
    }

    #[test]
    fn hamiltonian_paths() {
        let limits = Limits::default();
        assert!(path(5).has_hamiltonian_path(&limits).unwrap());
        assert!(complete(4).has_hamiltonian_path(&limits).unwrap());
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!star.has_hamiltonian_path(&limits).unwrap());
        // a tadpole: triangle 0-1-2 with tail 2-3-4
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let p = g.hamiltonian_path(&limits).unwrap().unwrap();
        let mut sorted = p.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4]);
        assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
        let big = Graph::empty(21);
        assert!(matches!(
            big.has_hamiltonian_path(&limits),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn bipartite_and_regular() {
        assert!(path(6).is_bipartite());
        assert!(!complete(3).is_bipartite());
        assert!(complete(4).is_regular(3));
    }

    #[test]
    fn disjoint_pair_normalizes() {
        let g = path(4);
        let small = Matching::new(&g, [Edge::new(1, 2)]).unwrap();
        let big = Matching::new(&g, [Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        let pair = DisjointPair::new(small.clone(), big.clone()).unwrap();
        assert_eq!(pair.h, big);
        assert_eq!(pair.h_prime, small);
        assert_eq!(pair.total(), 3);
        assert!(DisjointPair::new(big.clone(), big).is_err());
    }
}
