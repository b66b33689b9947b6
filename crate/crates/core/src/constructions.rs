//! Builders for the spanner family and its relatives.
//!
//! Numbering is fixed so witnesses are reproducible:
//!
//! * spanner: central vertices `c_L = 0`, `c_R = 1`; base legs `0-2-3`,
//!   `0-4-5`, `1-6-7`, `1-8-9`; extra legs get the next two ids each, the
//!   `left_legs` on `c_L` first, then the rest on `c_R`;
//! * diamond spanner `D_d`: the spanner's legs on `0..10`, the central edge
//!   replaced (for `d >= 1`) by `d` diamonds on `10 + 4i .. 14 + 4i`;
//! * propeller: centre `0`, blade `i` is `0 - (2i-1) - 2i`;
//! * chains: components in order, shifted by the vertex counts before them.

use serde::Serialize;

use crate::graph::{Edge, Graph, Vertex};
use crate::{Error, Result};

/// A spanner with `k` extra legs, `left_legs` of them on `c_L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpannerSpec {
    pub k: usize,
    pub left_legs: usize,
}

impl SpannerSpec {
    pub fn new(k: usize, left_legs: usize) -> Self {
        SpannerSpec { k, left_legs }
    }

    /// All extra legs on the left central vertex.
    pub fn left(k: usize) -> Self {
        SpannerSpec { k, left_legs: k }
    }

    pub fn validate(&self) -> Result<()> {
        if self.left_legs > self.k {
            return Err(Error::InvalidSpec(format!(
                "left_legs = {} exceeds k = {}",
                self.left_legs, self.k
            )));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        10 + 2 * self.k
    }
}

/// A path of two edges hanging off a central vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Leg {
    pub centre: Vertex,
    /// Edge at the central vertex.
    pub inner: Edge,
    /// Edge at the degree-one end.
    pub outer: Edge,
}

impl Leg {
    fn shifted(self, by: usize) -> Leg {
        let s = |e: Edge| Edge::new(e.u() + by, e.v() + by);
        Leg { centre: self.centre + by, inner: s(self.inner), outer: s(self.outer) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanner {
    pub graph: Graph,
    /// `[c_L, c_R]`.
    pub central: [Vertex; 2],
    pub central_edge: Edge,
    pub legs: Vec<Leg>,
}

impl Spanner {
    pub fn inner_edges(&self) -> Vec<Edge> {
        self.legs.iter().map(|l| l.inner).collect()
    }

    pub fn outer_edges(&self) -> Vec<Edge> {
        self.legs.iter().map(|l| l.outer).collect()
    }

    /// Outer edges plus the central edge: the unique perfect matching.
    pub fn perfect_matching(&self) -> Vec<Edge> {
        let mut edges = self.outer_edges();
        edges.push(self.central_edge);
        edges.sort();
        edges
    }
}

pub fn make_spanner(spec: SpannerSpec) -> Result<Spanner> {
    spec.validate()?;
    let mut legs = Vec::with_capacity(4 + spec.k);
    let mut next = 2;
    let centres = [0, 0, 1, 1]
        .into_iter()
        .chain(std::iter::repeat_n(0, spec.left_legs))
        .chain(std::iter::repeat_n(1, spec.k - spec.left_legs));
    for c in centres {
        legs.push(Leg { centre: c, inner: Edge::new(c, next), outer: Edge::new(next, next + 1) });
        next += 2;
    }
    let central_edge = Edge::new(0, 1);
    let mut edges = vec![central_edge];
    edges.extend(legs.iter().flat_map(|l| [l.inner, l.outer]));
    let graph = Graph::new(next, edges)?;
    Ok(Spanner { graph, central: [0, 1], central_edge, legs })
}

/// Number of diamonds between the two halves of a spanner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiamondSpannerSpec {
    pub d: usize,
}

impl DiamondSpannerSpec {
    pub fn new(d: usize) -> Self {
        DiamondSpannerSpec { d }
    }

    pub fn vertex_count(&self) -> usize {
        10 + 4 * self.d
    }

    pub fn edge_count(&self) -> usize {
        9 + 6 * self.d
    }
}

/// `D_d`: the spanner halves joined through a series chain of `d` copies of
/// `K_4` minus an edge, entered and left at the two degree-two vertices.
/// With `d = 0` this is the plain spanner.
pub fn make_diamond_spanner(spec: DiamondSpannerSpec) -> Result<Graph> {
    let d = spec.d;
    let mut edges: Vec<(Vertex, Vertex)> =
        vec![(0, 2), (2, 3), (0, 4), (4, 5), (1, 6), (6, 7), (1, 8), (8, 9)];
    let mut prev = 0;
    for i in 0..d {
        let p = 10 + 4 * i;
        edges.extend([(p, p + 1), (p + 1, p + 2), (p + 2, p + 3), (p, p + 2), (p + 1, p + 3)]);
        edges.push((prev, p));
        prev = p + 3;
    }
    edges.push((prev, 1));
    Graph::new(spec.vertex_count(), edges)
}

/// `P^2_n`: `n` paths of length two sharing the end vertex `0`.
pub fn make_propeller(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSpec("a propeller needs at least one blade".into()));
    }
    Graph::new(
        2 * n + 1,
        (1..=n).flat_map(|i| [(0, 2 * i - 1), (2 * i - 1, 2 * i)]),
    )
}

/// Spanners joined in sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainSpec {
    pub spanners: Vec<SpannerSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub graph: Graph,
    /// Components with vertex ids already shifted into the chain.
    pub components: Vec<Spanner>,
    /// Edge `i` joins `c_R` of component `i` to `c_L` of component `i + 1`.
    pub joins: Vec<Edge>,
}

pub fn chain_spanners(spec: &ChainSpec) -> Result<Chain> {
    if spec.spanners.is_empty() {
        return Err(Error::InvalidSpec("a chain needs at least one spanner".into()));
    }
    let mut components = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut joins = Vec::new();
    let mut offset = 0;
    for s in &spec.spanners {
        let sp = make_spanner(*s)?;
        let shift = |e: Edge| Edge::new(e.u() + offset, e.v() + offset);
        if let Some(prev) = components.last() {
            let prev: &Spanner = prev;
            joins.push(Edge::new(prev.central[1], offset));
        }
        edges.extend(sp.graph.edges().iter().map(|&e| shift(e)));
        components.push(Spanner {
            graph: sp.graph.clone(),
            central: [offset, offset + 1],
            central_edge: shift(sp.central_edge),
            legs: sp.legs.iter().map(|l| l.shifted(offset)).collect(),
        });
        offset += sp.graph.n();
    }
    edges.extend(&joins);
    let graph = Graph::new(offset, edges)?;
    Ok(Chain { graph, components, joins })
}

/// The chain for `mu / nu = m / n`: `n - m - 1` plain spanners followed by a
/// `(5m - 4n)`-spanner. Requires `4n <= 5m` and `m < n`.
pub fn theorem1_spec(m: usize, n: usize) -> Result<ChainSpec> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidRatio { m, n, violated: "m >= 1 and n >= 1" });
    }
    if 4 * n > 5 * m {
        return Err(Error::InvalidRatio { m, n, violated: "4n <= 5m" });
    }
    if m >= n {
        return Err(Error::InvalidRatio { m, n, violated: "m < n" });
    }
    let k = 5 * m - 4 * n;
    let mut spanners = vec![SpannerSpec::left(0); n - m - 1];
    spanners.push(SpannerSpec::left(k));
    Ok(ChainSpec { spanners })
}

pub fn make_theorem1_graph(m: usize, n: usize) -> Result<Chain> {
    chain_spanners(&theorem1_spec(m, n)?)
}

/// Every admissible `(m, n)` with `n <= max_n`, ordered by `n` then `m`.
pub fn admissible_ratios(max_n: usize) -> Vec<(usize, usize)> {
    (1..=max_n)
        .flat_map(|n| (1..n).map(move |m| (m, n)))
        .filter(|&(m, n)| 4 * n <= 5 * m)
        .collect()
}

/// Adds vertices `a = n`, `b = n + 1` and edges `v a`, `a b`.
pub fn adjoin_leg(g: &Graph, v: Vertex) -> Result<Graph> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let a = g.n();
    let mut edges = g.edges().to_vec();
    edges.push(Edge::new(v, a));
    edges.push(Edge::new(a, a + 1));
    Graph::new(a + 2, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spanner_shape() {
        let s = make_spanner(SpannerSpec::left(0)).unwrap();
        assert_eq!((s.graph.n(), s.graph.edge_count()), (10, 9));
        assert!(s.graph.is_connected());
        assert_eq!(s.graph.degree(0), 3);
        assert_eq!(s.graph.degree(1), 3);
        assert_eq!(s.perfect_matching().len(), 5);
        let s = make_spanner(SpannerSpec::new(3, 1)).unwrap();
        assert_eq!((s.graph.n(), s.graph.edge_count()), (16, 15));
        assert_eq!((s.graph.degree(0), s.graph.degree(1)), (4, 5));
        assert_eq!(s.legs[4].inner, Edge::new(0, 10));
        assert!(make_spanner(SpannerSpec::new(1, 2)).is_err());
    }

    #[test]
    fn extra_leg_is_adjoining() {
        let base = make_spanner(SpannerSpec::left(0)).unwrap().graph;
        assert_eq!(adjoin_leg(&base, 0).unwrap(), make_spanner(SpannerSpec::left(1)).unwrap().graph);
        assert_eq!(adjoin_leg(&Graph::empty(1), 0).unwrap().edge_count(), 2);
        assert!(adjoin_leg(&base, 10).is_err());
    }

    #[test]
    fn diamond_spanner_shape() {
        let d0 = make_diamond_spanner(DiamondSpannerSpec::new(0)).unwrap();
        assert_eq!(d0, make_spanner(SpannerSpec::left(0)).unwrap().graph);
        for d in 1..4 {
            let spec = DiamondSpannerSpec::new(d);
            let g = make_diamond_spanner(spec).unwrap();
            assert_eq!((g.n(), g.edge_count()), (spec.vertex_count(), spec.edge_count()));
            assert!(g.is_connected());
            assert!(!g.has_edge(0, 1));
        }
    }

    #[test]
    fn propeller_shape() {
        let p = make_propeller(4).unwrap();
        assert_eq!((p.n(), p.edge_count(), p.degree(0)), (9, 8, 4));
        assert!(p.has_edge(7, 8));
        assert!(make_propeller(0).is_err());
    }

    #[test]
    fn chains_and_ratio_graphs() {
        let c = chain_spanners(&ChainSpec { spanners: vec![SpannerSpec::left(0); 2] }).unwrap();
        assert_eq!((c.graph.n(), c.graph.edge_count()), (20, 19));
        assert_eq!(c.joins, vec![Edge::new(1, 10)]);
        assert!(c.graph.is_connected());
        let one = chain_spanners(&ChainSpec { spanners: vec![SpannerSpec::left(2)] }).unwrap();
        assert_eq!(one.graph, make_spanner(SpannerSpec::left(2)).unwrap().graph);

        let t = make_theorem1_graph(17, 19).unwrap();
        assert_eq!(t.components.len(), 2);
        assert_eq!((t.graph.n(), t.graph.edge_count()), (38, 37));
        assert_eq!(make_theorem1_graph(4, 5).unwrap().graph, make_spanner(SpannerSpec::left(0)).unwrap().graph);
        assert!(matches!(make_theorem1_graph(1, 2), Err(Error::InvalidRatio { violated: "4n <= 5m", .. })));
        assert!(matches!(make_theorem1_graph(5, 5), Err(Error::InvalidRatio { violated: "m < n", .. })));
        assert_eq!(
            admissible_ratios(12),
            vec![(4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (8, 10), (9, 10), (9, 11), (10, 11), (10, 12), (11, 12)]
        );
    }
}
