//! Graph sources: every labeled connected graph on a few vertices, one
//! representative per isomorphism class, and seeded random connected graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::canon;
use crate::cover::small::{SmallGraph, MAX_VERTICES};
use crate::graph::{Edge, Graph};
use crate::{Error, Result};

/// Largest vertex count for internal labeled generation.
pub const MAX_GENERATED_VERTICES: usize = 8;
/// Largest vertex count for generation up to isomorphism.
pub const MAX_CLASS_VERTICES: usize = 9;

/// Vertex pairs in column order `(0,1), (0,2), (1,2), (0,3), ...`; bit `i` of
/// an edge mask selects pair `i`.
pub(crate) fn pair_table(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect()
}

pub(crate) fn small_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> SmallGraph {
    let mut adj = [0u16; MAX_VERTICES];
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (a, b) = pairs[i];
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    SmallGraph::from_adjacency(n, adj)
}

fn too_large(n: usize, limit: usize) -> Error {
    Error::BoundExceeded { what: "internal generator vertex", limit, actual: n }
}

/// Every labeled connected graph on `n` vertices, once each, in edge-mask
/// order. Larger `n` should come from an external graph6 file.
pub fn generate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_GENERATED_VERTICES {
        return Err(too_large(n, MAX_GENERATED_VERTICES));
    }
    let pairs = pair_table(n);
    let masks = 0u64..1 << pairs.len();
    Ok(masks.filter_map(move |mask| {
        let s = small_from_mask(n, &pairs, mask);
        s.is_connected().then(|| s.to_graph())
    }))
}

/// One canonical representative of every connected graph on `n` vertices,
/// in ascending canonical-code order.
pub fn generate_connected_classes(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_CLASS_VERTICES {
        return Err(too_large(n, MAX_CLASS_VERTICES));
    }
    let mut adjs: Vec<Vec<u16>> = canon::all_graph_codes(n).into_iter().map(|c| canon::decode(n, c)).collect();
    adjs.retain(|a| canon::is_connected(n, a));
    Ok(adjs.into_iter().map(move |a| {
        let mut adj = [0u16; MAX_VERTICES];
        adj[..n].copy_from_slice(&a);
        SmallGraph::from_adjacency(n, adj).to_graph()
    }))
}

/// `count` connected graphs with `n` vertices and `m_edges` edges: a random
/// recursive tree on shuffled labels plus uniformly chosen extra edges.
/// The stream depends only on the arguments.
pub fn random_connected(n: usize, m_edges: usize, seed: u64, count: usize) -> Result<Vec<Graph>> {
    let max_edges = n * n.saturating_sub(1) / 2;
    if n == 0 || m_edges + 1 < n || m_edges > max_edges {
        return Err(Error::Precondition(format!(
            "no connected graph has {n} vertices and {m_edges} edges"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut labels: Vec<usize> = (0..n).collect();
        labels.shuffle(&mut rng);
        let mut present = vec![false; n * n];
        let mut edges = Vec::with_capacity(m_edges);
        for i in 1..n {
            let j = rng.gen_range(0..i);
            let (a, b) = (labels[i], labels[j]);
            present[a * n + b] = true;
            present[b * n + a] = true;
            edges.push(Edge::new(a, b));
        }
        let mut spare: Vec<Edge> = pair_table(n)
            .into_iter()
            .filter(|&(a, b)| !present[a * n + b])
            .map(|(a, b)| Edge::new(a, b))
            .collect();
        let extra = m_edges - (n - 1);
        let (chosen, _) = spare.partial_shuffle(&mut rng, extra);
        edges.extend_from_slice(chosen);
        out.push(Graph::new(n, edges)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_connected_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| generate_connected(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 4, 38, 728]);
        assert!(generate_connected(9).is_err());
    }

    #[test]
    fn connected_class_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| generate_connected_classes(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 6, 21, 112, 853]);
        assert!(generate_connected_classes(10).is_err());
        assert!(generate_connected_classes(6).unwrap().all(|g| g.is_connected() && g.n() == 6));
    }

    #[test]
    fn random_graphs_are_connected_and_reproducible() {
        let a = random_connected(10, 9, 1, 100).unwrap();
        assert_eq!(a.len(), 100);
        assert!(a.iter().all(|g| g.is_connected() && g.edge_count() == 9));
        assert_eq!(a, random_connected(10, 9, 1, 100).unwrap());
        assert_ne!(a, random_connected(10, 9, 2, 100).unwrap());
        let b = random_connected(12, 14, 7, 50).unwrap();
        assert!(b.iter().all(|g| g.is_connected() && g.edge_count() == 14));
        assert!(random_connected(5, 3, 0, 1).is_err());
        assert!(random_connected(5, 11, 0, 1).is_err());
        assert_eq!(random_connected(5, 10, 0, 1).unwrap()[0].edge_count(), 10);
    }
}
