//! Bitmask evaluation of `nu`, `lambda` and `mu` for graphs on at most 16
//! vertices.
//!
//! `lambda = max over matchings H of |H| + nu(G - H)`, and `mu` is the
//! largest `|H|` attaining it: for a pair in `Lambda`, `H'` is necessarily a
//! maximum matching of `G - H`. Enumerating all matchings is cheap on sparse
//! graphs; dense ones nearly always have a Hamiltonian path, which settles
//! `mu = nu = floor(n/2)` directly (see [`SmallGraph::nu_mu`]).

use crate::graph::Graph;

pub const MAX_VERTICES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    n: usize,
    adj: [u16; MAX_VERTICES],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmallParams {
    pub nu: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SmallGraph {
    pub fn from_graph(g: &Graph) -> Option<Self> {
        if g.n() > MAX_VERTICES {
            return None;
        }
        let mut adj = [0u16; MAX_VERTICES];
        for e in g.edges() {
            adj[e.u()] |= 1 << e.v();
            adj[e.v()] |= 1 << e.u();
        }
        Some(SmallGraph { n: g.n(), adj })
    }

    /// From symmetric loop-free adjacency masks.
    pub fn from_adjacency(n: usize, adj: [u16; MAX_VERTICES]) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        SmallGraph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_graph(&self) -> Graph {
        let edges = (0..self.n).flat_map(|u| {
            (u + 1..self.n).filter(move |&v| self.adj[u] >> v & 1 == 1).map(move |v| (u, v))
        });
        Graph::new(self.n, edges).expect("adjacency masks are in range")
    }

    fn all(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.all()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = [u8::MAX; MAX_VERTICES];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let mut nb = self.adj[v];
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn nu(&self) -> usize {
        nu_masked(&self.adj, self.all())
    }

    pub fn has_hamiltonian_path(&self) -> bool {
        let all = self.all();
        if self.n <= 1 {
            return true;
        }
        let leaves = (0..self.n).filter(|&v| self.adj[v].count_ones() <= 1).count();
        if leaves > 2 || !self.is_connected() {
            return false;
        }
        // A Hamiltonian path must start at a leaf when one exists.
        let starts: Vec<usize> = match (0..self.n).find(|&v| self.adj[v].count_ones() == 1) {
            Some(v) => vec![v],
            None => (0..self.n).collect(),
        };
        starts.into_iter().any(|s| self.extend_path(s, 1 << s, all))
    }

    fn extend_path(&self, v: usize, visited: u16, all: u16) -> bool {
        if visited == all {
            return true;
        }
        let mut next = self.adj[v] & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            if self.extend_path(w, visited | 1 << w, all) {
                return true;
            }
        }
        false
    }

    /// `(nu, mu)`.
    ///
    /// When a Hamiltonian path exists, colouring its edges alternately gives
    /// a disjoint pair covering `n - 1` edges with `floor(n/2)` in the larger
    /// class. No pair covers more than `n` edges (two per vertex), and
    /// covering `n` means a spanning union of alternating, hence even,
    /// cycles with both classes perfect. Either way `mu = floor(n/2)`, which
    /// is also the ceiling for `nu`.
    pub fn nu_mu(&self) -> (usize, usize) {
        if self.has_hamiltonian_path() {
            let half = self.n / 2;
            return (half, half);
        }
        let p = self.params();
        (p.nu, p.mu)
    }

    /// Exact `nu`, `lambda` and `mu` by enumerating every matching.
    pub fn params(&self) -> SmallParams {
        let mut rest = self.adj;
        let mut best = SmallParams { nu: 0, lambda: 0, mu: 0 };
        self.each_matching(self.all(), 0, &mut rest, &mut best);
        best
    }

    fn each_matching(&self, alive: u16, size: usize, rest: &mut [u16; MAX_VERTICES], best: &mut SmallParams) {
        // skip vertices that can no longer be matched
        let mut alive = alive;
        let v = loop {
            if alive == 0 {
                let total = size + nu_masked(rest, self.all());
                best.nu = best.nu.max(size);
                if total > best.lambda || (total == best.lambda && size > best.mu) {
                    best.lambda = total;
                    best.mu = size;
                }
                return;
            }
            let v = alive.trailing_zeros() as usize;
            if self.adj[v] & alive & !(1 << v) != 0 {
                break v;
            }
            alive &= !(1 << v);
        };
        let without_v = alive & !(1 << v);
        self.each_matching(without_v, size, rest, best);
        let mut nb = self.adj[v] & without_v;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            rest[v] &= !(1 << w);
            rest[w] &= !(1 << v);
            self.each_matching(without_v & !(1 << w), size + 1, rest, best);
            rest[v] |= 1 << w;
            rest[w] |= 1 << v;
        }
    }
}

/// Matching number of the subgraph induced on `alive`. Branches only on the
/// lowest non-isolated vertex: some maximum matching covers it, since an
/// uncovered vertex can take over its neighbour's matched edge.
fn nu_masked(adj: &[u16; MAX_VERTICES], mut alive: u16) -> usize {
    loop {
        if alive == 0 {
            return 0;
        }
        let v = alive.trailing_zeros() as usize;
        let nb = adj[v] & alive;
        if nb == 0 {
            alive &= !(1 << v);
            continue;
        }
        let rest = alive & !(1 << v);
        let mut cap = 0u32;
        let mut scan = alive;
        while scan != 0 {
            let x = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            cap += u32::from(adj[x] & alive != 0);
        }
        let cap = (cap / 2) as usize;
        let mut best = 0;
        let mut choices = nb;
        while choices != 0 {
            let w = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            best = best.max(1 + nu_masked(adj, rest & !(1 << w)));
            if best == cap {
                break;
            }
        }
        return best;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(n: usize, edges: &[(usize, usize)]) -> SmallGraph {
        SmallGraph::from_graph(&Graph::new(n, edges.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn spanner_parameters() {
        let s = small(10, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (1, 6), (6, 7), (1, 8), (8, 9)]);
        assert_eq!(s.params(), SmallParams { nu: 5, lambda: 8, mu: 4 });
        assert_eq!(s.nu_mu(), (5, 4));
        assert!(!s.has_hamiltonian_path());
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(small(2, &[(0, 1)]).params(), SmallParams { nu: 1, lambda: 1, mu: 1 });
        assert_eq!(small(3, &[(0, 1), (1, 2), (0, 2)]).params(), SmallParams { nu: 1, lambda: 2, mu: 1 });
        assert_eq!(small(0, &[]).params(), SmallParams { nu: 0, lambda: 0, mu: 0 });
        assert_eq!(small(5, &[]).nu_mu(), (0, 0));
        let c5 = small(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert_eq!(c5.params(), SmallParams { nu: 2, lambda: 4, mu: 2 });
        assert_eq!(c5.nu_mu(), (2, 2));
        assert!(!c5.is_bipartite());
        assert!(small(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).is_bipartite());
    }
}
