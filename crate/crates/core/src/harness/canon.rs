//! Canonical codes for graphs on at most 11 vertices, and level-by-level
//! generation of all graphs up to isomorphism.
//!
//! The code of a labeling is the upper triangle read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) with the first pair most significant;
//! the canonical code is the least code over labelings that respect an
//! equitable colour partition. Colour refinement is isomorphism invariant, so
//! the least code over that subset of labelings is too.

use rayon::prelude::*;

/// Adjacency masks fit `u16` and codes fit `u64` up to here.
pub(crate) const MAX_CANON_VERTICES: usize = 11;

pub(crate) fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

fn pair_bit(n: usize, a: usize, b: usize) -> u64 {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let k = b * (b - 1) / 2 + a;
    1u64 << (pair_count(n) as usize - 1 - k)
}

#[cfg(test)]
pub(crate) fn encode(n: usize, adj: &[u16]) -> u64 {
    let mut code = 0;
    for b in 1..n {
        for a in 0..b {
            if adj[a] >> b & 1 == 1 {
                code |= pair_bit(n, a, b);
            }
        }
    }
    code
}

pub(crate) fn decode(n: usize, code: u64) -> Vec<u16> {
    let mut adj = vec![0u16; n];
    for b in 1..n {
        for a in 0..b {
            if code & pair_bit(n, a, b) != 0 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
    }
    adj
}

/// Stable colour classes, ordered by an invariant signature.
fn refine(n: usize, adj: &[u16]) -> Vec<usize> {
    let mut colour = vec![0usize; n];
    let mut classes = 1;
    loop {
        let mut sig: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb, v)
            })
            .collect();
        sig.sort();
        let mut next = vec![0usize; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sig[i].0, &sig[i].1) != (sig[i - 1].0, &sig[i - 1].1) {
                c += 1;
            }
            next[sig[i].2] = c;
        }
        let count = if n == 0 { 0 } else { c + 1 };
        colour = next;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

struct Search<'a> {
    n: usize,
    adj: &'a [u16],
    /// Colour of each position.
    slots: Vec<usize>,
    colour: Vec<usize>,
    placed: Vec<usize>,
    used: u16,
    best: Option<u64>,
}

impl Search<'_> {
    /// `code` holds the columns of positions `0..j`. A prefix above the best
    /// code's prefix cannot complete to a smaller code.
    fn go(&mut self, j: usize, code: u64) {
        if j == self.n {
            if self.best.is_none_or(|b| code < b) {
                self.best = Some(code);
            }
            return;
        }
        let total = pair_count(self.n);
        let shift = total - pair_count(j + 1);
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.colour[v] != self.slots[j] {
                continue;
            }
            let mut c = code;
            for (i, &u) in self.placed.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    c |= pair_bit(self.n, i, j);
                }
            }
            if self.best.is_some_and(|b| c >> shift > b >> shift) {
                continue;
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.go(j + 1, c);
            self.placed.pop();
            self.used &= !(1 << v);
        }
    }
}

pub(crate) fn canonical_code(n: usize, adj: &[u16]) -> u64 {
    debug_assert!(n <= MAX_CANON_VERTICES);
    let colour = refine(n, adj);
    let mut slots = colour.clone();
    slots.sort_unstable();
    let mut s = Search { n, adj, slots, colour, placed: Vec::with_capacity(n), used: 0, best: None };
    s.go(0, 0);
    s.best.unwrap_or(0)
}

pub(crate) fn is_connected(n: usize, adj: &[u16]) -> bool {
    if n == 0 {
        return true;
    }
    let all = ((1u32 << n) - 1) as u16;
    let (mut seen, mut frontier) = (1u16, 1u16);
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen & all == all
}

/// Canonical codes of every graph on `n` vertices, one per isomorphism
/// class, ascending; derived from those on `n - 1` by adding a vertex with
/// every possible neighbourhood.
pub(crate) fn all_graph_codes(n: usize) -> Vec<u64> {
    assert!(n <= MAX_CANON_VERTICES);
    let mut level = vec![0u64];
    for k in 1..=n {
        let parents = std::mem::take(&mut level);
        let mut codes: Vec<u64> = parents
            .par_iter()
            .flat_map_iter(|&code| {
                let mut adj = decode(k - 1, code);
                adj.push(0);
                (0u32..1 << (k - 1)).map(move |nbrs| {
                    let mut a = adj.clone();
                    a[k - 1] = nbrs as u16;
                    for (u, row) in a.iter_mut().enumerate().take(k - 1) {
                        if nbrs >> u & 1 == 1 {
                            *row |= 1 << (k - 1);
                        }
                    }
                    canonical_code(k, &a)
                })
            })
            .collect();
        codes.par_sort_unstable();
        codes.dedup();
        level = codes;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(n: usize, adj: &[u16], perm: &[usize]) -> Vec<u16> {
        let mut out = vec![0u16; n];
        for u in 0..n {
            for v in 0..n {
                if adj[u] >> v & 1 == 1 {
                    out[perm[u]] |= 1 << perm[v];
                }
            }
        }
        out
    }

    #[test]
    fn codes_round_trip_and_ignore_labels() {
        // Path 0-1-2-3 plus chord 0-2.
        let adj = vec![0b0110, 0b0101, 0b1011, 0b0100];
        assert_eq!(decode(4, encode(4, &adj)), adj);
        let c = canonical_code(4, &adj);
        for perm in [[1, 0, 2, 3], [3, 2, 1, 0], [2, 3, 0, 1]] {
            assert_eq!(canonical_code(4, &relabel(4, &adj, &perm)), c);
        }
        let star = vec![0b1110, 0b0001, 0b0001, 0b0001];
        assert_ne!(canonical_code(4, &star), c);
    }

    #[test]
    fn class_counts() {
        // Graphs on n vertices up to isomorphism.
        let counts: Vec<usize> = (0..=6).map(|n| all_graph_codes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }
}
