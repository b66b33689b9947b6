//! Edmonds' augmenting-path algorithm with blossom contraction.

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Maximum-cardinality matching as a mate array (`NONE` when unmatched).
///
/// Starts from the greedy matching in sorted edge order and then grows one
/// augmenting path per exposed root, so results are reproducible.
pub(crate) fn maximum_mates(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for e in g.edges() {
        if mate[e.u()] == NONE && mate[e.v()] == NONE {
            mate[e.u()] = e.v();
            mate[e.v()] = e.u();
        }
    }
    let mut search = Search::new(n);
    for root in 0..n {
        if mate[root] == NONE && g.degree(root) > 0 {
            if let Some(end) = search.find_augmenting_path(g, &mate, root) {
                search.augment(&mut mate, end);
            }
        }
    }
    mate
}

struct Search {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    lca_mark: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Search {
    fn new(n: usize) -> Self {
        Search {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            lca_mark: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn lca(&mut self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        self.lca_mark.iter_mut().for_each(|m| *m = false);
        loop {
            a = self.base[a];
            self.lca_mark[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// Breadth-first search for an augmenting path from `root`; returns its
    /// exposed far end.
    fn find_augmenting_path(&mut self, g: &Graph, mate: &[usize], root: usize) -> Option<usize> {
        let n = g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let current = self.lca(mate, v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(mate, v, current, to);
                    self.mark_path(mate, to, current, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = current;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&self, mate: &mut [usize], mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }
}
