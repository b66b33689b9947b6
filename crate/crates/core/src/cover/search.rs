//! Depth-first branch and bound over per-edge colour assignments.
//!
//! Each edge is either left uncovered or given one of `k` colours so that
//! every colour class stays a matching. A new colour may only be opened as
//! the next unused index, which visits each unordered family of classes once.

use crate::graph::Graph;

pub(crate) const UNUSED: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Goal {
    /// Maximize the number of covered edges.
    Total,
    /// Maximize covered edges, then the largest colour class.
    TotalThenLargest,
}

#[derive(Clone, Debug)]
pub(crate) struct Assignment {
    pub colours: Vec<u8>,
    pub total: usize,
    pub largest: usize,
}

impl Assignment {
    pub fn from_colours(colours: Vec<u8>, k: usize) -> Self {
        let mut counts = [0usize; 4];
        for &c in &colours {
            if c != UNUSED {
                counts[c as usize] += 1;
            }
        }
        Assignment {
            colours,
            total: counts.iter().sum(),
            largest: counts[..k].iter().copied().max().unwrap_or(0),
        }
    }

    /// Edges of colour class `c`, in edge order.
    pub fn class(&self, g: &Graph, c: u8) -> Vec<crate::graph::Edge> {
        g.edges()
            .iter()
            .zip(&self.colours)
            .filter(|(_, &x)| x == c)
            .map(|(e, _)| *e)
            .collect()
    }

    /// Colour indices ordered by class size, largest first (stable).
    pub fn classes_by_size(&self, k: usize) -> Vec<u8> {
        let mut counts = vec![0usize; k];
        for &c in &self.colours {
            if c != UNUSED {
                counts[c as usize] += 1;
            }
        }
        let mut order: Vec<u8> = (0..k as u8).collect();
        order.sort_by_key(|&c| std::cmp::Reverse(counts[c as usize]));
        order
    }
}

enum Mode {
    Optimize {
        goal: Goal,
        best: Assignment,
        ceiling: (usize, usize),
        done: bool,
    },
    Collect {
        total: usize,
        largest: Option<usize>,
        found: Vec<Vec<u8>>,
    },
}

struct Engine<'a> {
    edges: Vec<(usize, usize)>,
    k: usize,
    kmask: u8,
    colour: Vec<u8>,
    free: Vec<u8>,
    counts: [usize; 4],
    total: usize,
    used: usize,
    // bound scratch
    reach: Vec<u8>,
    remaining: Vec<u32>,
    touched: Vec<usize>,
    mode: Mode,
    _g: std::marker::PhantomData<&'a Graph>,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, k: usize, mode: Mode) -> Self {
        assert!((1..=4).contains(&k));
        Engine {
            edges: g.edges().iter().map(|e| (e.u(), e.v())).collect(),
            k,
            kmask: ((1u16 << k) - 1) as u8,
            colour: vec![UNUSED; g.edge_count()],
            free: vec![((1u16 << k) - 1) as u8; g.n()],
            counts: [0; 4],
            total: 0,
            used: 0,
            reach: vec![0; g.n()],
            remaining: vec![0; g.n()],
            touched: Vec::with_capacity(g.n()),
            mode,
            _g: std::marker::PhantomData,
        }
    }

    /// Upper bounds on the final total and on the final largest class for
    /// any completion of the assignment of edges `0..i`.
    fn bound(&mut self, i: usize) -> (usize, usize) {
        let mut feasible = 0usize;
        let mut per_colour = [0usize; 4];
        for &(u, v) in &self.edges[i..] {
            let a = self.free[u] & self.free[v];
            if a == 0 {
                continue;
            }
            feasible += 1;
            for c in 0..self.k {
                if a >> c & 1 != 0 {
                    per_colour[c] += 1;
                }
            }
            for x in [u, v] {
                if self.remaining[x] == 0 {
                    self.touched.push(x);
                }
                self.remaining[x] += 1;
                self.reach[x] |= a;
            }
        }
        let mut capacity = 0usize;
        let mut colour_vertices = [0usize; 4];
        for &x in &self.touched {
            let r = self.reach[x];
            capacity += (r.count_ones() as usize).min(self.remaining[x] as usize);
            for (c, cv) in colour_vertices.iter_mut().enumerate().take(self.k) {
                *cv += (r >> c & 1) as usize;
            }
            self.reach[x] = 0;
            self.remaining[x] = 0;
        }
        self.touched.clear();

        let mut colour_sum = 0usize;
        let mut largest = 0usize;
        let rest = feasible.min(capacity / 2);
        for c in 0..self.k {
            let add = per_colour[c].min(colour_vertices[c] / 2);
            colour_sum += add;
            largest = largest.max(self.counts[c] + add.min(rest));
        }
        (self.total + rest.min(colour_sum), largest)
    }

    fn run(&mut self, i: usize) {
        let (ub_total, ub_largest) = self.bound(i);
        match &self.mode {
            Mode::Optimize { goal, best, done, .. } => {
                if *done {
                    return;
                }
                let hopeless = match goal {
                    Goal::Total => ub_total <= best.total,
                    Goal::TotalThenLargest => (ub_total, ub_largest) <= (best.total, best.largest),
                };
                if hopeless {
                    return;
                }
            }
            Mode::Collect { total, largest, .. } => {
                if ub_total < *total || largest.is_some_and(|l| ub_largest < l) {
                    return;
                }
            }
        }
        if i == self.edges.len() {
            self.record();
            return;
        }
        let (u, v) = self.edges[i];
        let avail = self.free[u] & self.free[v] & self.kmask;
        let open = self.k.min(self.used + 1);
        for c in 0..open {
            let bit = 1u8 << c;
            if avail & bit == 0 {
                continue;
            }
            let opened = c == self.used;
            self.colour[i] = c as u8;
            self.free[u] &= !bit;
            self.free[v] &= !bit;
            self.counts[c] += 1;
            self.total += 1;
            if opened {
                self.used += 1;
            }
            self.run(i + 1);
            if opened {
                self.used -= 1;
            }
            self.total -= 1;
            self.counts[c] -= 1;
            self.free[u] |= bit;
            self.free[v] |= bit;
            self.colour[i] = UNUSED;
        }
        self.run(i + 1);
    }

    fn record(&mut self) {
        let largest = self.counts[..self.k].iter().copied().max().unwrap_or(0);
        match &mut self.mode {
            Mode::Optimize { goal, best, ceiling, done } => {
                let better = match goal {
                    Goal::Total => self.total > best.total,
                    Goal::TotalThenLargest => (self.total, largest) > (best.total, best.largest),
                };
                if better {
                    *best = Assignment {
                        colours: self.colour.clone(),
                        total: self.total,
                        largest,
                    };
                    let reached = match goal {
                        Goal::Total => best.total >= ceiling.0,
                        Goal::TotalThenLargest => (best.total, best.largest) >= *ceiling,
                    };
                    *done = reached;
                }
            }
            Mode::Collect { total, largest: want, found } => {
                if self.total == *total && want.is_none_or(|l| l == largest) {
                    found.push(self.colour.clone());
                }
            }
        }
    }
}

/// Best assignment under `goal`, starting from `incumbent`. The search stops
/// as soon as `ceiling` (a proven upper bound) is reached.
pub(crate) fn optimize(
    g: &Graph,
    k: usize,
    goal: Goal,
    incumbent: Assignment,
    ceiling: (usize, usize),
) -> Assignment {
    let reached = match goal {
        Goal::Total => incumbent.total >= ceiling.0,
        Goal::TotalThenLargest => (incumbent.total, incumbent.largest) >= ceiling,
    };
    if reached {
        return incumbent;
    }
    let mode = Mode::Optimize { goal, best: incumbent, ceiling, done: false };
    let mut engine = Engine::new(g, k, mode);
    engine.run(0);
    match engine.mode {
        Mode::Optimize { best, .. } => best,
        Mode::Collect { .. } => unreachable!(),
    }
}

/// Every assignment covering exactly `total` edges (and, if given, with
/// largest class exactly `largest`), one per unordered family of classes.
/// `total` must be the optimum, otherwise larger assignments are missed.
pub(crate) fn collect(g: &Graph, k: usize, total: usize, largest: Option<usize>) -> Vec<Vec<u8>> {
    let mode = Mode::Collect { total, largest, found: Vec::new() };
    let mut engine = Engine::new(g, k, mode);
    engine.run(0);
    match engine.mode {
        Mode::Collect { found, .. } => found,
        Mode::Optimize { .. } => unreachable!(),
    }
}
