//! Batch checking over graph streams.
//!
//! A [`CheckSuite`] names the checks to run; [`run_suite`] applies them to a
//! [`Source`] on a worker pool and folds per-worker partial reports into one
//! [`RunReport`]. Counts are order independent and failures are sorted by
//! graph6 string, so reports are reproducible apart from timings.

mod canon;
mod generate;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub use generate::{
    generate_connected, generate_connected_classes, random_connected, MAX_CLASS_VERTICES,
    MAX_GENERATED_VERTICES,
};

use crate::cover::small::SmallGraph;
use crate::cover::{lambda_mu, nu_k};
use crate::graph::{serialize_graph6, Graph};
use crate::limits::Limits;
use crate::structure::{
    check_augpaths, check_new_edge_lemma, max_intersection_triple, verify_theorem2,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// `4 nu <= 5 mu` and `mu <= nu` on connected graphs with an edge.
    Bounds,
    /// `mu < nu` implies a diamond spanner subgraph.
    Theorem2,
    /// The six alternating-path properties of a maximum intersection triple.
    Augpaths,
    /// `lambda` grows on adding `uv` iff some optimal pair frees both ends
    /// in one class.
    NewEdge,
    /// Cubic graphs: `9 mu >= 8 nu`, `5 lambda >= 4n`, `4 lambda <= n + 2 nu_3`.
    CubicBounds,
    /// Bipartite graphs: `2 nu_k >= nu_(k-i) + nu_(k+i)` for `k + i <= 4`.
    BipartiteNuK,
    /// A Hamiltonian path forces `mu = nu`.
    HamiltonianCorollary,
    /// `lambda >= n - 1` forces `mu = nu = floor(n/2)`.
    NMinus1Covering,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Bounds,
        Check::Theorem2,
        Check::Augpaths,
        Check::NewEdge,
        Check::CubicBounds,
        Check::BipartiteNuK,
        Check::HamiltonianCorollary,
        Check::NMinus1Covering,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bounds => "bounds",
            Check::Theorem2 => "theorem2",
            Check::Augpaths => "augpaths",
            Check::NewEdge => "new_edge",
            Check::CubicBounds => "cubic_bounds",
            Check::BipartiteNuK => "bipartite_nuk",
            Check::HamiltonianCorollary => "hamiltonian_corollary",
            Check::NMinus1Covering => "n_minus_1_covering",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    /// Accepts the snake-case names and their kebab-case spellings.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('-', "_");
        Check::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| Error::Precondition(format!("unknown check '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSuite {
    pub checks: Vec<Check>,
    pub limits: Limits,
    pub seed: u64,
    /// Run on the rayon pool; serial otherwise. Results are identical.
    pub parallel: bool,
}

impl CheckSuite {
    pub fn new(checks: impl IntoIterator<Item = Check>) -> Self {
        let mut checks: Vec<Check> = checks.into_iter().collect();
        checks.sort();
        checks.dedup();
        CheckSuite { checks, limits: Limits::default(), seed: 0, parallel: true }
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn serial(mut self) -> Self {
        self.parallel = false;
        self
    }
}

/// `processed = passed + failed + skipped` and
/// `skipped = skipped_by_bound + not_applicable`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckCounts {
    pub processed: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub skipped_by_bound: u64,
    pub not_applicable: u64,
}

impl CheckCounts {
    fn add(&mut self, other: &CheckCounts) {
        self.processed += other.processed;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        self.skipped_by_bound += other.skipped_by_bound;
        self.not_applicable += other.not_applicable;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub check: String,
    pub witness: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunReport {
    pub graphs: u64,
    pub checks: BTreeMap<String, CheckCounts>,
    pub failures: Vec<Failure>,
    /// Wall-clock milliseconds summed over workers; not reproducible.
    pub timing_ms: BTreeMap<String, u64>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn counts(&self, check: Check) -> CheckCounts {
        self.checks.get(check.name()).copied().unwrap_or_default()
    }

    /// The report as JSON, optionally without the timing table.
    pub fn to_json(&self, with_timing: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if !with_timing {
            v.as_object_mut().unwrap().remove("timing_ms");
        }
        v
    }

    fn empty(suite: &CheckSuite) -> Self {
        RunReport {
            checks: suite.checks.iter().map(|c| (c.name().to_string(), CheckCounts::default())).collect(),
            timing_ms: suite.checks.iter().map(|c| (c.name().to_string(), 0)).collect(),
            ..RunReport::default()
        }
    }
}

/// Graph streams accepted by [`run_suite`].
#[derive(Clone, Debug)]
pub enum Source {
    /// Every labeled connected graph on `1..=max_n` vertices.
    Connected { max_n: usize },
    /// Every connected graph on `1..=max_n` vertices, up to isomorphism.
    ConnectedClasses { max_n: usize },
    Graphs(Vec<Graph>),
}

enum Outcome {
    Pass,
    Fail(Value),
    Skipped,
    NotApplicable,
}

/// One graph under test, with lazily built representations and cached
/// `(nu, mu)`.
struct Subject {
    graph: Option<Graph>,
    small: Option<SmallGraph>,
    nu_mu: Option<(usize, usize)>,
    connected: Option<bool>,
    edges: usize,
}

impl Subject {
    fn from_graph(g: Graph) -> Self {
        Subject {
            small: SmallGraph::from_graph(&g),
            edges: g.edge_count(),
            graph: Some(g),
            nu_mu: None,
            connected: None,
        }
    }

    fn graph(&mut self) -> &Graph {
        let small = self.small;
        self.graph.get_or_insert_with(|| small.expect("one representation").to_graph())
    }

    fn connected(&mut self) -> bool {
        if let Some(c) = self.connected {
            return c;
        }
        let c = match self.small {
            Some(s) => s.is_connected(),
            None => self.graph().is_connected(),
        };
        self.connected = Some(c);
        c
    }

    fn nu_mu(&mut self, limits: &Limits) -> Result<(usize, usize)> {
        if let Some(v) = self.nu_mu {
            return Ok(v);
        }
        let v = match self.small {
            Some(s) => s.nu_mu(),
            None => {
                let r = lambda_mu(self.graph(), limits)?;
                (r.nu, r.mu)
            }
        };
        self.nu_mu = Some(v);
        Ok(v)
    }
}

fn skip_on_bound<T>(r: Result<T>, f: impl FnOnce(T) -> Outcome) -> Result<Outcome> {
    match r {
        Ok(v) => Ok(f(v)),
        Err(Error::BoundExceeded { .. }) => Ok(Outcome::Skipped),
        Err(e) => Err(e),
    }
}

fn verdict(ok: bool, witness: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(witness())
    }
}

fn evaluate(check: Check, s: &mut Subject, limits: &Limits) -> Result<Outcome> {
    match check {
        Check::Bounds => {
            if !s.connected() || s.edges == 0 {
                return Ok(Outcome::NotApplicable);
            }
            let r = s.nu_mu(limits);
            skip_on_bound(r, |(nu, mu)| {
                verdict(4 * nu <= 5 * mu && mu <= nu, || json!({"nu": nu, "mu": mu}))
            })
        }
        Check::Theorem2 => {
            if !s.connected() {
                return Ok(Outcome::NotApplicable);
            }
            let (nu, mu) = match s.nu_mu(limits) {
                Ok(v) => v,
                Err(Error::BoundExceeded { .. }) => return Ok(Outcome::Skipped),
                Err(e) => return Err(e),
            };
            if mu == nu {
                return Ok(Outcome::Pass);
            }
            let v = verify_theorem2(s.graph(), limits)?;
            Ok(verdict(v.consistent, || serde_json::to_value(&v).unwrap()))
        }
        Check::Augpaths => {
            if s.edges == 0 {
                return Ok(Outcome::NotApplicable);
            }
            match s.nu_mu(limits) {
                Ok((nu, mu)) if mu >= nu => return Ok(Outcome::NotApplicable),
                Err(Error::BoundExceeded { .. }) => return Ok(Outcome::Skipped),
                Err(e) => return Err(e),
                Ok(_) => {}
            }
            if s.edges > limits.enumeration_edges {
                return Ok(Outcome::Skipped);
            }
            let g = s.graph().clone();
            skip_on_bound(max_intersection_triple(&g, limits), |t| {
                let r = check_augpaths(&g, &t);
                if !r.applicable {
                    Outcome::NotApplicable
                } else {
                    verdict(r.passed, || serde_json::to_value(&r).unwrap())
                }
            })
        }
        Check::NewEdge => {
            let g = s.graph().clone();
            skip_on_bound(check_new_edge_lemma(&g, limits), |r| {
                verdict(r.passed, || serde_json::to_value(&r).unwrap())
            })
        }
        Check::CubicBounds => {
            let g = s.graph().clone();
            if g.n() == 0 || !g.is_regular(3) {
                return Ok(Outcome::NotApplicable);
            }
            let r = lambda_mu(&g, limits).and_then(|r| Ok((r, nu_k(&g, 3, limits)?.size)));
            skip_on_bound(r, |(r, nu3)| {
                let n = g.n();
                let ok = 9 * r.mu >= 8 * r.nu && 5 * r.lambda >= 4 * n && 4 * r.lambda <= n + 2 * nu3;
                verdict(ok, || json!({"n": n, "nu": r.nu, "mu": r.mu, "lambda": r.lambda, "nu3": nu3}))
            })
        }
        Check::BipartiteNuK => {
            let g = s.graph().clone();
            if !g.is_bipartite() {
                return Ok(Outcome::NotApplicable);
            }
            let sizes: Result<Vec<usize>> = (1..=4).map(|k| nu_k(&g, k, limits).map(|c| c.size)).collect();
            skip_on_bound(sizes, |sizes| {
                let nuk = |k: usize| if k == 0 { 0 } else { sizes[k - 1] };
                let mut bad = Vec::new();
                for k in 1..=4usize {
                    for i in 0..=k.min(4 - k) {
                        if 2 * nuk(k) < nuk(k - i) + nuk(k + i) {
                            bad.push([k, i]);
                        }
                    }
                }
                verdict(bad.is_empty(), || json!({"nu_k": sizes, "violated_k_i": bad}))
            })
        }
        Check::HamiltonianCorollary => {
            let has_path = match s.small {
                Some(sm) => Ok(sm.has_hamiltonian_path()),
                None => s.graph().has_hamiltonian_path(limits),
            };
            let has_path = match has_path {
                Ok(b) => b,
                Err(Error::BoundExceeded { .. }) => return Ok(Outcome::Skipped),
                Err(e) => return Err(e),
            };
            if !has_path {
                return Ok(Outcome::NotApplicable);
            }
            // Exact parameters without the path shortcut.
            let g = s.graph().clone();
            skip_on_bound(lambda_mu(&g, limits), |r| {
                verdict(r.mu == r.nu, || json!({"nu": r.nu, "mu": r.mu}))
            })
        }
        Check::NMinus1Covering => {
            let g = s.graph().clone();
            skip_on_bound(lambda_mu(&g, limits), |r| {
                if r.lambda + 1 < g.n() || g.n() == 0 {
                    Outcome::NotApplicable
                } else {
                    let half = g.n() / 2;
                    verdict(r.mu == half && r.nu == half, || {
                        json!({"n": g.n(), "nu": r.nu, "mu": r.mu, "lambda": r.lambda})
                    })
                }
            })
        }
    }
}

/// Partial report of one worker; merged associatively.
#[derive(Default)]
struct Partial {
    graphs: u64,
    counts: Vec<CheckCounts>,
    failures: Vec<Failure>,
    time: Vec<Duration>,
}

impl Partial {
    fn new(k: usize) -> Self {
        Partial { counts: vec![CheckCounts::default(); k], time: vec![Duration::ZERO; k], ..Partial::default() }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.graphs += other.graphs;
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            a.add(b);
        }
        for (a, b) in self.time.iter_mut().zip(&other.time) {
            *a += *b;
        }
        self.failures.extend(other.failures);
        self
    }

    fn run(&mut self, suite: &CheckSuite, mut s: Subject) {
        self.graphs += 1;
        for (i, &check) in suite.checks.iter().enumerate() {
            let start = Instant::now();
            let outcome = evaluate(check, &mut s, &suite.limits);
            self.time[i] += start.elapsed();
            let c = &mut self.counts[i];
            c.processed += 1;
            match outcome {
                Ok(Outcome::Pass) => c.passed += 1,
                Ok(Outcome::Skipped) => {
                    c.skipped += 1;
                    c.skipped_by_bound += 1;
                }
                Ok(Outcome::NotApplicable) => {
                    c.skipped += 1;
                    c.not_applicable += 1;
                }
                Ok(Outcome::Fail(witness)) => {
                    c.failed += 1;
                    self.failures.push(Failure {
                        graph6: serialize_graph6(s.graph()),
                        check: check.name().to_string(),
                        witness,
                    });
                }
                Err(e) => {
                    c.failed += 1;
                    self.failures.push(Failure {
                        graph6: serialize_graph6(s.graph()),
                        check: check.name().to_string(),
                        witness: json!({"error": e.to_string()}),
                    });
                }
            }
        }
    }

    fn finish(self, suite: &CheckSuite) -> RunReport {
        let mut report = RunReport::empty(suite);
        report.graphs = self.graphs;
        for (i, c) in suite.checks.iter().enumerate() {
            report.checks.insert(c.name().to_string(), self.counts[i]);
            report.timing_ms.insert(c.name().to_string(), self.time[i].as_millis() as u64);
        }
        report.failures = self.failures;
        report.failures.sort_by(|a, b| (&a.graph6, &a.check).cmp(&(&b.graph6, &b.check)));
        report
    }
}

const CHUNK_BITS: u32 = 14;

/// Labeled graphs on `n` vertices straight from edge masks; a [`Graph`] is
/// only built when a check needs one.
fn run_labeled(n: usize, suite: &CheckSuite) -> Partial {
    let pairs = generate::pair_table(n);
    let total: u64 = 1 << pairs.len();
    let chunk = 1u64 << CHUNK_BITS;
    let work = |c: u64| {
        let mut p = Partial::new(suite.checks.len());
        for mask in c * chunk..((c + 1) * chunk).min(total) {
            let small = generate::small_from_mask(n, &pairs, mask);
            if !small.is_connected() {
                continue;
            }
            let s = Subject {
                graph: None,
                small: Some(small),
                nu_mu: None,
                connected: Some(true),
                edges: mask.count_ones() as usize,
            };
            p.run(suite, s);
        }
        p
    };
    let empty = || Partial::new(suite.checks.len());
    let chunks = total.div_ceil(chunk);
    if suite.parallel {
        (0..chunks).into_par_iter().map(work).reduce(empty, Partial::merge)
    } else {
        (0..chunks).map(work).fold(empty(), Partial::merge)
    }
}

/// Applies every check of `suite` to every graph of `source`.
pub fn run_suite(source: Source, suite: &CheckSuite) -> Result<RunReport> {
    let empty = || Partial::new(suite.checks.len());
    let partial = match source {
        Source::Connected { max_n } => {
            let _ = generate_connected(max_n)?;
            (1..=max_n).map(|n| run_labeled(n, suite)).fold(empty(), Partial::merge)
        }
        Source::ConnectedClasses { max_n } => {
            let mut graphs = Vec::new();
            for n in 1..=max_n {
                graphs.extend(generate_connected_classes(n)?);
            }
            return run_suite(Source::Graphs(graphs), suite);
        }
        Source::Graphs(graphs) => {
            let work = |g: Graph| {
                let mut p = empty();
                p.run(suite, Subject::from_graph(g));
                p
            };
            if suite.parallel {
                graphs.into_par_iter().map(work).reduce(empty, Partial::merge)
            } else {
                graphs.into_iter().map(work).fold(empty(), Partial::merge)
            }
        }
    };
    Ok(partial.finish(suite))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_spanner, SpannerSpec};

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert_eq!("new-edge".parse::<Check>().unwrap(), Check::NewEdge);
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn empty_stream_gives_zero_counts() {
        let suite = CheckSuite::new(Check::ALL);
        let r = run_suite(Source::Graphs(Vec::new()), &suite).unwrap();
        assert_eq!(r.graphs, 0);
        assert!(r.checks.values().all(|c| *c == CheckCounts::default()));
        assert!(r.passed());
        let r = run_suite(Source::Connected { max_n: 0 }, &suite).unwrap();
        assert_eq!(r.graphs, 0);
    }

    #[test]
    fn counts_add_up_and_serial_matches_parallel() {
        let suite = CheckSuite::new(Check::ALL);
        let par = run_suite(Source::Connected { max_n: 5 }, &suite).unwrap();
        let ser = run_suite(Source::Connected { max_n: 5 }, &suite.clone().serial()).unwrap();
        assert_eq!(par.to_json(false), ser.to_json(false));
        assert_eq!(par.graphs, 1 + 1 + 4 + 38 + 728);
        for c in par.checks.values() {
            assert_eq!(c.processed, par.graphs);
            assert_eq!(c.processed, c.passed + c.failed + c.skipped);
            assert_eq!(c.skipped, c.skipped_by_bound + c.not_applicable);
        }
        assert!(par.passed(), "{:?}", par.failures);
        let classes = run_suite(Source::ConnectedClasses { max_n: 6 }, &suite).unwrap();
        assert_eq!(classes.graphs, 1 + 1 + 2 + 6 + 21 + 112);
        assert!(classes.passed());
    }

    #[test]
    fn bound_skips_are_not_passes() {
        let spanner = make_spanner(SpannerSpec::left(4)).unwrap().graph;
        let suite = CheckSuite::new([Check::NewEdge, Check::Augpaths])
            .with_limits(Limits { new_edge_edges: 10, enumeration_edges: 10, ..Limits::default() });
        let r = run_suite(Source::Graphs(vec![spanner]), &suite).unwrap();
        assert_eq!(r.counts(Check::NewEdge).skipped_by_bound, 1);
        assert_eq!(r.counts(Check::Augpaths).skipped_by_bound, 1);
        assert_eq!(r.counts(Check::NewEdge).passed, 0);
    }

    #[test]
    fn failures_are_reported_with_witnesses() {
        // A graph on fewer than ten vertices cannot contain the pattern, so a
        // forged graph with mu < nu below that size would be flagged; the
        // spanner itself passes.
        let s = make_spanner(SpannerSpec::left(0)).unwrap().graph;
        let r = run_suite(Source::Graphs(vec![s]), &CheckSuite::new([Check::Theorem2, Check::Augpaths])).unwrap();
        assert!(r.passed());
        assert_eq!(r.counts(Check::Augpaths).passed, 1);
    }
}
