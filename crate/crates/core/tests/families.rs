//! Parameter values of the constructed families, checked by the exact
//! solver and, where small enough, by exhaustive edge colouring.

use matchcover::constructions::*;
use matchcover::cover::{lambda_mu, ratio};
use matchcover::harness::{random_connected, run_suite, Check, CheckSuite, Source};
use matchcover::{Graph, Limits};

fn params(g: &Graph) -> (usize, usize, usize) {
    let r = lambda_mu(g, &Limits::default()).unwrap();
    (r.nu, r.lambda, r.mu)
}

/// `(lambda, mu)` by trying all `3^m` ways to put each edge in `H`, `H'` or
/// neither.
fn brute_lambda_mu(g: &Graph) -> (usize, usize) {
    let m = g.edge_count();
    let mut best = (0, 0);
    let mut digits = vec![0u8; m];
    loop {
        let mut used = vec![[false; 2]; g.n()];
        let mut ok = true;
        let mut sizes = [0usize; 2];
        for (i, e) in g.edges().iter().enumerate() {
            let c = digits[i] as usize;
            if c == 2 {
                continue;
            }
            for v in e.endpoints() {
                ok &= !used[v][c];
                used[v][c] = true;
            }
            sizes[c] += 1;
        }
        if ok {
            let total = sizes[0] + sizes[1];
            best = best.max((total, sizes[0].max(sizes[1])));
        }
        let Some(i) = digits.iter().position(|&d| d < 2) else { break };
        digits[i] += 1;
        digits[..i].iter_mut().for_each(|d| *d = 0);
    }
    best
}

#[test]
fn spanner_values_agree_with_exhaustive_colouring() {
    for (k, left) in [(0, 0), (1, 1), (2, 1)] {
        let g = make_spanner(SpannerSpec::new(k, left)).unwrap().graph;
        let (_, lambda, mu) = params(&g);
        assert_eq!(brute_lambda_mu(&g), (lambda, mu));
    }
}

#[test]
fn diamond_spanner_values() {
    // Solver values, frozen; the first two agree with exhaustive colouring.
    let expected = [(5, 8, 4), (7, 12, 6), (9, 16, 8), (11, 20, 10)];
    for (d, &want) in expected.iter().enumerate() {
        let g = make_diamond_spanner(DiamondSpannerSpec::new(d)).unwrap();
        assert_eq!(params(&g), want, "D_{d}");
        if g.edge_count() <= 15 {
            assert_eq!(brute_lambda_mu(&g), (want.1, want.2));
        }
    }
}

#[test]
fn spanner_examples() {
    let s = make_spanner(SpannerSpec::new(3, 3)).unwrap();
    assert_eq!(s.graph.n(), 16);
    assert_eq!(params(&s.graph), (8, 11, 7));
    let (nu, lambda, mu) = params(&make_spanner(SpannerSpec::new(5, 2)).unwrap().graph);
    assert_eq!((nu, lambda, mu), (10, 13, 9));
}

#[test]
fn chains_add_up() {
    let chain = |ks: &[usize]| {
        chain_spanners(&ChainSpec { spanners: ks.iter().map(|&k| SpannerSpec::left(k)).collect() }).unwrap().graph
    };
    assert_eq!(params(&chain(&[0, 0])), (10, 16, 8));
    let (nu, _, mu) = params(&chain(&[0, 0, 0]));
    assert_eq!(ratio(mu, nu).unwrap(), (4, 5));
    assert_eq!((nu, mu), (15, 12));
    assert_eq!(params(&chain(&[1, 2])), (13, 19, 11));
}

#[test]
fn ratio_graph_examples() {
    let c = make_theorem1_graph(17, 19).unwrap();
    assert_eq!(c.components.last().unwrap().legs.len(), 4 + 9);
    assert_eq!(c.components.len(), 2);
    let c = make_theorem1_graph(9, 10).unwrap();
    assert_eq!(c.components.len(), 1);
    assert_eq!(c.components[0].legs.len(), 4 + 5);
    let (nu, _, mu) = params(&c.graph);
    assert_eq!((mu, nu), (9, 10));
}

#[test]
fn adjoining_a_leg_raises_nu_by_one() {
    let mut g = make_spanner(SpannerSpec::left(0)).unwrap().graph;
    for k in 1..=4 {
        let before = params(&g).0;
        g = adjoin_leg(&g, k % 2).unwrap();
        assert_eq!(params(&g).0, before + 1);
    }
}

#[test]
fn propeller_values() {
    assert_eq!(params(&make_propeller(4).unwrap()), (4, 6, 4));
    assert_eq!(params(&make_propeller(8).unwrap()), (8, 10, 8));
    // One blade is a path of length two: lambda = |E| = 2, not n + 2.
    assert_eq!(params(&make_propeller(1).unwrap()), (1, 2, 1));
    assert_eq!(brute_lambda_mu(&make_propeller(3).unwrap()), (5, 3));
}

#[test]
fn random_ensemble_within_bounds() {
    let graphs = random_connected(12, 14, 7, 10_000).unwrap();
    assert!(graphs.iter().all(|g| g.is_connected() && g.edge_count() == 14));
    let report = run_suite(Source::Graphs(graphs), &CheckSuite::new([Check::Bounds, Check::Theorem2])).unwrap();
    assert!(report.passed());
    assert_eq!(report.counts(Check::Bounds).passed, 10_000);
}
