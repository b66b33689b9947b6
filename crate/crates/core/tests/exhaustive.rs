//! Exhaustive runs over small connected graphs beyond the acceptance set.

use matchcover::constructions::*;
use matchcover::harness::{generate_connected, run_suite, Check, CheckSuite, Source};
use matchcover::structure::verify_theorem2;
use matchcover::Limits;

#[test]
fn generator_counts() {
    // Labeled connected graphs on n vertices.
    let counts: Vec<usize> = (1..=5).map(|n| generate_connected(n).unwrap().count()).collect();
    assert_eq!(counts, [1, 1, 4, 38, 728]);
}

/// Ten vertices is the smallest diamond spanner, so every connected graph on
/// at most nine vertices has `mu = nu`.
#[test]
fn theorem2_on_every_class_up_to_nine_vertices() {
    let report = run_suite(Source::ConnectedClasses { max_n: 9 }, &CheckSuite::new([Check::Bounds, Check::Theorem2])).unwrap();
    assert_eq!(report.graphs, 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117 + 261080);
    assert!(report.passed(), "{:?}", report.failures.first());
    assert_eq!(report.counts(Check::Theorem2).passed, report.graphs);
}

#[test]
fn theorem2_on_constructed_families() {
    let limits = Limits::default();
    let mut graphs = Vec::new();
    for k in 0..=5 {
        for left in 0..=k {
            graphs.push(make_spanner(SpannerSpec::new(k, left)).unwrap().graph);
        }
    }
    for d in 0..=2 {
        graphs.push(make_diamond_spanner(DiamondSpannerSpec::new(d)).unwrap());
    }
    for len in 1..=3 {
        graphs.push(chain_spanners(&ChainSpec { spanners: vec![SpannerSpec::left(0); len] }).unwrap().graph);
    }
    graphs.push(chain_spanners(&ChainSpec { spanners: vec![SpannerSpec::left(1), SpannerSpec::left(0), SpannerSpec::new(2, 1)] }).unwrap().graph);
    for g in &graphs {
        let v = verify_theorem2(g, &limits).unwrap();
        assert!(v.ratio_lt_one && v.consistent, "{v:?}");
    }
}

#[test]
fn all_checks_on_classes_up_to_seven_vertices() {
    let report = run_suite(Source::ConnectedClasses { max_n: 7 }, &CheckSuite::new(Check::ALL)).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    // Nothing on seven vertices reaches the default bounds except new_edge.
    for c in Check::ALL {
        if c != Check::NewEdge {
            assert_eq!(report.counts(c).skipped_by_bound, 0, "{c}");
        }
    }
}

#[test]
fn spanner_family_passes_augpaths_in_the_harness() {
    let graphs: Vec<_> = (0..=5).map(|k| make_spanner(SpannerSpec::left(k)).unwrap().graph).collect();
    let report = run_suite(Source::Graphs(graphs), &CheckSuite::new([Check::Augpaths])).unwrap();
    assert_eq!(report.counts(Check::Augpaths).passed, 6);
}
