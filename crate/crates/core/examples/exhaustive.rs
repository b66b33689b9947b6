//! Runs checks over every connected graph on up to `N` vertices (default 6),
//! once over labeled graphs and once over isomorphism classes.
//!
//!     cargo run --release --example exhaustive -- 7 bounds,theorem2,new_edge

use matchcover::harness::{run_suite, Check, CheckSuite, Source};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(6, |a| a.parse().unwrap());
    let checks: Vec<Check> = match args.next() {
        Some(list) => list.split(',').map(|c| c.parse().unwrap()).collect(),
        None => Check::ALL.to_vec(),
    };
    let suite = CheckSuite::new(checks);
    for source in [Source::Connected { max_n: n }, Source::ConnectedClasses { max_n: n }] {
        let label = match source {
            Source::Connected { .. } => "labeled",
            _ => "classes",
        };
        let start = std::time::Instant::now();
        let report = run_suite(source, &suite).unwrap();
        println!("{label}: {} graphs in {:?}", report.graphs, start.elapsed());
        for (name, c) in &report.checks {
            println!(
                "  {name:22} passed {:9}  failed {:3}  n/a {:9}  over bound {:6}",
                c.passed, c.failed, c.not_applicable, c.skipped_by_bound
            );
        }
        for f in &report.failures {
            println!("  FAIL {} {}: {}", f.check, f.graph6, f.witness);
        }
    }
}
