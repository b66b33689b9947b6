//! Seeded random connected graphs through the diamond-spanner check. The
//! same seed always gives the same graphs and the same report.

use matchcover::harness::{random_connected, run_suite, Check, CheckSuite, Source};

fn main() {
    let seed: u64 = std::env::args().nth(1).map_or(7, |a| a.parse().unwrap());
    let mut graphs = Vec::new();
    for n in 10..=12 {
        for extra in 0..=3 {
            graphs.extend(random_connected(n, n - 1 + extra, seed, 250).unwrap());
        }
    }
    let suite = CheckSuite::new([Check::Bounds, Check::Theorem2]);
    let report = run_suite(Source::Graphs(graphs), &suite).unwrap();
    println!("{}", serde_json::to_string_pretty(&report.to_json(false)).unwrap());
}
