//! Graphs with a prescribed ratio `mu / nu = m / n` for every admissible pair
//! with `n <= 12`, built as chains of spanners and checked by the exact
//! solver. Pass `-- M N` for a single pair, e.g. `17 19`.

use matchcover::constructions::{admissible_ratios, make_theorem1_graph};
use matchcover::cover::lambda_mu;
use matchcover::Limits;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().unwrap()).collect();
    let pairs = match args.as_slice() {
        [m, n] => vec![(*m, *n)],
        _ => admissible_ratios(12),
    };
    let limits = Limits::default();
    for (m, n) in pairs {
        let chain = match make_theorem1_graph(m, n) {
            Ok(c) => c,
            Err(e) => {
                println!("{m}/{n}: {e}");
                continue;
            }
        };
        let start = std::time::Instant::now();
        let r = lambda_mu(&chain.graph, &limits).unwrap();
        println!(
            "{m:2}/{n:2}: {} spanners, {} vertices, {} edges -> mu = {}, nu = {} ({:?})",
            chain.components.len(),
            r.n,
            r.m,
            r.mu,
            r.nu,
            start.elapsed()
        );
        assert_eq!((r.mu, r.nu), (m, n));
    }
}
