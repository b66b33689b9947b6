//! `nu_1 .. nu_4` for a few graphs. On bipartite graphs the sequence is
//! concave: `2 nu_k >= nu_(k-1) + nu_(k+1)`.

use matchcover::constructions::{make_propeller, make_spanner, SpannerSpec};
use matchcover::cover::nu_k;
use matchcover::graph::Graph;
use matchcover::Limits;

fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
}

fn main() {
    let graphs = [
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K3,3", Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()),
        ("propeller 4", make_propeller(4).unwrap()),
        ("2-spanner", make_spanner(SpannerSpec::left(2)).unwrap().graph),
    ];
    for (name, g) in graphs {
        let sizes: Vec<usize> = (1..=4).map(|k| nu_k(&g, k, &Limits::default()).unwrap().size).collect();
        println!("{name:12} bipartite = {:5}  nu_1..4 = {sizes:?}", g.is_bipartite());
    }
}
