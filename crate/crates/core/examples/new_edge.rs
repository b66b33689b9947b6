//! Adding an edge `uv` raises `lambda` exactly when some optimal pair leaves
//! both `u` and `v` uncovered in one of its two matchings.

use matchcover::constructions::{make_spanner, SpannerSpec};
use matchcover::graph::Graph;
use matchcover::structure::check_new_edge_lemma;
use matchcover::Limits;

fn main() {
    let graphs = [
        ("path on 5 vertices", Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap()),
        ("star with 4 leaves", Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()),
        ("0-spanner", make_spanner(SpannerSpec::left(0)).unwrap().graph),
    ];
    for (name, g) in graphs {
        let r = check_new_edge_lemma(&g, &Limits::default()).unwrap();
        println!(
            "{name}: lambda = {}, {} optimal pairs, {} non-edges, criterion {}",
            r.lambda,
            r.pairs,
            r.non_edges,
            if r.passed { "holds" } else { "fails" }
        );
        for v in &r.violations {
            println!("  {}-{}: predicted {}, increased {}", v.u, v.v, v.predicted, v.increased);
        }
    }
}
