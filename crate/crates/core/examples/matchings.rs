//! Maximum matchings: the blossom matcher against exhaustive search, and a
//! maximum matching that shares as many edges as possible with a given set.

use matchcover::constructions::{make_spanner, SpannerSpec};
use matchcover::graph::Graph;
use matchcover::matching::{brute_force_matching, max_matching, max_matching_lex};
use matchcover::Limits;

fn main() {
    // Five-cycle with a pendant path: needs a blossom.
    let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)]).unwrap();
    let m = max_matching(&g);
    let b = brute_force_matching(&g, &Limits::default()).unwrap();
    println!("blossom {:?}\nbrute   {:?}", m.edges(), b.edges());
    assert_eq!(m.len(), b.len());

    let s = make_spanner(SpannerSpec::left(0)).unwrap();
    let inner = s.inner_edges();
    let best = max_matching_lex(&s.graph, &inner, &[]).unwrap();
    println!("maximum matching using most inner leg edges: {:?}", best.edges());
}
