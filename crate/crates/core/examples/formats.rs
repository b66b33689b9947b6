//! Edge list, graph6 and DOT for the same graph. The DOT output colours a
//! maximum matching red and the second matching of an optimal pair blue.

use matchcover::constructions::{make_spanner, SpannerSpec};
use matchcover::cover::lambda_mu;
use matchcover::graph::{parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6, to_dot, DotLayer};
use matchcover::Limits;

fn main() {
    let g = make_spanner(SpannerSpec::new(2, 1)).unwrap().graph;
    let el = serialize_edge_list(&g);
    let g6 = serialize_graph6(&g);
    assert_eq!(parse_edge_list(&el).unwrap(), g);
    assert_eq!(parse_graph6(&g6).unwrap(), g);
    println!("graph6: {g6}");
    print!("{el}");
    let r = lambda_mu(&g, &Limits::default()).unwrap();
    let layers = [
        DotLayer { edges: r.pair.h.edges(), color: "red" },
        DotLayer { edges: r.pair.h_prime.edges(), color: "blue" },
    ];
    print!("{}", to_dot(&g, &layers));
}
