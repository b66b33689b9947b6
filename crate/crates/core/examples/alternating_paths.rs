//! A maximum intersection triple `(M, H, H')` of a spanner and the six
//! properties of its maximal `M-H` alternating paths.

use matchcover::constructions::{make_spanner, SpannerSpec};
use matchcover::structure::{check_augpaths, max_intersection_triple};
use matchcover::Limits;

fn main() {
    let k: usize = std::env::args().nth(1).map_or(1, |a| a.parse().unwrap());
    let g = make_spanner(SpannerSpec::left(k)).unwrap().graph;
    let t = max_intersection_triple(&g, &Limits::default()).unwrap();
    println!("M  = {:?}", t.m.edges());
    println!("H  = {:?}", t.h.edges());
    println!("H' = {:?}", t.h_prime.edges());
    let (both, with_h) = t.score();
    println!("|M & (H | H')| = {both}, |M & H| = {with_h}");

    let report = check_augpaths(&g, &t);
    for v in &report.paths {
        println!("path {:?}", v.path.vertices);
        for (item, ok) in v.items() {
            println!("  ({item}) {}", ok.map_or("n/a", |b| if b { "holds" } else { "FAILS" }));
        }
    }
    println!("all properties hold: {}", report.passed);
}
