//! Taking a maximum matching and then a maximum matching of what is left is
//! not optimal: on the 0-spanner it covers 7 edges, two disjoint matchings
//! can cover 8. Chained spanners add up the loss.

use matchcover::constructions::{chain_spanners, ChainSpec, SpannerSpec};
use matchcover::cover::{greedy_two_cover, lambda_mu};
use matchcover::Limits;

fn main() {
    for len in 1..=3 {
        let chain = chain_spanners(&ChainSpec { spanners: vec![SpannerSpec::left(0); len] }).unwrap();
        let (greedy, pair) = greedy_two_cover(&chain.graph);
        let r = lambda_mu(&chain.graph, &Limits::default()).unwrap();
        println!("{len} spanner(s): greedy {greedy}, lambda {}, gap {}", r.lambda, r.lambda - greedy);
        if len == 1 {
            println!("  greedy H  = {:?}", pair.h.edges());
            println!("  greedy H' = {:?}", pair.h_prime.edges());
            println!("  best   H  = {:?}", r.pair.h.edges());
            println!("  best   H' = {:?}", r.pair.h_prime.edges());
        }
    }
}
