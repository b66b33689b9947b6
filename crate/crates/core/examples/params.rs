//! Exact `nu`, `lambda`, `mu` and `nu_k` of a graph, with witnesses.
//!
//!     cargo run --example params -- graph.el
//!
//! Without an argument the 0-spanner is used.

use matchcover::constructions::{make_spanner, SpannerSpec};
use matchcover::cover::params_report;
use matchcover::graph::parse_edge_list;
use matchcover::Limits;

fn main() {
    let g = match std::env::args().nth(1) {
        Some(path) => parse_edge_list(&std::fs::read_to_string(path).unwrap()).unwrap(),
        None => make_spanner(SpannerSpec::left(0)).unwrap().graph,
    };
    let r = params_report(&g, &[3, 4], &Limits::from_env()).unwrap();
    println!("n = {}, m = {}", r.n, r.m);
    println!("nu = {}, lambda = {}, mu = {}, mu' = {}", r.nu, r.lambda, r.mu, r.mu_prime);
    match r.ratio() {
        Ok((p, q)) => println!("mu/nu = {p}/{q}"),
        Err(e) => println!("mu/nu: {e}"),
    }
    for (k, v) in &r.nu_k {
        println!("nu_{k} = {v}");
    }
    println!("maximum matching: {:?}", r.max_matching.edges());
    println!("H  = {:?}", r.pair.h.edges());
    println!("H' = {:?}", r.pair.h_prime.edges());
}
