//! Graphs with `mu < nu` contain a diamond spanner. Searches a few of them
//! and prints where the pattern sits.

use matchcover::constructions::{make_diamond_spanner, make_theorem1_graph, DiamondSpannerSpec};
use matchcover::structure::{find_diamond_spanner, verify_theorem2};
use matchcover::Limits;

fn main() {
    let limits = Limits::default();
    let mut hosts = vec![
        ("ratio 8/10".to_string(), make_theorem1_graph(8, 10).unwrap().graph),
        ("ratio 17/19".to_string(), make_theorem1_graph(17, 19).unwrap().graph),
    ];
    for d in 1..=3 {
        hosts.push((format!("D_{d}"), make_diamond_spanner(DiamondSpannerSpec::new(d)).unwrap()));
    }
    for (name, g) in hosts {
        let v = verify_theorem2(&g, &limits).unwrap();
        print!("{name}: {} vertices, nu = {}, mu = {}", g.n(), v.nu, v.mu);
        match find_diamond_spanner(&g) {
            Some(w) => println!(", D_{} at {:?}", w.d, w.embedding),
            None => println!(", no diamond spanner"),
        }
        assert!(v.consistent);
    }
}
