//! The spanner family: every k and every split of the extra legs between the
//! two central vertices gives `nu = k + 5`, `lambda = k + 8`, `mu = k + 4`.

use matchcover::constructions::{make_spanner, SpannerSpec};
use matchcover::cover::lambda_mu;
use matchcover::Limits;

fn main() {
    let limits = Limits::default();
    println!(" k left   n  nu lambda  mu  ratio");
    for k in 0..=6 {
        for left in 0..=k {
            let s = make_spanner(SpannerSpec::new(k, left)).unwrap();
            let r = lambda_mu(&s.graph, &limits).unwrap();
            let (p, q) = r.ratio().unwrap();
            println!("{k:2} {left:4} {:3} {:3} {:6} {:3}  {p}/{q}", r.n, r.nu, r.lambda, r.mu);
            assert_eq!((r.nu, r.lambda, r.mu), (k + 5, k + 8, k + 4));
        }
    }
}
