//! Propellers: `n` paths of length two sharing one end. For `n >= 2`,
//! `nu = mu = n`, `lambda = n + 2`, so `mu' = 2`.

use matchcover::constructions::make_propeller;
use matchcover::cover::lambda_mu;
use matchcover::Limits;

fn main() {
    for n in 1..=8 {
        let g = make_propeller(n).unwrap();
        let r = lambda_mu(&g, &Limits::default()).unwrap();
        println!("n = {n}: nu = {}, lambda = {}, mu = {}, mu' = {}", r.nu, r.lambda, r.mu, r.mu_prime);
    }
}
