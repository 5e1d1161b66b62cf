//! The constants `l(n)`, `l2(n)` and the resulting degree ceilings.
//!
//! cargo run --example degree_bounds -- 100

use quasihom::bounds::{degree_ceiling, l, l2};

fn main() {
    let mu: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(100);
    for n in 1..=8 {
        println!("n={n}: l = {}  l2(n+1) = {}  d <= {} for mu <= {mu}", l(n), l2(n + 1), degree_ceiling(n + 1, mu));
    }
}
