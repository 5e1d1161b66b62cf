//! Weight systems with `Σv = d` (four variables) and `Σv = d/2` (three).
//!
//! cargo run --release --example yonemura

use quasihom::enumerate::{enumerate, sum3_eq_half_d, sum_weights_eq_d, EnumerateOptions};

fn main() -> quasihom::Result<()> {
    let opts = EnumerateOptions::default();
    let three: Vec<_> = enumerate(3, 500, &opts)?.into_iter().filter(|r| sum3_eq_half_d(&r.system)).collect();
    let four: Vec<_> = enumerate(4, 300, &opts)?.into_iter().filter(|r| sum_weights_eq_d(&r.system)).collect();
    for r in three.iter().chain(&four) {
        println!("{} mu={} types={}", r.system, r.mu, r.kappa_types.join(","));
    }
    println!("{} with n=3, {} with n=4", three.len(), four.len());
    Ok(())
}
