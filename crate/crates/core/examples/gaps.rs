//! Milnor numbers above `2^n` that no weight system attains.
//!
//! cargo run --release --example gaps -- 3 1000

use quasihom::enumerate::{find_gaps, EnumerateOptions};

fn main() -> quasihom::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, mu_max) = match args.as_slice() {
        [n, mu] => (*n as usize, *mu),
        _ => (3, 300),
    };
    let report = find_gaps(n, mu_max, &EnumerateOptions::default())?;
    for g in &report.gaps {
        println!("{}{}", g.mu, if g.sophie_germain { "  prime pair" } else { "" });
    }
    println!("{} gaps for n={n}, {} < mu <= {mu_max}", report.gaps.len(), report.lower_exclusive);
    Ok(())
}
