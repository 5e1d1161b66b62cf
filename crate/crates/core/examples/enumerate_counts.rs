//! Counts of weight systems by number of variables and Milnor number bound.
//!
//! cargo run --release --example enumerate_counts -- 3 200

use std::time::Instant;

use quasihom::enumerate::{enumerate, EnumerateOptions};

fn main() -> quasihom::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let cases: Vec<(usize, u64)> = match args.as_slice() {
        [n, mu] => vec![(*n as usize, *mu)],
        _ => vec![(2, 50), (2, 100), (3, 50), (3, 100), (4, 50), (4, 100)],
    };
    for (n, mu_max) in cases {
        let start = Instant::now();
        let records = enumerate(n, mu_max, &EnumerateOptions::default())?;
        println!("n={n} mu<={mu_max}: {} systems ({:.2?})", records.len(), start.elapsed());
    }
    Ok(())
}
