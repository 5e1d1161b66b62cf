//! Systems with prime Milnor number are chains; list their exponent tuples.
//!
//! cargo run --release --example prime_milnor_chains -- 3 31

use quasihom::arith::is_prime;
use quasihom::enumerate::{chain_weight_system, classify_prime_mu, EnumerateOptions};

fn main() -> quasihom::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, mu_max) = match args.as_slice() {
        [n, mu] => (*n as usize, *mu),
        _ => (3, 31),
    };
    let audit = classify_prime_mu(n, mu_max, &EnumerateOptions::default())?;
    for mu in (2..=mu_max).filter(|&m| is_prime(m)) {
        let chains = audit.chains_for(mu);
        if chains.is_empty() {
            continue;
        }
        let shown: Vec<String> = chains
            .iter()
            .map(|a| Ok(format!("{a:?}->{}", chain_weight_system(a)?.system)))
            .collect::<quasihom::Result<_>>()?;
        println!("{mu}: {}", shown.join(" "));
    }
    for v in &audit.violations {
        println!("violation: {v}");
    }
    Ok(())
}
