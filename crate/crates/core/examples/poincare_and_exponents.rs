//! Milnor number, Poincaré series and exponents of a weight system.
//!
//! cargo run --example poincare_and_exponents -- 2 3 6

use quasihom::WeightSystem;

fn main() -> quasihom::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let values = if args.len() >= 2 { args } else { vec![2, 3, 6] };
    let ws = WeightSystem::from_slice(&values)?;
    println!("{ws}: mu = {}", ws.milnor_number());
    match ws.poincare_series() {
        Ok(rho) => println!("rho(t) = {rho}"),
        Err(e) => {
            println!("no polynomial Poincaré series: {e}");
            return Ok(());
        }
    }
    let exps = ws.exponents()?;
    for (alpha, mult) in exps.distinct() {
        println!("  exponent {alpha}  x{mult}");
    }
    Ok(())
}
