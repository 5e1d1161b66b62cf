//! Characteristic polynomial of the monodromy, as a divisor and expanded.
//!
//! cargo run --example monodromy -- 4 5 6 16

use quasihom::WeightSystem;

fn main() -> quasihom::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let values = if args.len() >= 2 { args } else { vec![4, 5, 6, 16] };
    let ws = WeightSystem::from_slice(&values)?;
    let div = ws.charpoly_milnor_orlik()?;
    println!("{ws}");
    println!("divisor:        {div}");
    println!("from exponents: {}", ws.exponents()?.to_divisor()?);
    println!("order:          {}", ws.monodromy_order()?);
    println!("polynomial:     {}", div.to_poly()?);
    Ok(())
}
