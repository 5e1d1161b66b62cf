//! Isolation verdicts for a weight system given as `v_1 .. v_n d`.
//!
//! cargo run --example check_weight_system -- 1 33 58 24 265

use quasihom::conditions::{check_condition, check_gcd_condition, Condition, SupportSet};
use quasihom::WeightSystem;

fn main() -> quasihom::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let values = if args.len() >= 2 { args } else { vec![1, 33, 58, 24, 265] };
    let ws = WeightSystem::from_slice(&values)?;
    println!("{ws}  reduced: {}  below half: {}", ws.is_reduced(), ws.all_below_half());
    for c in Condition::ALL {
        let r = check_condition(&ws, &SupportSet::Full, c);
        let witness = r.witness.map(|w| format!(" ({w})")).unwrap_or_default();
        println!("{c:?}: {}{witness}", r.verdict);
    }
    // The gcd condition is necessary only; it cannot see the failure above.
    println!("GCD: {}", check_gcd_condition(&ws).verdict);
    Ok(())
}
