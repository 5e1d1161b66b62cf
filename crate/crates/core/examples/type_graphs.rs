//! Isomorphism classes of maps `κ` and the weight systems they generate.
//!
//! cargo run --example type_graphs -- 3

use quasihom::graphs::{enumerate_types, solve_weights, KappaGraph, SolveOutcome};

fn main() -> quasihom::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    for t in enumerate_types(n)? {
        let g = KappaGraph::new(t.representative.clone(), (0..n as u64).map(|j| j + 2).collect())?;
        let solved = match solve_weights(&g)? {
            SolveOutcome::System(ws) => format!("{ws} mu={}", ws.milnor_number()),
            other => format!("{other:?}"),
        };
        println!("{:>6} fcc={:<5} kappa={:?}  a=2,3,..: {solved}", t.label, t.is_fcc(), t.representative);
    }
    Ok(())
}
