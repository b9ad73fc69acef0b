//! Limit closures: the union of the colon chain
//! ((x_1^{n+1},...,x_d^{n+1}) : (x_1···x_d)^n). The quotient of the closure
//! by the parameter ideal is the kernel of the canonical map into the top
//! local cohomology, so a trivial closure detects a regular sequence.
//!
//! Run with: cargo run -p soclebound --example limit_closure

use soclebound::config::EngineConfig;
use soclebound::limits::limit_closure;
use soclebound::{Monomial, RingModel, RingSpec, Result};

fn main() -> Result<()> {
    let cfg = EngineConfig::default();

    // depth-0 ring: the closure of (y) grows to the whole maximal ideal
    let model = RingModel::new(RingSpec::from_exponents(
        &["x", "y"],
        32003,
        &[&[2, 0], &[1, 1]],
    )?)?;
    let sop = vec![vec![(Monomial::new(vec![0, 1]), 1i64)]];
    let lc = limit_closure(&model, &sop, 3, &cfg)?;
    println!("{} with sop (y):", model.signature());
    for (n, dims) in lc.chain_dims.iter().enumerate() {
        println!("  chain term {n}: slice dims {dims:?}");
    }
    println!(
        "  stabilized at n = {:?} ({})",
        lc.stabilized_at,
        if lc.certified { "certified" } else { "empirical" }
    );
    println!();

    // Cohen-Macaulay ring: x+y is regular, the closure is the ideal itself
    let model =
        RingModel::new(RingSpec::from_exponents(&["x", "y"], 32003, &[&[1, 1]])?)?;
    let sop = vec![vec![(Monomial::var(0, 2), 1i64), (Monomial::var(1, 2), 1)]];
    let lc = limit_closure(&model, &sop, 3, &cfg)?;
    println!("{} with sop (x+y):", model.signature());
    for (n, dims) in lc.chain_dims.iter().enumerate() {
        println!("  chain term {n}: slice dims {dims:?}");
    }
    println!("  closure equals the ideal: regular sequence");
    Ok(())
}
