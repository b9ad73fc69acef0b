//! Compute the dimension-one invariants of a monomial quotient: the
//! reduction number c of the maximal ideal (with its witness), the torsion
//! gap g, and the bound n = max{c, g} + 1 past which an irreducible
//! parameter ideal certifies the Gorenstein property.
//!
//! Run with: cargo run -p soclebound --example invariants

use soclebound::config::{with_escalation, EngineConfig};
use soclebound::{dim1_invariants, RingModel, RingSpec, Result};

fn main() -> Result<()> {
    let cfg = EngineConfig::default();
    let rings = [
        ("cusp-like line", RingSpec::from_exponents(&["x", "y"], 32003, &[&[2, 0], &[1, 1]])?),
        ("two axes", RingSpec::from_exponents(&["x", "y"], 32003, &[&[1, 1]])?),
        ("fat axis", RingSpec::from_exponents(&["x", "y"], 32003, &[&[3, 0], &[1, 2]])?),
    ];
    for (label, spec) in rings {
        let model = RingModel::new(spec)?;
        let (inv, witness) = with_escalation(&model, &cfg, 0, |alg| {
            let inv = dim1_invariants(alg, cfg.attempts, 7)?;
            let witness = alg.display(&inv.c_witness);
            Ok((inv, witness))
        })?;
        println!("{label}: {}", model.signature());
        println!("  reduction number c = {} (witness {witness}, {})", inv.c, inv.c_certainty.as_str());
        println!("  torsion gap g      = {}", inv.g);
        println!("  bound n            = {}", inv.bound_n);
        println!();
    }
    Ok(())
}
