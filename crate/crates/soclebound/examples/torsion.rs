//! The m-torsion submodule Γ_m(R) = H^0_m(R): its monomial basis is computed
//! combinatorially and exactly. A ring has positive depth exactly when Γ
//! vanishes; for the family k[x,y]/(x^{a+1}, x*y^a) the torsion has
//! dimension a^2 and its deepest monomial sits in degree 2a - 1, which puts
//! the torsion gap at g = 2a.
//!
//! Run with: cargo run -p soclebound --example torsion

use soclebound::config::{with_escalation, EngineConfig};
use soclebound::dim1::torsion_gap;
use soclebound::{gamma_torsion, RingModel, RingSpec, Result};

fn main() -> Result<()> {
    let cfg = EngineConfig::default();
    for a in 1..=4u32 {
        let spec = RingSpec::from_exponents(&["x", "y"], 32003, &[&[a + 1, 0], &[1, a]])?;
        let model = RingModel::new(spec)?;
        let (dim, basis, g) = with_escalation(&model, &cfg, 0, |alg| {
            let gamma = gamma_torsion(alg)?;
            let basis: Vec<String> = gamma
                .monomials()
                .iter()
                .map(|m| m.display(model.spec().vars()))
                .collect();
            let g = torsion_gap(alg, &gamma)?;
            Ok((gamma.dim(), basis, g))
        })?;
        println!("a = {a}: {}", model.signature());
        println!("  dim Γ = {dim}, torsion gap g = {g}");
        println!("  basis: {}", basis.join(", "));
        println!();
    }
    Ok(())
}
