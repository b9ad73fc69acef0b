//! Socles of Artinian quotients R/q and the irreducibility criterion: a
//! parameter ideal q is irreducible exactly when dim Soc(R/q) = 1.
//!
//! In Q = k[x,y]/(x^{a+1}, x*y^a) the parameter ideal (y^a) is irreducible
//! with socle spanned by x^a*y^(a-1), while every (y^j) with j > a has a
//! fatter socle.
//!
//! Run with: cargo run -p soclebound --example socles

use soclebound::config::{with_escalation, EngineConfig};
use soclebound::params::certify_sop_in;
use soclebound::probe::socle_of_parameter_ideal;
use soclebound::{Monomial, RingModel, RingSpec, Result};

fn main() -> Result<()> {
    let cfg = EngineConfig::default();
    let a = 2u32;
    let spec = RingSpec::from_exponents(&["x", "y"], 32003, &[&[a + 1, 0], &[1, a]])?;
    let model = RingModel::new(spec)?;
    println!("{}", model.signature());
    for j in a..=a + 2 {
        with_escalation(&model, &cfg, (4 * a + 8) as usize, |alg| {
            let yj = alg.monomial_element(Monomial::new(vec![0, j]))?;
            let sop = certify_sop_in(alg, std::slice::from_ref(&yj))?.certified()?;
            let soc = socle_of_parameter_ideal(alg, &sop)?;
            let basis: Vec<String> = soc.reps.iter().map(|e| alg.display(e)).collect();
            println!(
                "  (y^{j}): artinian degree {}, socle dim {} ({}), basis {{{}}}",
                sop.artinian_degree(),
                soc.dim,
                if soc.dim == 1 { "irreducible" } else { "reducible" },
                basis.join(", "),
            );
            Ok(())
        })?;
    }
    Ok(())
}
