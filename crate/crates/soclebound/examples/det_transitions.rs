//! Determinant transition maps between nested parameter ideals: writing
//! each generator of the inner system in terms of the outer one gives a
//! coefficient matrix A, and multiplication by det A maps R/(outer) to
//! R/(inner). For nested powers of one system the canonical certificate is
//! diagonal and the map recovers the direct-system transition.
//!
//! Different membership certificates may shift the determinant by an
//! element of the inner limit closure; composing into the limit removes the
//! difference (see the lemmas test suite).
//!
//! Run with: cargo run -p soclebound --example det_transitions

use soclebound::config::{with_escalation, EngineConfig};
use soclebound::limits::det_transition_in;
use soclebound::params::certify_sop_in;
use soclebound::{Monomial, RingModel, RingSpec, Result};

fn main() -> Result<()> {
    let cfg = EngineConfig::default();
    let model = RingModel::new(RingSpec::from_exponents(
        &["x", "y"],
        32003,
        &[&[2, 0], &[1, 1]],
    )?)?;
    with_escalation(&model, &cfg, 12, |alg| {
        let y2 = alg.monomial_element(Monomial::new(vec![0, 2]))?;
        let y3 = alg.monomial_element(Monomial::new(vec![0, 3]))?;
        let outer = certify_sop_in(alg, std::slice::from_ref(&y2))?.certified()?;
        let inner = certify_sop_in(alg, std::slice::from_ref(&y3))?.certified()?;
        let t = det_transition_in(alg, &outer, &inner, None)?;
        println!("{}", alg.model().signature());
        println!("  outer (y^2), inner (y^3)");
        println!("  certificate: y^3 = ({}) * y^2", alg.display(&t.coefficients[0][0]));
        println!("  det = {}", alg.display(&t.det));
        println!("  map R/(y^2) -> R/(y^3) in quotient coordinates:");
        for r in 0..t.map.rows() {
            println!("    {:?}", t.map.row(r));
        }
        Ok(())
    })
}
