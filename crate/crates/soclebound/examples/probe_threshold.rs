//! Bracketing the irreducibility threshold: the least power L of the
//! maximal ideal such that an irreducible parameter ideal inside m^L
//! certifies the Gorenstein property. Finding an irreducible parameter
//! ideal at level L in a non-Gorenstein ring proves the threshold exceeds
//! L; the dimension-one bound n = max{c,g}+1 caps it from above.
//!
//! For Q_a = k[x,y]/(x^{a+1}, x*y^a) the bracket is a < threshold <= 2a+1:
//! (y^a) is irreducible, while sampling at 2a finds nothing (and the theory
//! proves nothing exists there).
//!
//! Run with: cargo run -p soclebound --example probe_threshold

use soclebound::config::EngineConfig;
use soclebound::probe::probe_ell;
use soclebound::{RingModel, RingSpec, Result};

fn main() -> Result<()> {
    let cfg = EngineConfig::default();
    let a = 2u32;
    let model = RingModel::new(RingSpec::from_exponents(
        &["x", "y"],
        32003,
        &[&[a + 1, 0], &[1, a]],
    )?)?;
    println!("{} (non-Gorenstein, a = {a})", model.signature());
    for level in 1..=(2 * a as usize) {
        let rep = probe_ell(&model, level, 100, 7, &cfg)?;
        let found = if rep.all_reducible {
            "all sampled ideals reducible".to_string()
        } else {
            let shown: Vec<&str> =
                rep.irreducible_found.iter().take(3).map(String::as_str).collect();
            format!(
                "{} irreducible, first: {}",
                rep.irreducible_found.len(),
                shown.join("; ")
            )
        };
        println!(
            "  L = {level}: {} certified systems, {} failures, {found}",
            rep.certified, rep.sop_failures
        );
        if let Some(lb) = rep.ell_lower_bound {
            println!("           => threshold > {lb}");
        }
        if let Some(ub) = rep.ell_upper_bound {
            println!("           (upper bound from invariants: {ub})");
        }
    }
    Ok(())
}
