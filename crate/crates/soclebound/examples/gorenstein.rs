//! Dimension-one Gorenstein detection: depth via the torsion submodule and
//! Cohen-Macaulay type via the socle of a certified parameter witness.
//!
//! Run with: cargo run -p soclebound --example gorenstein

use soclebound::config::EngineConfig;
use soclebound::probe::gorenstein_dim1;
use soclebound::{RingModel, RingSpec, Result};

fn main() -> Result<()> {
    let cfg = EngineConfig::default();
    let rings = [
        RingSpec::from_exponents(&["x", "y"], 32003, &[&[1, 1]])?,
        RingSpec::from_exponents(&["x", "y"], 32003, &[&[2, 0]])?,
        RingSpec::from_exponents(&["x", "y"], 32003, &[&[3, 0], &[1, 2]])?,
        RingSpec::from_exponents(&["x", "y"], 32003, &[&[3, 1], &[1, 2]])?,
    ];
    for spec in rings {
        let model = RingModel::new(spec)?;
        let v = gorenstein_dim1(&model, &cfg, 7)?;
        let verdict = if v.gorenstein {
            "Gorenstein".to_string()
        } else if !v.depth_ok {
            "not Gorenstein (depth 0)".to_string()
        } else {
            format!("not Gorenstein (type {})", v.cm_type.unwrap_or(0))
        };
        println!("{}: {verdict}", model.signature());
    }
    Ok(())
}
