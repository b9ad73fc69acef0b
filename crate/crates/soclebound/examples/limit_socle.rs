//! The parameter-power direct system R/(x_1^i,...,x_d^i) with transitions
//! given by multiplication by x_1···x_d, whose limit is the top local
//! cohomology H^d_m(R). The engine pushes each stage's socle toward the
//! limit and reports the stable socle dimension and the first stage whose
//! image already covers it.
//!
//! In k[x,y]/(x^2,xy) with sop (y), the stage-1 socle class x dies under
//! the first transition, so surjectivity onto Soc H^1 starts at stage 2.
//!
//! Run with: cargo run -p soclebound --example limit_socle

use soclebound::config::EngineConfig;
use soclebound::limits::power_quotient_system;
use soclebound::{Monomial, RingModel, RingSpec, Result};

fn main() -> Result<()> {
    let cfg = EngineConfig::default();

    let model = RingModel::new(RingSpec::from_exponents(
        &["x", "y"],
        32003,
        &[&[2, 0], &[1, 1]],
    )?)?;
    let sop = vec![vec![(Monomial::new(vec![0, 1]), 1i64)]];
    let rep = power_quotient_system(&model, &sop, 6, &cfg)?;
    println!("{} with sop (y):", model.signature());
    println!("  socle dims per stage:   {:?}", rep.socle_dims);
    println!("  images at stage i_max:  {:?}", rep.image_dims_at_imax);
    println!("  images into the limit:  {:?}", rep.limit_image_dims);
    println!("  stable socle dim:       {}", rep.stable_socle_dim);
    println!("  surjectivity index:     {:?}", rep.surjectivity_index);
    println!("  certification:          {}", rep.certification.as_str());
    println!();

    // a two-dimensional ring: certification is empirical (survival window)
    let model = RingModel::new(RingSpec::from_exponents(
        &["x", "y", "z"],
        32003,
        &[&[1, 0, 1], &[0, 1, 1]],
    )?)?;
    let sop = vec![
        vec![(Monomial::var(0, 3), 1i64), (Monomial::var(2, 3), 1)],
        vec![(Monomial::var(1, 3), 1)],
    ];
    let rep = power_quotient_system(&model, &sop, 5, &cfg)?;
    println!("{} with sop (x+z, y):", model.signature());
    println!("  socle dims per stage:   {:?}", rep.socle_dims);
    println!("  images into the limit:  {:?}", rep.limit_image_dims);
    println!("  stable socle dim:       {}", rep.stable_socle_dim);
    println!("  surjectivity index:     {:?}", rep.surjectivity_index);
    println!("  certification:          {}", rep.certification.as_str());
    Ok(())
}
