//! Krull dimension and Hilbert functions of monomial quotient rings. The
//! truncated model enumerates standard monomials degree by degree, so every
//! printed value is exact.
//!
//! Run with: cargo run -p soclebound --example hilbert_functions

use soclebound::{RingModel, RingSpec, Result, TruncatedAlgebra};

fn main() -> Result<()> {
    let rings = [
        RingSpec::from_exponents(&["x", "y"], 32003, &[&[2, 0], &[1, 1]])?,
        RingSpec::from_exponents(&["x", "y"], 32003, &[&[1, 1]])?,
        RingSpec::from_exponents(&["x", "y", "z"], 32003, &[&[1, 0, 1], &[0, 1, 1]])?,
        RingSpec::from_exponents(&["x", "y"], 32003, &[])?,
    ];
    for spec in rings {
        let model = RingModel::new(spec)?;
        let alg = TruncatedAlgebra::new(&model, 9)?;
        println!("{}", model.signature());
        println!("  dim = {}", model.dim());
        println!("  H(0..8) = {:?}", alg.hilbert_series());
        println!();
    }
    Ok(())
}
