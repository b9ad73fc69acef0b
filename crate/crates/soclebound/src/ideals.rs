//! Degreewise ideal calculus inside the truncated model: the image of a
//! graded ideal in each slice, powers of the maximal ideal, and colon ideals
//! computed as preimages under multiplication maps.
//!
//! Slices are exact wherever they are defined: the degree-d slice of an
//! ideal (g_1,...,g_r) is spanned by u*g_j over standard monomials u, and
//! every such product stays below the horizon when d does.

use crate::algebra::{RingElement, TruncatedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::monomial::Monomial;

/// Per-degree subspaces of a graded ideal (or of any colon of one), exact
/// for every degree up to `sound_upto`.
#[derive(Clone, Debug)]
pub struct GradedIdealSlices {
    gens: Vec<RingElement>,
    slices: Vec<Subspace>,
    sound_upto: usize,
}

impl GradedIdealSlices {
    pub fn generators(&self) -> &[RingElement] {
        &self.gens
    }

    pub fn sound_upto(&self) -> usize {
        self.sound_upto
    }

    pub fn slice(&self, d: usize) -> Result<&Subspace> {
        self.slices.get(d).ok_or(Error::WindowExceeded { needed: d, horizon: self.sound_upto })
    }

    pub fn slice_dims(&self) -> Vec<usize> {
        self.slices.iter().map(|s| s.dim()).collect()
    }

    /// Degreewise equality of two slice families on their common window.
    pub fn slices_equal_upto(&self, other: &GradedIdealSlices, upto: usize) -> Result<bool> {
        for d in 0..=upto {
            if self.slice(d)? != other.slice(d)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Degreewise image of the ideal generated by homogeneous elements.
pub fn ideal_subspace(
    alg: &TruncatedAlgebra,
    gens: &[RingElement],
    upto: usize,
) -> Result<GradedIdealSlices> {
    if upto >= alg.truncation() {
        return Err(Error::WindowExceeded { needed: upto, horizon: alg.truncation() - 1 });
    }
    let mut degs = Vec::with_capacity(gens.len());
    for g in gens {
        if g.is_zero() {
            return Err(Error::InhomogeneousGenerator("zero generator".into()));
        }
        degs.push(
            g.homogeneous_degree()
                .ok_or_else(|| Error::InhomogeneousGenerator(alg.display(g)))?,
        );
    }
    let field = alg.field();
    let mut slices = Vec::with_capacity(upto + 1);
    for d in 0..=upto {
        let ambient = alg.hilbert(d);
        let mut rows = Vec::new();
        for (g, &e) in gens.iter().zip(&degs) {
            if e > d {
                continue;
            }
            for u in alg.basis_at(d - e) {
                let (prod, overflow) = alg.multiply(
                    &alg.monomial_element(u.clone())?,
                    g,
                );
                debug_assert!(!overflow);
                if !prod.is_zero() {
                    rows.push(alg.coords(&prod, d)?);
                }
            }
        }
        slices.push(Subspace::from_rows(field, ambient, rows));
    }
    Ok(GradedIdealSlices { gens: gens.to_vec(), slices, sound_upto: upto })
}

/// Slices of m^i, where m is the ideal of all variables. Generated by the
/// standard monomials of degree i; for i = 0 this is the unit ideal.
pub fn maximal_power_slices(
    alg: &TruncatedAlgebra,
    i: usize,
    upto: usize,
) -> Result<GradedIdealSlices> {
    if i == 0 {
        let gens = vec![alg.monomial_element(Monomial::one(alg.nvars()))?];
        return ideal_subspace(alg, &gens, upto);
    }
    if i >= alg.truncation() {
        return Err(Error::WindowExceeded { needed: i, horizon: alg.truncation() - 1 });
    }
    let gens: Vec<RingElement> = alg
        .basis_at(i)
        .iter()
        .map(|m| alg.monomial_element(m.clone()))
        .collect::<Result<_>>()?;
    ideal_subspace(alg, &gens, upto)
}

/// Colon slices `(q : f)` for homogeneous f: the degree-d slice is the
/// preimage of q's degree-(d + deg f) slice under multiplication by f.
pub fn colon_slices(
    alg: &TruncatedAlgebra,
    q: &GradedIdealSlices,
    f: &RingElement,
    upto: usize,
) -> Result<GradedIdealSlices> {
    let e = f
        .homogeneous_degree()
        .ok_or_else(|| Error::InhomogeneousGenerator(alg.display(f)))?;
    if upto + e > q.sound_upto() {
        return Err(Error::WindowExceeded { needed: upto + e, horizon: q.sound_upto() });
    }
    let mut slices = Vec::with_capacity(upto + 1);
    for d in 0..=upto {
        let target = q.slice(d + e)?;
        if e == 0 {
            // f is a unit times 1: the colon is q itself (f nonzero checked below)
            slices.push(q.slice(d)?.clone());
            continue;
        }
        let map = alg.mult_matrix(f, d)?;
        slices.push(Subspace::preimage_under(&map, target));
    }
    if f.is_zero() {
        return Err(Error::InhomogeneousGenerator("colon by zero".into()));
    }
    Ok(GradedIdealSlices { gens: Vec::new(), slices, sound_upto: upto })
}
