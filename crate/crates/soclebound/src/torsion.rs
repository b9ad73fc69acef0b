//! The m-torsion submodule Γ_m(R) of a monomial quotient, computed
//! combinatorially.
//!
//! For a monomial ideal I, Γ has a basis of standard monomials: u is torsion
//! exactly when for every variable x_t some power x_t^e * u lands in I, and
//! e can always be taken as 1 + (largest exponent of x_t among generators).
//! Moreover every torsion monomial has its t-exponent strictly below the
//! largest t-exponent of the generators, so the degree scan below is
//! exhaustive once the window clears the generator degree mass.

use crate::algebra::TruncatedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::monomial::Monomial;

/// Γ_m(R): monomial basis, grouped by degree, with coordinate subspaces.
#[derive(Clone, Debug)]
pub struct TorsionModule {
    monomials: Vec<Monomial>,
    by_degree: Vec<Vec<usize>>,
    max_degree: Option<usize>,
}

impl TorsionModule {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Largest degree of a torsion monomial; `None` when Γ = 0.
    pub fn max_degree(&self) -> Option<usize> {
        self.max_degree
    }

    /// Degree-d piece of Γ as a subspace of the degree-d slice.
    pub fn slice(&self, alg: &TruncatedAlgebra, d: usize) -> Result<Subspace> {
        if d >= alg.truncation() {
            return Err(Error::WindowExceeded { needed: d, horizon: alg.truncation() - 1 });
        }
        let ambient = alg.hilbert(d);
        let rows: Vec<Vec<u64>> = self
            .by_degree
            .get(d)
            .map(|idxs| {
                idxs.iter()
                    .map(|&i| {
                        let mut v = vec![0u64; ambient];
                        let (_, col) = alg.index_of(&self.monomials[i]).expect("standard");
                        v[col] = 1;
                        v
                    })
                    .collect()
            })
            .unwrap_or_default();
        Ok(Subspace::from_rows(alg.field(), ambient, rows))
    }
}

/// Compute Γ_m(R). Exact: the scan covers every degree a torsion monomial
/// can occupy, and errors if the window is too small for that bound.
pub fn gamma_torsion(alg: &TruncatedAlgebra) -> Result<TorsionModule> {
    let spec = alg.model().spec();
    let n = spec.nvars();
    // Sharp degree bound for torsion monomials: exponent of x_t is at most
    // max_exponent(t) - 1, and a variable absent from I admits no torsion.
    let bound: usize = if spec.generators().is_empty() || (0..n).any(|t| spec.max_exponent(t) == 0)
    {
        0
    } else {
        (0..n).map(|t| spec.max_exponent(t) as usize - 1).sum()
    };
    if bound + 1 > alg.truncation() {
        return Err(Error::WindowExceeded { needed: bound + 1, horizon: alg.truncation() - 1 });
    }
    let powers: Vec<Monomial> =
        (0..n).map(|t| Monomial::var_pow(t, spec.max_exponent(t) + 1, n)).collect();
    let mut monomials = Vec::new();
    let mut by_degree = vec![Vec::new(); bound + 1];
    for d in 0..=bound {
        for m in alg.basis_at(d) {
            if powers.iter().all(|p| spec.in_ideal(&m.mul(p))) {
                by_degree[d].push(monomials.len());
                monomials.push(m.clone());
            }
        }
    }
    let max_degree = monomials.iter().map(|m| m.degree()).max();
    Ok(TorsionModule { monomials, by_degree, max_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{RingModel, RingSpec};

    fn alg(vars: &[&str], gens: &[&[u32]], n: usize) -> TruncatedAlgebra {
        let spec = RingSpec::from_exponents(vars, 32003, gens).unwrap();
        TruncatedAlgebra::new(&RingModel::new(spec).unwrap(), n).unwrap()
    }

    #[test]
    fn gamma_vanishes_without_embedded_torsion() {
        let a = alg(&["x", "y"], &[&[1, 1]], 8);
        assert!(gamma_torsion(&a).unwrap().is_zero());
        // y is regular on k[x,y]/(x^2)
        let a = alg(&["x", "y"], &[&[2, 0]], 8);
        assert!(gamma_torsion(&a).unwrap().is_zero());
        // polynomial ring
        let a = alg(&["x", "y"], &[], 6);
        assert!(gamma_torsion(&a).unwrap().is_zero());
    }

    #[test]
    fn gamma_of_x2_xy_is_spanned_by_x() {
        let a = alg(&["x", "y"], &[&[2, 0], &[1, 1]], 10);
        let g = gamma_torsion(&a).unwrap();
        assert_eq!(g.dim(), 1);
        assert_eq!(g.monomials(), &[Monomial::new(vec![1, 0])]);
        assert_eq!(g.max_degree(), Some(1));
    }

    #[test]
    fn gamma_of_family_matches_enumeration_oracle() {
        // Oracle: scan every standard monomial in the window and apply the
        // torsion definition with a brute-force power search.
        for a in 1..=4u32 {
            let al = alg(&["x", "y"], &[&[a + 1, 0], &[1, a]], (4 * a + 6) as usize);
            let g = gamma_torsion(&al).unwrap();
            let mut oracle = Vec::new();
            for d in 0..al.truncation() {
                for m in al.basis_at(d) {
                    let torsion = (0..2).all(|t| {
                        (1..=2 * a + 2).any(|e| {
                            al.model()
                                .spec()
                                .in_ideal(&m.mul(&Monomial::var_pow(t, e, 2)))
                        })
                    });
                    if torsion {
                        oracle.push(m.clone());
                    }
                }
            }
            assert_eq!(g.dim(), (a * a) as usize, "a = {a}");
            assert_eq!(g.monomials(), oracle.as_slice(), "a = {a}");
            // basis is exactly x^i y^j with 1 <= i <= a, 0 <= j <= a-1
            for m in g.monomials() {
                let (i, j) = (m.exponent(0), m.exponent(1));
                assert!((1..=a).contains(&i) && j < a);
            }
            assert_eq!(g.max_degree(), Some((2 * a - 1) as usize));
        }
    }

    #[test]
    fn gamma_slices_sit_inside_the_hilbert_slices(){
        let a = alg(&["x", "y"], &[&[3, 0], &[1, 2]], 12);
        let g = gamma_torsion(&a).unwrap();
        let mut total = 0;
        for d in 0..6 {
            let s = g.slice(&a, d).unwrap();
            assert!(s.dim() <= a.hilbert(d));
            total += s.dim();
        }
        assert_eq!(total, g.dim());
    }
}
