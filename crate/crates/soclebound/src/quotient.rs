//! Artinian quotients R/q in explicit coordinates, their socles, and
//! multiplication maps between quotients.
//!
//! The quotient of the degree-d slice by q's slice is coordinatized by the
//! non-pivot columns of the slice's reduced echelon basis: the normal form
//! of a vector is supported exactly there, which makes the quotient
//! coordinates canonical. The socle is computed degreewise as the joint
//! kernel of multiplication by every variable into the quotient, i.e. the
//! preimage of q's next slice, modulo q.

use crate::algebra::{RingElement, TruncatedAlgebra};
use crate::error::{Error, Result};
use crate::ideals::GradedIdealSlices;
use crate::linalg::{Matrix, Subspace};
use crate::params::ParameterSystem;

/// R/q for an Artinian graded ideal q, full slice at degree `top`.
#[derive(Clone, Debug)]
pub struct ArtinianQuotient {
    qslices: Vec<Subspace>,
    top: usize,
    degree_dims: Vec<usize>,
    nonpivots: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    total_dim: usize,
}

impl ArtinianQuotient {
    pub fn new(alg: &TruncatedAlgebra, sop: &ParameterSystem) -> Result<Self> {
        if !sop.certified() {
            return Err(Error::UncertifiedSystem);
        }
        Self::from_slices(alg, sop.slices(), sop.artinian_degree())
    }

    /// Build from explicit slices with a full slice at `top`. Requires the
    /// slices to be sound through `top` and the window to extend one degree
    /// past `top` for the socle's multiplication maps.
    pub fn from_slices(
        alg: &TruncatedAlgebra,
        slices: &GradedIdealSlices,
        top: usize,
    ) -> Result<Self> {
        if top + 1 >= alg.truncation() {
            return Err(Error::WindowExceeded { needed: top + 1, horizon: alg.truncation() - 1 });
        }
        let mut qslices = Vec::with_capacity(top + 1);
        for d in 0..=top {
            qslices.push(slices.slice(d)?.clone());
        }
        if !qslices[top].is_full() {
            return Err(Error::Internal(format!(
                "quotient constructed with a non-full slice at its artinian degree {top}"
            )));
        }
        let mut degree_dims = Vec::with_capacity(top);
        let mut nonpivots = Vec::with_capacity(top);
        let mut offsets = Vec::with_capacity(top);
        let mut total = 0usize;
        for (d, q) in qslices.iter().enumerate().take(top) {
            let np = q.nonpivot_cols();
            offsets.push(total);
            total += np.len();
            degree_dims.push(np.len());
            debug_assert_eq!(q.ambient_dim(), alg.hilbert(d));
            nonpivots.push(np);
        }
        Ok(ArtinianQuotient { qslices, top, degree_dims, nonpivots, offsets, total_dim: total })
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    pub fn degree_dims(&self) -> &[usize] {
        &self.degree_dims
    }

    pub fn q_slice(&self, d: usize) -> &Subspace {
        &self.qslices[d]
    }

    /// Quotient coordinates of a slice vector of degree d.
    fn project(&self, d: usize, slice_vec: &[u64]) -> Vec<u64> {
        let nf = self.qslices[d].reduce_vector(slice_vec);
        self.nonpivots[d].iter().map(|&c| nf[c]).collect()
    }

    /// Global quotient coordinates of a (possibly inhomogeneous) element.
    pub fn coords(&self, alg: &TruncatedAlgebra, f: &RingElement) -> Result<Vec<u64>> {
        let mut out = vec![0u64; self.total_dim];
        let mut by_degree: std::collections::BTreeMap<usize, Vec<(usize, u64)>> =
            Default::default();
        for (m, c) in f.terms() {
            let d = m.degree();
            if d >= self.top {
                continue; // zero in the quotient
            }
            let (dd, i) = alg
                .index_of(m)
                .ok_or_else(|| Error::Internal("element term outside the basis".into()))?;
            debug_assert_eq!(dd, d);
            by_degree.entry(d).or_default().push((i, c));
        }
        for (d, entries) in by_degree {
            let mut v = vec![0u64; alg.hilbert(d)];
            for (i, c) in entries {
                v[i] = c;
            }
            let proj = self.project(d, &v);
            let off = self.offsets[d];
            out[off..off + proj.len()].copy_from_slice(&proj);
        }
        Ok(out)
    }

    /// The standard monomial representing a global coordinate.
    pub fn lift(&self, alg: &TruncatedAlgebra, global: usize) -> (usize, RingElement) {
        let d = match self.offsets.binary_search(&global) {
            Ok(i) => {
                // offsets may repeat when a degree has dimension zero; take
                // the last degree starting here that is nonempty
                let mut i = i;
                while i + 1 < self.offsets.len() && self.offsets[i + 1] == global {
                    i += 1;
                }
                i
            }
            Err(i) => i - 1,
        };
        let col = self.nonpivots[d][global - self.offsets[d]];
        let m = alg.basis_at(d)[col].clone();
        (d, alg.monomial_element(m).expect("standard monomial inside the window"))
    }

    /// Matrix of multiplication by a homogeneous element into another
    /// quotient, in global quotient coordinates.
    pub fn mult_map(
        &self,
        alg: &TruncatedAlgebra,
        target: &ArtinianQuotient,
        multiplier: &RingElement,
    ) -> Result<Matrix> {
        let Some(e) = multiplier.homogeneous_degree() else {
            return Err(Error::InhomogeneousGenerator(alg.display(multiplier)));
        };
        let mut map = Matrix::zeros(alg.field(), self.total_dim, target.total_dim);
        for g in 0..self.total_dim {
            let (d, u) = self.lift(alg, g);
            if d + e >= target.top {
                continue;
            }
            let (prod, overflow) = alg.multiply(&u, multiplier);
            if overflow {
                return Err(Error::WindowExceeded {
                    needed: d + e,
                    horizon: alg.truncation() - 1,
                });
            }
            let row = target.coords(alg, &prod)?;
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    map.set(g, j, v);
                }
            }
        }
        Ok(map)
    }

    /// The socle (0 : m) of the quotient: dimension, per-degree dimensions,
    /// lifted representatives, and the subspace in quotient coordinates.
    pub fn socle(&self, alg: &TruncatedAlgebra) -> Result<SocleData> {
        let field = alg.field();
        let nvars = alg.nvars();
        let mut per_degree = Vec::with_capacity(self.top);
        let mut reps = Vec::new();
        let mut rows = Vec::new();
        for d in 0..self.top {
            let ambient = alg.hilbert(d);
            let next_full = self.qslices[d + 1].is_full();
            let joint = if next_full {
                Subspace::full(field, ambient)
            } else {
                let mut acc: Option<Subspace> = None;
                for t in 0..nvars {
                    let map = alg.var_mult_matrix(t, d)?;
                    let pre = Subspace::preimage_under(&map, &self.qslices[d + 1]);
                    acc = Some(match acc {
                        None => pre,
                        Some(a) => a.meet(&pre)?,
                    });
                }
                acc.unwrap_or_else(|| Subspace::full(field, ambient))
            };
            debug_assert!(joint.contains(&self.qslices[d]).unwrap_or(false));
            let comp = self.qslices[d].complement_basis_in(&joint)?;
            per_degree.push(comp.len());
            for v in comp {
                reps.push(alg.element_from_coords(d, &v));
                let proj = self.project(d, &v);
                let mut row = vec![0u64; self.total_dim];
                let off = self.offsets[d];
                row[off..off + proj.len()].copy_from_slice(&proj);
                rows.push(row);
            }
        }
        let space = Subspace::from_rows(field, self.total_dim, rows);
        if space.dim() != reps.len() {
            return Err(Error::Internal("socle representatives are dependent".into()));
        }
        Ok(SocleData { dim: reps.len(), per_degree, reps, space })
    }
}

/// Socle of an Artinian quotient.
#[derive(Clone, Debug)]
pub struct SocleData {
    pub dim: usize,
    pub per_degree: Vec<usize>,
    pub reps: Vec<RingElement>,
    pub space: Subspace,
}
