//! Homogeneous systems of parameters and their Artinian certificates.
//!
//! A candidate system q = (f_1,...,f_d) with d = dim R is certified by the
//! least degree M at which the slice of q fills the whole Hilbert slice.
//! Because the ring is graded and generated in degree 1, a full slice at M
//! forces full slices at every higher degree, so m^M ⊆ q + I and R/q is
//! Artinian; the code re-checks that propagation instead of assuming it.

use crate::algebra::{RingElement, TruncatedAlgebra};
use crate::error::{Error, Result};
use crate::ideals::{ideal_subspace, GradedIdealSlices};

/// A certified homogeneous system of parameters together with its graded
/// ideal slices (sound through the artinian degree).
#[derive(Clone, Debug)]
pub struct ParameterSystem {
    elements: Vec<RingElement>,
    artinian_degree: usize,
    certified: bool,
    slices: GradedIdealSlices,
}

impl ParameterSystem {
    pub fn elements(&self) -> &[RingElement] {
        &self.elements
    }

    pub fn artinian_degree(&self) -> usize {
        self.artinian_degree
    }

    pub fn certified(&self) -> bool {
        self.certified
    }

    pub fn slices(&self) -> &GradedIdealSlices {
        &self.slices
    }

    pub fn max_degree(&self) -> usize {
        self.elements
            .iter()
            .filter_map(|e| e.homogeneous_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn display(&self, alg: &TruncatedAlgebra) -> Vec<String> {
        self.elements.iter().map(|e| alg.display(e)).collect()
    }
}

/// Outcome of a certification attempt. Not being a system of parameters is a
/// verdict, not an error: the probing modules count such failures.
#[derive(Clone, Debug)]
pub enum SopVerdict {
    Certified(ParameterSystem),
    NotASop { checked_upto: usize },
}

impl SopVerdict {
    pub fn certified(self) -> Result<ParameterSystem> {
        match self {
            SopVerdict::Certified(p) => Ok(p),
            SopVerdict::NotASop { .. } => Err(Error::UncertifiedSystem),
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, SopVerdict::Certified(_))
    }
}

/// Certify a candidate system inside the given truncation window. The search
/// for the artinian degree runs over M < N - maxdeg(elements); a window too
/// small for that range is the caller's cue to escalate.
pub fn certify_sop_in(alg: &TruncatedAlgebra, elements: &[RingElement]) -> Result<SopVerdict> {
    let dim = alg.model().dim();
    if elements.len() != dim {
        return Err(Error::WrongGeneratorCount { expected: dim, found: elements.len() });
    }
    let mut maxdeg = 0usize;
    for e in elements {
        match e.homogeneous_degree() {
            Some(d) if d >= 1 => maxdeg = maxdeg.max(d),
            _ => return Err(Error::InhomogeneousGenerator(alg.display(e))),
        }
    }
    let horizon = alg.truncation();
    if horizon <= maxdeg + 1 {
        return Err(Error::WindowExceeded { needed: maxdeg + 2, horizon: horizon - 1 });
    }
    let upto = horizon - 1 - maxdeg;
    let slices = ideal_subspace(alg, elements, upto)?;
    let mut artinian = None;
    for m in 0..=upto {
        if slices.slice(m)?.dim() == alg.hilbert(m) {
            artinian = Some(m);
            break;
        }
    }
    let Some(m) = artinian else {
        return Ok(SopVerdict::NotASop { checked_upto: upto });
    };
    // gradedness check: once a slice fills, every later computed slice fills
    for d in m..=upto {
        if slices.slice(d)?.dim() != alg.hilbert(d) {
            return Err(Error::Internal(format!(
                "slice of a parameter ideal full at degree {m} but not at {d}"
            )));
        }
    }
    Ok(SopVerdict::Certified(ParameterSystem {
        elements: elements.to_vec(),
        artinian_degree: m,
        certified: true,
        slices,
    }))
}

/// Model-level certification: pick the truncation automatically, escalate on
/// window exhaustion, and escalate once more by half before accepting a
/// not-a-sop verdict (a certificate that failed only for lack of room closes
/// on the second try; a genuine non-parameter system keeps failing).
pub fn certify_sop(
    model: &crate::ring::RingModel,
    terms: &[Vec<(crate::monomial::Monomial, i64)>],
    cfg: &crate::config::EngineConfig,
) -> Result<(TruncatedAlgebra, SopVerdict)> {
    let maxdeg = terms
        .iter()
        .flat_map(|t| t.iter().map(|(m, _)| m.degree()))
        .max()
        .unwrap_or(1);
    let mut n = crate::algebra::auto_truncation(model, cfg.truncation).max(maxdeg + 3);
    let mut escalated_for_verdict = false;
    loop {
        let alg = TruncatedAlgebra::new(model, n.min(cfg.max_truncation))?;
        let elements: Vec<RingElement> =
            terms.iter().map(|t| alg.element(t)).collect::<Result<_>>()?;
        match certify_sop_in(&alg, &elements) {
            Ok(SopVerdict::NotASop { .. })
                if !escalated_for_verdict && n < cfg.max_truncation =>
            {
                escalated_for_verdict = true;
                n = (n + n / 2).min(cfg.max_truncation);
            }
            Ok(v) => return Ok((alg, v)),
            Err(Error::WindowExceeded { needed, .. }) if n < cfg.max_truncation => {
                n = (n + n / 2).max(needed + 2).min(cfg.max_truncation);
            }
            Err(e) => return Err(e),
        }
    }
}
