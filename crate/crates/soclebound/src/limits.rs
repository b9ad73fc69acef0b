//! The parameter-power direct system R/(x_1^i,...,x_d^i) with transition
//! maps given by multiplication by x_1···x_d, socle images pushed toward the
//! limit H^d_m(R), determinant transition maps between nested parameter
//! ideals, limit closures, and the socle-surjectivity consequence checker.
//!
//! Stabilization of the pushed socle images is detected empirically with a
//! survival window; in dimension one it is certified instead: once a pushed
//! class has a representative of degree at least the torsion gap g, an
//! injectivity argument (x^i y = 0 and y in m^g force y = 0) shows no later
//! transition can kill it, so pushing every image ceil(g/deg x) extra stages
//! computes exact limit-image dimensions.

use crate::algebra::{RingElement, TruncatedAlgebra};
use crate::config::{with_escalation, EngineConfig};
use crate::error::{Error, Result};
use crate::ideals::{colon_slices, ideal_subspace};
use crate::linalg::{Matrix, Subspace};
use crate::monomial::Monomial;
use crate::params::{certify_sop_in, ParameterSystem, SopVerdict};
use crate::quotient::{ArtinianQuotient, SocleData};
use crate::ring::RingModel;
use crate::rng::derive_rng;
use crate::torsion::gamma_torsion;

/// How the stabilization claim in a [`DirectSystemReport`] is backed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SystemCertification {
    /// Dimension one: survival of pushed images past the torsion gap is a
    /// theorem, so the limit-image dimensions are exact.
    CertifiedDim1,
    /// Higher dimension: images were required to survive `window` extra
    /// stages; later deaths or later generators would go unseen.
    Empirical { window: usize },
}

impl SystemCertification {
    pub fn as_str(&self) -> &'static str {
        match self {
            SystemCertification::CertifiedDim1 => "certified",
            SystemCertification::Empirical { .. } => "empirical-window",
        }
    }
}

/// Result of realizing the parameter-power direct system.
#[derive(Clone, Debug)]
pub struct DirectSystemReport {
    pub i_max: usize,
    /// Stages built beyond `i_max` to test survival.
    pub extra_stages: usize,
    /// dim Soc(R/q^{[i]}) for i = 1..=i_max.
    pub socle_dims: Vec<usize>,
    /// Artinian degree of each stage quotient, i = 1..=i_max.
    pub stage_tops: Vec<usize>,
    /// Image of Soc(stage i) pushed to stage i_max.
    pub image_dims_at_imax: Vec<usize>,
    /// Image of Soc(stage i) pushed all the way to stage i_max + extra.
    pub limit_image_dims: Vec<usize>,
    pub stable_socle_dim: usize,
    pub surjectivity_index: Option<usize>,
    pub certification: SystemCertification,
    pub truncation: usize,
}

fn product_of(alg: &TruncatedAlgebra, elements: &[RingElement]) -> Result<RingElement> {
    let mut acc = alg.monomial_element(Monomial::one(alg.nvars()))?;
    for e in elements {
        let (next, overflow) = alg.multiply(&acc, e);
        if overflow {
            return Err(Error::WindowExceeded {
                needed: alg.truncation(),
                horizon: alg.truncation() - 1,
            });
        }
        acc = next;
    }
    Ok(acc)
}

fn stage_powers(alg: &TruncatedAlgebra, base: &[RingElement], i: usize) -> Result<Vec<RingElement>> {
    base.iter()
        .map(|x| {
            let (p, overflow) = alg.power(x, i);
            if overflow || p.is_zero() {
                // a power of a parameter cannot vanish, so running out of
                // representable degrees is a window problem
                Err(Error::WindowExceeded {
                    needed: i * x.homogeneous_degree().unwrap_or(1),
                    horizon: alg.truncation() - 1,
                })
            } else {
                Ok(p)
            }
        })
        .collect()
}

fn certify_stage(alg: &TruncatedAlgebra, powers: &[RingElement]) -> Result<ParameterSystem> {
    match certify_sop_in(alg, powers)? {
        SopVerdict::Certified(p) => Ok(p),
        // powers of a certified system are a system; a failed certificate
        // here means the window stopped before their artinian degree
        SopVerdict::NotASop { .. } => Err(Error::WindowExceeded {
            needed: alg.truncation(),
            horizon: alg.truncation() - 1,
        }),
    }
}

fn div_ceil(a: usize, b: usize) -> usize {
    if b == 0 {
        0
    } else {
        a.div_ceil(b)
    }
}

/// Realize the system inside a fixed window. Errors with `WindowExceeded`
/// when the truncation cannot hold stage `i_max + extra`.
pub fn power_quotient_system_in(
    alg: &TruncatedAlgebra,
    base: &[RingElement],
    i_max: usize,
    window: usize,
) -> Result<DirectSystemReport> {
    if i_max == 0 {
        return Err(Error::InvalidArgument("i_max must be at least 1".into()));
    }
    let d = alg.model().dim();
    if d == 0 {
        return Err(Error::WrongDimension { expected: 1, found: 0 });
    }
    let base_sop = certify_sop_in(alg, base)?.certified()?;
    let pi = product_of(alg, base_sop.elements())?;
    let (extra, certification) = if d == 1 {
        let g = crate::dim1::torsion_gap(alg, &gamma_torsion(alg)?)?;
        let e = base[0].homogeneous_degree().unwrap_or(1);
        (window.max(div_ceil(g, e)), SystemCertification::CertifiedDim1)
    } else {
        (window, SystemCertification::Empirical { window })
    };
    let last = i_max + extra;

    let mut quotients: Vec<ArtinianQuotient> = Vec::with_capacity(last);
    let mut socles: Vec<SocleData> = Vec::with_capacity(last);
    for i in 1..=last {
        let powers = stage_powers(alg, base_sop.elements(), i)?;
        let sop = certify_stage(alg, &powers)?;
        let quo = ArtinianQuotient::new(alg, &sop)?;
        let soc = quo.socle(alg)?;
        quotients.push(quo);
        socles.push(soc);
    }
    let mut transitions: Vec<Matrix> = Vec::with_capacity(last - 1);
    for i in 1..last {
        transitions.push(quotients[i - 1].mult_map(alg, &quotients[i], &pi)?);
    }

    let mut image_dims_at_imax = Vec::with_capacity(i_max);
    let mut limit_images: Vec<Subspace> = Vec::with_capacity(i_max);
    for i in 1..=i_max {
        let mut rows = socles[i - 1].space.basis_matrix().clone();
        if i == i_max {
            image_dims_at_imax.push(socles[i - 1].dim);
        }
        // after applying transitions[j] the rows live at stage j + 2
        for (j, t) in transitions.iter().enumerate().skip(i - 1) {
            rows = rows.mul(t);
            if j + 2 == i_max {
                image_dims_at_imax.push(Subspace::from_matrix(rows.clone()).dim());
            }
        }
        limit_images.push(Subspace::from_matrix(rows));
    }
    // images form an increasing chain toward the limit
    for w in limit_images.windows(2) {
        if !w[1].contains(&w[0])? {
            return Err(Error::Internal("pushed socle images are not nested".into()));
        }
    }
    let stable = limit_images.last().expect("i_max >= 1").clone();
    let stable_socle_dim = stable.dim();
    let mut surjectivity_index =
        (1..=i_max).find(|&i| limit_images[i - 1] == stable);
    if let Some(ix) = surjectivity_index {
        if ix + extra > i_max {
            surjectivity_index = None;
        }
    }
    Ok(DirectSystemReport {
        i_max,
        extra_stages: extra,
        socle_dims: socles.iter().take(i_max).map(|s| s.dim).collect(),
        stage_tops: quotients.iter().take(i_max).map(|q| q.top()).collect(),
        image_dims_at_imax,
        limit_image_dims: limit_images.iter().map(|s| s.dim()).collect(),
        stable_socle_dim,
        surjectivity_index,
        certification,
        truncation: alg.truncation(),
    })
}

/// Model-level entry point: certifies the base system (with the shared
/// escalate-once policy, so a genuine non-parameter input is an input error),
/// escalates the truncation as stages need it, and raises `i_max` once if
/// the index did not settle inside the survival margin.
pub fn power_quotient_system(
    model: &RingModel,
    base_terms: &[Vec<(Monomial, i64)>],
    i_max: usize,
    cfg: &EngineConfig,
) -> Result<DirectSystemReport> {
    let (alg0, verdict) = crate::params::certify_sop(model, base_terms, cfg)?;
    verdict.certified()?;
    let min_n = alg0.truncation();
    let run = |stages: usize| {
        with_escalation(model, cfg, min_n, |alg| {
            let base: Vec<RingElement> =
                base_terms.iter().map(|t| alg.element(t)).collect::<Result<_>>()?;
            power_quotient_system_in(alg, &base, stages, cfg.window)
        })
    };
    let report = run(i_max)?;
    if report.surjectivity_index.is_none() {
        let retry = run(2 * i_max)?;
        if retry.surjectivity_index.is_some() {
            return Ok(retry);
        }
        return Ok(report);
    }
    Ok(report)
}

/// A determinant transition map R/(outer) -> R/(inner) for parameter ideals
/// with (inner) ⊆ (outer).
#[derive(Clone, Debug)]
pub struct DetTransition {
    /// a with inner_t = Σ_j a[t][j] · outer_j.
    pub coefficients: Vec<Vec<RingElement>>,
    pub det: RingElement,
    /// The induced map in quotient coordinates (source = outer quotient).
    pub map: Matrix,
}

/// Solve the membership certificates and build the multiplication-by-det
/// map. `salt` picks a different solution of the (usually underdetermined)
/// membership system. Certificates that differ by syzygies involving
/// zerodivisors can shift the determinant by an element of the inner
/// system's limit closure, so the quotient-level matrices of two solves may
/// differ; composing with [`limit_pushforward`] far enough always
/// reconciles them, and when the certificate is unique (for instance over
/// regular sequences) the matrices agree on the nose.
pub fn det_transition_in(
    alg: &TruncatedAlgebra,
    outer: &ParameterSystem,
    inner: &ParameterSystem,
    salt: Option<u64>,
) -> Result<DetTransition> {
    let d = outer.elements().len();
    if inner.elements().len() != d {
        return Err(Error::WrongGeneratorCount { expected: d, found: inner.elements().len() });
    }
    let p = alg.field().modulus();
    let mut coefficients = Vec::with_capacity(d);
    for (t, y) in inner.elements().iter().enumerate() {
        let e = y
            .homogeneous_degree()
            .ok_or_else(|| Error::InhomogeneousGenerator(alg.display(y)))?;
        // unknowns: one block per outer generator, spanning the multiplier slice
        let mut block_cols: Vec<(usize, Monomial)> = Vec::new();
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for (j, o) in outer.elements().iter().enumerate() {
            let f = o
                .homogeneous_degree()
                .ok_or_else(|| Error::InhomogeneousGenerator(alg.display(o)))?;
            if f > e {
                continue;
            }
            for u in alg.basis_at(e - f) {
                let (prod, overflow) = alg.multiply(&alg.monomial_element(u.clone())?, o);
                if overflow {
                    return Err(Error::WindowExceeded { needed: e, horizon: alg.truncation() - 1 });
                }
                rows.push(alg.coords(&prod, e)?);
                block_cols.push((j, u.clone()));
            }
        }
        let system = Matrix::from_rows(alg.field(), alg.hilbert(e), rows);
        let target = alg.coords(y, e)?;
        let mut solution = system.solve_left(&target).ok_or(Error::ContainmentFailure)?;
        if let Some(s) = salt {
            let kernel = system.left_kernel();
            if !kernel.is_empty() {
                let mut rng = derive_rng(s, &[0xde7_0000, t as u64]);
                for krow in &kernel {
                    let c = rand::Rng::gen_range(&mut rng, 0..p);
                    for (sol, &kv) in solution.iter_mut().zip(krow) {
                        *sol = alg.field().add(*sol, alg.field().mul(c, kv));
                    }
                }
            }
        }
        let mut coeffs: Vec<RingElement> = vec![alg.zero_element(); d];
        for ((j, u), &c) in block_cols.iter().zip(&solution) {
            if c != 0 {
                let term = alg.element(&[(u.clone(), c as i64)])?;
                coeffs[*j] = alg.add(&coeffs[*j], &term);
            }
        }
        coefficients.push(coeffs);
    }
    let det = determinant(alg, &coefficients)?;
    let src = ArtinianQuotient::new(alg, outer)?;
    let dst = ArtinianQuotient::new(alg, inner)?;
    let map = if det.is_zero() {
        Matrix::zeros(alg.field(), src.total_dim(), dst.total_dim())
    } else {
        src.mult_map(alg, &dst, &det)?
    };
    Ok(DetTransition { coefficients, det, map })
}

/// Multiplication by (x_1···x_d)^steps from R/(x_1,...,x_d) into
/// R/(x_1^{steps+1},...,x_d^{steps+1}): the composition of the first
/// `steps` transition maps of the parameter-power system. Two determinant
/// transition maps with different membership certificates agree after
/// composing with this map for `steps` large enough (their difference is
/// multiplication by an element of the target's limit closure); in
/// dimension one, `steps >= ceil(g / deg x)` is certified to suffice.
pub fn limit_pushforward(
    alg: &TruncatedAlgebra,
    base: &ParameterSystem,
    steps: usize,
) -> Result<Matrix> {
    let powers = stage_powers(alg, base.elements(), steps + 1)?;
    let sop = certify_stage(alg, &powers)?;
    let src = ArtinianQuotient::new(alg, base)?;
    let dst = ArtinianQuotient::new(alg, &sop)?;
    let pi = product_of(alg, base.elements())?;
    let (pin, overflow) = alg.power(&pi, steps);
    if overflow {
        return Err(Error::WindowExceeded {
            needed: steps * pi.homogeneous_degree().unwrap_or(1),
            horizon: alg.truncation() - 1,
        });
    }
    src.mult_map(alg, &dst, &pin)
}

fn determinant(alg: &TruncatedAlgebra, m: &[Vec<RingElement>]) -> Result<RingElement> {
    let n = m.len();
    if n == 0 {
        return alg.monomial_element(Monomial::one(alg.nvars()));
    }
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc = alg.zero_element();
    let minor_rows: Vec<&Vec<RingElement>> = m.iter().skip(1).collect();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<RingElement>> = minor_rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let sub = determinant(alg, &minor)?;
        let (mut term, overflow) = alg.multiply(entry, &sub);
        if overflow {
            return Err(Error::WindowExceeded {
                needed: alg.truncation(),
                horizon: alg.truncation() - 1,
            });
        }
        if j % 2 == 1 {
            term = alg.scale(&term, alg.field().neg(1));
        }
        acc = alg.add(&acc, &term);
    }
    Ok(acc)
}

/// The limit closure of a system of parameters: the union of the colon
/// chain ((x_1^{n+1},...,x_d^{n+1}) : (x_1···x_d)^n), computed slice-wise.
#[derive(Clone, Debug)]
pub struct LimitClosure {
    /// Slices of the last computed chain term, degrees 0..=horizon.
    pub slices: Vec<Subspace>,
    /// Artinian degree of the base parameter ideal; closure slices are full
    /// from here on.
    pub horizon: usize,
    pub n_last: usize,
    /// Least n >= 1 with chain term n equal to term n-1.
    pub stabilized_at: Option<usize>,
    /// Dimension-one certificate: the chain is provably constant from
    /// ceil(g / deg x) on, and the computation reached that point.
    pub certified: bool,
    /// Slice dimensions of every computed chain term.
    pub chain_dims: Vec<Vec<usize>>,
    pub truncation: usize,
}

pub fn limit_closure_in(
    alg: &TruncatedAlgebra,
    base: &[RingElement],
    n_max: usize,
    _window: usize,
) -> Result<LimitClosure> {
    let base_sop = certify_sop_in(alg, base)?.certified()?;
    let horizon = base_sop.artinian_degree();
    let pi = product_of(alg, base_sop.elements())?;
    let pi_degree = pi.homogeneous_degree().unwrap_or(0);
    let d = alg.model().dim();
    let cert_stage = if d == 1 {
        let g = crate::dim1::torsion_gap(alg, &gamma_torsion(alg)?)?;
        let e = base[0].homogeneous_degree().unwrap_or(1);
        Some(div_ceil(g, e))
    } else {
        None
    };
    let n_last = match cert_stage {
        Some(s) => n_max.max(s),
        None => n_max,
    };
    let mut chain: Vec<Vec<Subspace>> = Vec::with_capacity(n_last + 1);
    let mut chain_dims = Vec::with_capacity(n_last + 1);
    let mut stabilized_at = None;
    for n in 0..=n_last {
        let powers = stage_powers(alg, base_sop.elements(), n + 1)?;
        let upto = horizon + n * pi_degree;
        if upto >= alg.truncation() {
            return Err(Error::WindowExceeded { needed: upto, horizon: alg.truncation() - 1 });
        }
        let q_slices = ideal_subspace(alg, &powers, upto)?;
        let (pin, overflow) = alg.power(&pi, n);
        if overflow {
            return Err(Error::WindowExceeded {
                needed: n * pi_degree,
                horizon: alg.truncation() - 1,
            });
        }
        let cn = colon_slices(alg, &q_slices, &pin, horizon)?;
        let slices: Vec<Subspace> =
            (0..=horizon).map(|dd| cn.slice(dd).cloned()).collect::<Result<_>>()?;
        chain_dims.push(slices.iter().map(|s| s.dim()).collect::<Vec<_>>());
        if let Some(prev) = chain.last() {
            if stabilized_at.is_none() && prev == &slices {
                stabilized_at = Some(n);
            }
            // the colon chain only grows
            for (p_s, c_s) in prev.iter().zip(&slices) {
                if !c_s.contains(p_s)? {
                    return Err(Error::Internal("limit-closure chain decreased".into()));
                }
            }
        }
        chain.push(slices);
    }
    let certified = matches!(cert_stage, Some(s) if n_last >= s);
    Ok(LimitClosure {
        slices: chain.pop().expect("at least n = 0"),
        horizon,
        n_last,
        stabilized_at,
        certified,
        chain_dims,
        truncation: alg.truncation(),
    })
}

/// dim Soc of the module (limit closure)/(sop): degreewise, the meet of the
/// closure slice with the joint preimage of the ideal's next slice under
/// every variable, modulo the ideal slice. By the kernel identity this is
/// the socle of the kernel of the canonical map R/(sop) -> H^d_m(R), so it
/// must match the socle kernel of the stage-1 pushforward.
pub fn closure_socle_dim(
    alg: &TruncatedAlgebra,
    sop: &ParameterSystem,
    closure: &LimitClosure,
) -> Result<usize> {
    let field = alg.field();
    let mut total = 0usize;
    for d in 0..closure.horizon {
        let q_d = sop.slices().slice(d)?;
        let q_next = sop.slices().slice(d + 1)?;
        let ambient = alg.hilbert(d);
        let mut joint = Subspace::full(field, ambient);
        if !q_next.is_full() {
            for t in 0..alg.nvars() {
                let map = alg.var_mult_matrix(t, d)?;
                joint = joint.meet(&Subspace::preimage_under(&map, q_next))?;
            }
        }
        let socle_part = closure.slices[d].meet(&joint)?;
        if !socle_part.contains(q_d)? {
            return Err(Error::Internal("ideal slice escapes its closure socle".into()));
        }
        total += socle_part.dim() - q_d.dim();
    }
    Ok(total)
}

pub fn limit_closure(
    model: &RingModel,
    base_terms: &[Vec<(Monomial, i64)>],
    n_max: usize,
    cfg: &EngineConfig,
) -> Result<LimitClosure> {
    let (alg0, verdict) = crate::params::certify_sop(model, base_terms, cfg)?;
    verdict.certified()?;
    let min_n = alg0.truncation();
    with_escalation(model, cfg, min_n, |alg| {
        let base: Vec<RingElement> =
            base_terms.iter().map(|t| alg.element(t)).collect::<Result<_>>()?;
        limit_closure_in(alg, &base, n_max, cfg.window)
    })
}

/// Consequence check for an asserted p_s-standard system: the pushed socle
/// image must match the stable image from stage s on. The hypothesis itself
/// is not certified here; the caller asserts it.
#[derive(Clone, Debug)]
pub struct PsConsequenceReport {
    pub s: usize,
    pub surjective_from_s: bool,
    pub observed_index: Option<usize>,
    pub system: DirectSystemReport,
}

pub fn verify_ps_consequence(
    model: &RingModel,
    base_terms: &[Vec<(Monomial, i64)>],
    s: usize,
    i_max: usize,
    cfg: &EngineConfig,
) -> Result<PsConsequenceReport> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!("s must be at least 2, got {s}")));
    }
    let stages = i_max.max(s + cfg.window);
    let system = power_quotient_system(model, base_terms, stages, cfg)?;
    let observed_index = system.surjectivity_index;
    let surjective_from_s = matches!(observed_index, Some(ix) if ix <= s);
    Ok(PsConsequenceReport { s, surjective_from_s, observed_index, system })
}
