//! Irreducibility of parameter ideals, dimension-one Gorenstein detection,
//! and randomized bracketing of the threshold power: the least power of m
//! in which an irreducible parameter ideal certifies the Gorenstein
//! property.
//!
//! An Artinian quotient R/q is irreducible as an ideal exactly when its
//! socle is one-dimensional. The prober draws parameter systems with
//! generators of a fixed degree L (deterministic witnesses first, then
//! seeded random combinations), so every ideal it tests sits inside m^L.
//! Finding an irreducible one in a non-Gorenstein ring pushes the threshold
//! above L; sampling can never prove the converse, and reports say so.

use rand::Rng;

use crate::algebra::{RingElement, TruncatedAlgebra};
use crate::config::{with_escalation, EngineConfig};
use crate::dim1::{dim1_invariants, Certainty, Dim1Invariants};
use crate::error::{Error, Result};
use crate::limits::power_quotient_system;
use crate::monomial::Monomial;
use crate::params::{certify_sop_in, ParameterSystem, SopVerdict};
use crate::quotient::ArtinianQuotient;
use crate::ring::{RingModel, RingSpec};
use crate::rng::{derive_rng, tag};
use crate::torsion::gamma_torsion;

/// Socle dimension of R/q; the ideal is irreducible iff this is 1.
pub fn socle_of_parameter_ideal(
    alg: &TruncatedAlgebra,
    sop: &ParameterSystem,
) -> Result<crate::quotient::SocleData> {
    ArtinianQuotient::new(alg, sop)?.socle(alg)
}

pub fn is_irreducible(alg: &TruncatedAlgebra, sop: &ParameterSystem) -> Result<bool> {
    Ok(socle_of_parameter_ideal(alg, sop)?.dim == 1)
}

/// Dimension-one Gorenstein verdict: depth via Γ, type via the socle of a
/// certified parameter witness.
#[derive(Clone, Debug)]
pub struct GorensteinVerdict {
    pub gorenstein: bool,
    pub depth_ok: bool,
    pub cm_type: Option<usize>,
    pub witness: Option<RingElement>,
}

pub fn gorenstein_dim1_in(
    alg: &TruncatedAlgebra,
    attempts: u32,
    seed: u64,
) -> Result<GorensteinVerdict> {
    let dim = alg.model().dim();
    if dim != 1 {
        return Err(Error::WrongDimension { expected: 1, found: dim });
    }
    let gamma = gamma_torsion(alg)?;
    if !gamma.is_zero() {
        return Ok(GorensteinVerdict {
            gorenstein: false,
            depth_ok: false,
            cm_type: None,
            witness: None,
        });
    }
    let inv = dim1_invariants(alg, attempts, seed)?;
    let sop = certify_sop_in(alg, std::slice::from_ref(&inv.c_witness))?.certified()?;
    let cm_type = socle_of_parameter_ideal(alg, &sop)?.dim;
    Ok(GorensteinVerdict {
        gorenstein: cm_type == 1,
        depth_ok: true,
        cm_type: Some(cm_type),
        witness: Some(inv.c_witness),
    })
}

pub fn gorenstein_dim1(model: &RingModel, cfg: &EngineConfig, seed: u64) -> Result<GorensteinVerdict> {
    with_escalation(model, cfg, 0, |alg| gorenstein_dim1_in(alg, cfg.attempts, seed))
}

/// One probing run at level L.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub ring: String,
    pub level: usize,
    pub samples: usize,
    pub deterministic_trials: usize,
    pub certified: usize,
    pub sop_failures: usize,
    /// How many certified systems tested irreducible (with multiplicity).
    pub irreducible_count: usize,
    /// Distinct irreducible witnesses, in discovery order.
    pub irreducible_found: Vec<String>,
    pub all_reducible: bool,
    /// Whether the first deterministic candidate certified and was
    /// irreducible; `None` when it failed to certify.
    pub first_deterministic_irreducible: Option<bool>,
    pub ell_lower_bound: Option<usize>,
    pub ell_upper_bound: Option<usize>,
    pub gorenstein: Option<bool>,
    pub bound_n: Option<usize>,
    pub seed: u64,
    pub truncation: usize,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for t in start..n {
            cur.push(t);
            rec(t + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn probe_in(
    alg: &TruncatedAlgebra,
    level: usize,
    samples: usize,
    seed: u64,
    dim1: Option<&Dim1Invariants>,
    gorenstein: Option<bool>,
) -> Result<ProbeReport> {
    let d = alg.model().dim();
    let n = alg.nvars();
    let p = alg.field().modulus();
    if level >= alg.truncation() {
        return Err(Error::WindowExceeded { needed: level, horizon: alg.truncation() - 1 });
    }

    // deterministic candidates: powers of the reduction witness, then of
    // variable subsets, so the named witnesses of the worked examples always
    // appear in the report
    let mut candidates: Vec<Vec<RingElement>> = Vec::new();
    if d == 1 {
        if let Some(inv) = dim1 {
            let (w, overflow) = alg.power(&inv.c_witness, level);
            if overflow {
                return Err(Error::WindowExceeded {
                    needed: level,
                    horizon: alg.truncation() - 1,
                });
            }
            if !w.is_zero() {
                candidates.push(vec![w]);
            }
        }
    }
    for combo in combinations(n, d) {
        let system: Vec<RingElement> = combo
            .iter()
            .map(|&t| alg.monomial_element(Monomial::var_pow(t, level as u32, n)))
            .collect::<Result<_>>()?;
        if system.iter().all(|e| !e.is_zero()) {
            candidates.push(system);
        }
    }
    let deterministic_trials = candidates.len();

    let degree_basis = alg.basis_at(level).to_vec();
    for k in 0..samples {
        let mut rng = derive_rng(seed, &[tag("probe"), level as u64, k as u64]);
        let mut system = Vec::with_capacity(d);
        for _ in 0..d {
            let terms: Vec<(Monomial, i64)> = degree_basis
                .iter()
                .map(|m| (m.clone(), rng.gen_range(0..p) as i64))
                .collect();
            system.push(alg.element(&terms)?);
        }
        candidates.push(system);
    }

    let mut sop_failures = 0usize;
    let mut certified = 0usize;
    let mut irreducible_count = 0usize;
    let mut irreducible_found: Vec<String> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut first_deterministic_irreducible = None;
    for (idx, system) in candidates.iter().enumerate() {
        if system.iter().any(|e| e.is_zero()) {
            sop_failures += 1;
            continue;
        }
        match certify_sop_in(alg, system)? {
            SopVerdict::NotASop { .. } => {
                sop_failures += 1;
            }
            SopVerdict::Certified(sop) => {
                certified += 1;
                let irr = is_irreducible(alg, &sop)?;
                if idx == 0 && deterministic_trials > 0 {
                    first_deterministic_irreducible = Some(irr);
                }
                if irr {
                    irreducible_count += 1;
                    let shown = sop.display(alg).join(", ");
                    if seen.insert(shown.clone()) {
                        irreducible_found.push(shown);
                    }
                }
            }
        }
    }
    let all_reducible = irreducible_found.is_empty();
    let bound_n = dim1.map(|i| i.bound_n);
    let ell_lower_bound = if !all_reducible && gorenstein == Some(false) {
        Some(level)
    } else {
        None
    };
    Ok(ProbeReport {
        ring: alg.model().signature(),
        level,
        samples,
        deterministic_trials,
        certified,
        sop_failures,
        irreducible_count,
        irreducible_found,
        all_reducible,
        first_deterministic_irreducible,
        ell_lower_bound,
        ell_upper_bound: bound_n,
        gorenstein,
        bound_n,
        seed,
        truncation: alg.truncation(),
    })
}

/// Probe the ring at level L: draw parameter systems with degree-L
/// generators, certify, test irreducibility, and fill in the threshold
/// bracket where the theory permits.
pub fn probe_ell(
    model: &RingModel,
    level: usize,
    samples: usize,
    seed: u64,
    cfg: &EngineConfig,
) -> Result<ProbeReport> {
    if level == 0 {
        return Err(Error::InvalidArgument("probe level must be at least 1".into()));
    }
    if model.dim() == 0 {
        return Err(Error::WrongDimension { expected: 1, found: 0 });
    }
    with_escalation(model, cfg, level + 3, |alg| {
        let (dim1, gor) = if model.dim() == 1 {
            let inv = dim1_invariants(alg, cfg.attempts, seed)?;
            let gor = gorenstein_dim1_in(alg, cfg.attempts, seed)?;
            (Some(inv), Some(gor.gorenstein))
        } else {
            (None, None)
        };
        probe_in(alg, level, samples, seed, dim1.as_ref(), gor)
    })
}

/// One row of the worked-family run: Q_a = k[x,y]/(x^{a+1}, x y^a).
#[derive(Clone, Debug)]
pub struct FamilyRow {
    pub a: u32,
    pub c: usize,
    pub c_certainty: Certainty,
    pub c_witness: String,
    pub g: usize,
    pub bound_n: usize,
    pub gamma_dim: usize,
    pub ya_irreducible: bool,
    pub ya_socle_dim: usize,
    pub probe_level: usize,
    pub probe_all_reducible: bool,
    pub surjectivity_index: Option<usize>,
    pub stable_socle_dim: usize,
    /// Closed-form predictions: c = a, g = 2a, n = 2a+1, dim Γ = a².
    pub expected_c: usize,
    pub expected_g: usize,
    pub expected_n: usize,
    pub expected_gamma: usize,
    pub matches_expected: bool,
}

/// Run the family Q_a for a in [a_min, a_max]: invariants, the irreducible
/// witness (y^a), the reducibility probe at 2a, and the (y)-power system.
pub fn family_xy(
    a_min: u32,
    a_max: u32,
    p: u64,
    samples: usize,
    seed: u64,
    cfg: &EngineConfig,
) -> Result<Vec<FamilyRow>> {
    if a_min < 1 || a_min > a_max || a_max > 6 {
        return Err(Error::InvalidArgument(format!(
            "family range must satisfy 1 <= a_min <= a_max <= 6, got [{a_min}, {a_max}]"
        )));
    }
    let mut rows = Vec::new();
    for a in a_min..=a_max {
        let spec = RingSpec::new(
            vec!["x".into(), "y".into()],
            p,
            vec![Monomial::new(vec![a + 1, 0]), Monomial::new(vec![1, a])],
        )?;
        let model = RingModel::new(spec)?;
        let row = with_escalation(&model, cfg, (4 * a + 6) as usize, |alg| {
            let inv = dim1_invariants(alg, cfg.attempts, seed)?;
            let gamma = gamma_torsion(alg)?;
            let ya = alg.monomial_element(Monomial::new(vec![0, a]))?;
            let sop = certify_sop_in(alg, std::slice::from_ref(&ya))?.certified()?;
            let soc = socle_of_parameter_ideal(alg, &sop)?;
            let probe = probe_in(
                alg,
                (2 * a) as usize,
                samples,
                seed,
                Some(&inv),
                Some(false),
            )?;
            let witness = alg.display(&inv.c_witness);
            Ok((inv, gamma.dim(), soc.dim, probe, witness))
        })?;
        let (inv, gamma_dim, ya_socle_dim, probe, c_witness) = row;
        let y_terms = vec![(Monomial::new(vec![0, 1]), 1i64)];
        let system = power_quotient_system(
            &model,
            &[y_terms],
            2 * inv.bound_n + cfg.window,
            cfg,
        )?;
        let expected_c = a as usize;
        let expected_g = (2 * a) as usize;
        let expected_n = (2 * a + 1) as usize;
        let expected_gamma = (a * a) as usize;
        let matches_expected = inv.c == expected_c
            && inv.g == expected_g
            && inv.bound_n == expected_n
            && gamma_dim == expected_gamma
            && ya_socle_dim == 1
            && probe.all_reducible;
        rows.push(FamilyRow {
            a,
            c: inv.c,
            c_certainty: inv.c_certainty,
            c_witness,
            g: inv.g,
            bound_n: inv.bound_n,
            gamma_dim,
            ya_irreducible: ya_socle_dim == 1,
            ya_socle_dim,
            probe_level: (2 * a) as usize,
            probe_all_reducible: probe.all_reducible,
            surjectivity_index: system.surjectivity_index,
            stable_socle_dim: system.stable_socle_dim,
            expected_c,
            expected_g,
            expected_n,
            expected_gamma,
            matches_expected,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(vars: &[&str], gens: &[&[u32]]) -> RingModel {
        RingModel::new(RingSpec::from_exponents(vars, 32003, gens).unwrap()).unwrap()
    }

    #[test]
    fn ya_is_irreducible_and_yj_is_not() {
        let cfg = EngineConfig::default();
        for a in 1..=3u32 {
            let m = model(&["x", "y"], &[&[a + 1, 0], &[1, a]]);
            let ok = with_escalation(&m, &cfg, (4 * a + 6) as usize, |alg| {
                let ya = alg.monomial_element(Monomial::new(vec![0, a]))?;
                let sop = certify_sop_in(alg, std::slice::from_ref(&ya))?.certified()?;
                is_irreducible(alg, &sop)
            })
            .unwrap();
            assert!(ok, "a = {a}");
        }
        // (y^2) in the a = 1 ring is reducible (socle {x, y})
        let m = model(&["x", "y"], &[&[2, 0], &[1, 1]]);
        let ok = with_escalation(&m, &cfg, 10, |alg| {
            let y2 = alg.monomial_element(Monomial::new(vec![0, 2]))?;
            let sop = certify_sop_in(alg, std::slice::from_ref(&y2))?.certified()?;
            is_irreducible(alg, &sop)
        })
        .unwrap();
        assert!(!ok);
    }

    #[test]
    fn gorenstein_verdicts() {
        let cfg = EngineConfig::default();
        // hypersurface k[x,y]/(xy): Gorenstein
        let v = gorenstein_dim1(&model(&["x", "y"], &[&[1, 1]]), &cfg, 7).unwrap();
        assert!(v.gorenstein && v.depth_ok);
        assert_eq!(v.cm_type, Some(1));
        // the family: depth 0, not Gorenstein
        let v = gorenstein_dim1(&model(&["x", "y"], &[&[3, 0], &[1, 2]]), &cfg, 7).unwrap();
        assert!(!v.gorenstein && !v.depth_ok);
        // dimension guard
        let err = gorenstein_dim1(&model(&["x", "y"], &[&[2, 0], &[0, 2]]), &cfg, 7).unwrap_err();
        assert!(matches!(err, Error::WrongDimension { expected: 1, found: 0 }));
    }

    #[test]
    fn probe_finds_the_named_witness_at_level_a() {
        let cfg = EngineConfig::default();
        for a in 1..=2u32 {
            let m = model(&["x", "y"], &[&[a + 1, 0], &[1, a]]);
            let rep = probe_ell(&m, a as usize, 20, 99, &cfg).unwrap();
            assert!(!rep.all_reducible, "a = {a}");
            assert!(
                rep.irreducible_found.iter().any(|w| w == &format!("y^{a}") || w == "y"),
                "a = {a}: {:?}",
                rep.irreducible_found
            );
            assert_eq!(rep.ell_lower_bound, Some(a as usize));
            assert_eq!(rep.ell_upper_bound, Some((2 * a + 1) as usize));
        }
    }

    #[test]
    fn probe_at_twice_a_finds_nothing() {
        let cfg = EngineConfig::default();
        for a in 1..=2u32 {
            let m = model(&["x", "y"], &[&[a + 1, 0], &[1, a]]);
            let rep = probe_ell(&m, (2 * a) as usize, 50, 99, &cfg).unwrap();
            assert!(rep.all_reducible, "a = {a}");
            assert!(rep.irreducible_found.is_empty());
            assert_eq!(rep.ell_lower_bound, None);
        }
    }

    #[test]
    fn probe_on_gorenstein_ring_succeeds_immediately() {
        let cfg = EngineConfig::default();
        let m = model(&["x", "y"], &[&[1, 1]]);
        let rep = probe_ell(&m, 3, 50, 99, &cfg).unwrap();
        assert!(!rep.all_reducible);
        assert_eq!(rep.first_deterministic_irreducible, Some(true));
        // Gorenstein: no lower bound is ever claimed
        assert_eq!(rep.ell_lower_bound, None);
        assert_eq!(rep.gorenstein, Some(true));
    }

    #[test]
    fn probe_reports_are_deterministic() {
        let cfg = EngineConfig::default();
        let m = model(&["x", "y"], &[&[3, 0], &[1, 2]]);
        let a = probe_ell(&m, 2, 25, 4242, &cfg).unwrap();
        let b = probe_ell(&m, 2, 25, 4242, &cfg).unwrap();
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }

    #[test]
    fn family_rows_match_the_closed_forms() {
        let cfg = EngineConfig::default();
        let rows = family_xy(1, 2, 32003, 10, 7, &cfg).unwrap();
        assert_eq!(rows.len(), 2);
        for row in &rows {
            assert!(row.matches_expected, "a = {}", row.a);
            assert_eq!(row.stable_socle_dim, 1);
        }
        assert_eq!(rows[0].surjectivity_index, Some(2));
        assert!(matches!(family_xy(0, 2, 32003, 5, 7, &cfg), Err(Error::InvalidArgument(_))));
        assert!(matches!(family_xy(1, 9, 32003, 5, 7, &cfg), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn probe_rejects_dimension_zero() {
        let cfg = EngineConfig::default();
        let m = model(&["x", "y"], &[&[2, 0], &[0, 2]]);
        assert!(matches!(
            probe_ell(&m, 1, 5, 1, &cfg),
            Err(Error::WrongDimension { .. })
        ));
    }
}
