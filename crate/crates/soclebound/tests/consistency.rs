//! Cross-module consistency over the test-ring zoo:
//!
//! - a ring certified Gorenstein has every sampled parameter ideal
//!   irreducible, at every probed level;
//! - at the bound n = max{c,g}+1, a non-Gorenstein ring yields no
//!   irreducible sample while a Gorenstein ring's first deterministic
//!   candidate is irreducible;
//! - in the worked family, irreducible witnesses only ever appear below
//!   the bound;
//! - the meet of the maximal-ideal powers with the torsion module matches
//!   direct enumeration of torsion monomials degree by degree;
//! - the kernel identity (pushed socle images vs the socle of
//!   closure/ideal) holds across the dimension-one zoo.

mod common;

use common::dim1_zoo;
use soclebound::config::{with_escalation, EngineConfig};
use soclebound::dim1::dim1_invariants;
use soclebound::ideals::maximal_power_slices;
use soclebound::limits::{closure_socle_dim, limit_closure_in, power_quotient_system_in};
use soclebound::params::certify_sop_in;
use soclebound::probe::{gorenstein_dim1, probe_ell};
use soclebound::ring::{RingModel, RingSpec};
use soclebound::{gamma_torsion, Result};

const SEED: u64 = 1208;

#[test]
fn gorenstein_rings_have_only_irreducible_parameter_ideals() {
    let cfg = EngineConfig::default();
    for model in dim1_zoo() {
        let verdict = gorenstein_dim1(&model, &cfg, SEED).unwrap();
        if !verdict.gorenstein {
            continue;
        }
        for level in 1..=3usize {
            let rep = probe_ell(&model, level, 40, SEED, &cfg).unwrap();
            assert!(rep.certified > 0, "{} at L={level}", model.signature());
            assert_eq!(
                rep.irreducible_count,
                rep.certified,
                "a certified but reducible sample in Gorenstein ring {} at L={level}",
                model.signature()
            );
        }
    }
}

#[test]
fn bound_consistency_at_n() {
    let cfg = EngineConfig::default();
    for model in dim1_zoo() {
        let verdict = gorenstein_dim1(&model, &cfg, SEED).unwrap();
        let inv = with_escalation(&model, &cfg, 0, |alg| dim1_invariants(alg, 32, SEED)).unwrap();
        let rep = probe_ell(&model, inv.bound_n, 60, SEED, &cfg).unwrap();
        if verdict.gorenstein {
            assert_eq!(
                rep.first_deterministic_irreducible,
                Some(true),
                "{}",
                model.signature()
            );
        } else {
            assert!(
                rep.all_reducible,
                "irreducible parameter ideal at the bound in non-Gorenstein {}",
                model.signature()
            );
        }
    }
}

#[test]
fn family_witnesses_appear_only_below_the_bound() {
    let cfg = EngineConfig::default();
    for a in 1..=3u32 {
        let model = RingModel::new(
            RingSpec::from_exponents(&["x", "y"], 32003, &[&[a + 1, 0], &[1, a]]).unwrap(),
        )
        .unwrap();
        let bound = (2 * a + 1) as usize;
        for level in 1..=bound {
            let rep = probe_ell(&model, level, 40, SEED, &cfg).unwrap();
            if !rep.all_reducible {
                assert!(
                    level < bound,
                    "irreducible witness at the bound for a = {a}: {:?}",
                    rep.irreducible_found
                );
            }
        }
    }
}

#[test]
fn power_meets_with_torsion_match_enumeration() {
    let cfg = EngineConfig::default();
    for model in dim1_zoo() {
        with_escalation(&model, &cfg, 0, |alg| {
            let gamma = gamma_torsion(alg)?;
            let top = gamma.max_degree().map(|m| m + 1).unwrap_or(2);
            for i in 0..=top {
                for d in 0..=gamma.max_degree().unwrap_or(0) {
                    let power = maximal_power_slices(alg, i, d)?;
                    let meet = power.slice(d)?.meet(&gamma.slice(alg, d)?)?;
                    let enumerated = gamma
                        .monomials()
                        .iter()
                        .filter(|m| m.degree() == d && m.degree() >= i)
                        .count();
                    assert_eq!(
                        meet.dim(),
                        enumerated,
                        "m^{i} ∩ Γ at degree {d} in {}",
                        model.signature()
                    );
                }
            }
            Ok(())
        })
        .unwrap();
    }
}

#[test]
fn kernel_identity_across_the_zoo() {
    let cfg = EngineConfig::default();
    for model in dim1_zoo() {
        let (sig, a_route, b_route) = with_escalation(&model, &cfg, 16, |alg| {
            let inv = dim1_invariants(alg, 32, SEED)?;
            let witness = std::slice::from_ref(&inv.c_witness);
            let rep = power_quotient_system_in(alg, witness, 4, cfg.window)?;
            let route_a = rep.socle_dims[0] - rep.limit_image_dims[0];
            let sop = certify_sop_in(alg, witness)?.certified()?;
            let e = inv.c_witness.homogeneous_degree().unwrap();
            let closure = limit_closure_in(alg, witness, inv.g.div_ceil(e), cfg.window)?;
            assert!(closure.certified);
            let route_b = closure_socle_dim(alg, &sop, &closure)?;
            Ok((alg.model().signature(), route_a, route_b))
        })
        .unwrap();
        assert_eq!(a_route, b_route, "kernel identity fails in {sig}");
    }
}

#[test]
fn socle_agrees_with_the_module_kernel_route() {
    // independent route: Soc(R/q) is the joint kernel of the module maps
    // x_t : R/q -> R/q, computed as a single stacked null space in quotient
    // coordinates rather than degreewise preimages
    let cfg = EngineConfig::default();
    for model in dim1_zoo() {
        with_escalation(&model, &cfg, 0, |alg| {
            let inv = dim1_invariants(alg, 32, SEED)?;
            for power in 1..=2usize {
                let (w, overflow) = alg.power(&inv.c_witness, power);
                assert!(!overflow);
                let sop = certify_sop_in(alg, std::slice::from_ref(&w))?.certified()?;
                let quo = soclebound::ArtinianQuotient::new(alg, &sop)?;
                let soc = quo.socle(alg)?;
                let mut stacked: Option<soclebound::Matrix> = None;
                for t in 0..alg.nvars() {
                    let var = alg.variable(t)?;
                    let m = quo.mult_map(alg, &quo, &var)?.transpose();
                    stacked = Some(match stacked {
                        None => m,
                        Some(s) => s.vstack(&m),
                    });
                }
                let kernel = soclebound::Subspace::kernel(&stacked.unwrap());
                assert_eq!(
                    kernel.dim(),
                    soc.dim,
                    "socle routes disagree for witness^{power} in {}",
                    model.signature()
                );
                assert_eq!(kernel, soc.space, "socle subspaces disagree");
            }
            Ok(())
        })
        .unwrap();
    }
}

fn zoo_socles_are_positive() -> Result<()> {
    // every certified Artinian quotient has a nonzero socle
    let cfg = EngineConfig::default();
    for model in dim1_zoo() {
        with_escalation(&model, &cfg, 0, |alg| {
            let inv = dim1_invariants(alg, 32, SEED)?;
            let sop = certify_sop_in(alg, std::slice::from_ref(&inv.c_witness))?.certified()?;
            let soc = soclebound::probe::socle_of_parameter_ideal(alg, &sop)?;
            assert!(soc.dim >= 1);
            Ok(())
        })?;
    }
    Ok(())
}

#[test]
fn nonzero_artinian_quotients_have_nonzero_socles() {
    zoo_socles_are_positive().unwrap();
}
