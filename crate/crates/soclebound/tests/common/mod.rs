//! Shared fixtures and checkers for the integration suites: the dimension-one
//! test-ring zoo and the lemma-level verifications reused by the acceptance
//! gate.

use soclebound::config::EngineConfig;
use soclebound::dim1::dim1_invariants;
use soclebound::limits::{det_transition_in, limit_closure_in, limit_pushforward};
use soclebound::linalg::Subspace;
use soclebound::params::certify_sop_in;
use soclebound::ring::{RingModel, RingSpec};
use soclebound::{ParameterSystem, Result, TruncatedAlgebra};

pub fn dim1_zoo() -> Vec<RingModel> {
    let specs: Vec<(&[&str], Vec<&[u32]>)> = vec![
        (&["x", "y"], vec![&[2, 0], &[1, 1]]),
        (&["x", "y"], vec![&[3, 0], &[1, 2]]),
        (&["x", "y"], vec![&[4, 0], &[1, 3]]),
        (&["x", "y"], vec![&[5, 0], &[1, 4]]),
        (&["x", "y"], vec![&[1, 1]]),
        (&["x", "y"], vec![&[2, 0]]),
        (&["x", "y"], vec![&[3, 1], &[1, 2]]),
        (&["x", "y"], vec![&[2, 2], &[4, 0]]),
    ];
    specs
        .into_iter()
        .map(|(vars, gens)| {
            RingModel::new(RingSpec::from_exponents(vars, 32003, &gens).unwrap()).unwrap()
        })
        .collect()
}

/// Multiplication by every in-window power of the reduction witness is
/// injective on every slice of degree >= g.
pub fn witness_power_injectivity(alg: &TruncatedAlgebra, seed: u64) -> Result<()> {
    let inv = dim1_invariants(alg, 32, seed)?;
    let e = inv.c_witness.homogeneous_degree().unwrap();
    let horizon = alg.truncation() - 1;
    for degree in inv.g..horizon {
        for i in 1.. {
            if degree + i * e > horizon {
                break;
            }
            let (xi, overflow) = alg.power(&inv.c_witness, i);
            assert!(!overflow);
            let map = alg.mult_matrix(&xi, degree)?;
            let kernel = Subspace::kernel(&map.transpose());
            assert!(
                kernel.is_zero(),
                "x^{i} kills a nonzero element of the degree-{degree} slice in {}",
                alg.model().signature()
            );
        }
    }
    Ok(())
}

/// With n = max{c, g}, the witness-power images of the degree-n standard
/// basis minimally generate the corresponding power of m at every in-window
/// stage.
pub fn minimal_generation(alg: &TruncatedAlgebra, seed: u64) -> Result<()> {
    let inv = dim1_invariants(alg, 32, seed)?;
    let n = inv.c.max(inv.g);
    let e = inv.c_witness.homogeneous_degree().unwrap();
    if n >= alg.truncation() - 1 {
        return Ok(());
    }
    let generators = alg.hilbert(n);
    let horizon = alg.truncation() - 1;
    for i in 1.. {
        let target = n + i * e;
        if target > horizon {
            break;
        }
        let (xi, overflow) = alg.power(&inv.c_witness, i);
        assert!(!overflow);
        let map = alg.mult_matrix(&xi, n)?;
        assert_eq!(
            map.rank(),
            generators,
            "images of the m^{n} generators are dependent at stage {i} in {}",
            alg.model().signature()
        );
        assert_eq!(
            alg.hilbert(target),
            generators,
            "m^{{{n}+{i}}} needs a different generator count in {}",
            alg.model().signature()
        );
    }
    Ok(())
}

/// Well-definedness of the determinant transition for one nested pair:
/// salted certificate solves must induce the same map into the limit, the
/// determinant difference must lie in the inner limit closure, and equal
/// certificates must give equal matrices. Returns how many salts produced a
/// genuinely different certificate.
pub fn well_defined_pair(
    alg: &TruncatedAlgebra,
    outer: &ParameterSystem,
    inner: &ParameterSystem,
    salts: &[u64],
    push_steps: usize,
) -> Result<usize> {
    let t0 = det_transition_in(alg, outer, inner, None)?;
    let push = limit_pushforward(alg, inner, push_steps)?;
    let t0_limit = t0.map.mul(&push);
    let closure = limit_closure_in(alg, inner.elements(), push_steps, 3)?;
    let mut salted_differences = 0usize;
    for &salt in salts {
        let t = det_transition_in(alg, outer, inner, Some(salt))?;
        assert_eq!(
            t.map.mul(&push),
            t0_limit,
            "maps differ into the limit in {}",
            alg.model().signature()
        );
        if t.coefficients == t0.coefficients {
            assert_eq!(t.map, t0.map);
        } else {
            salted_differences += 1;
            let diff = alg.add(&t.det, &alg.scale(&t0.det, alg.field().neg(1)));
            if !diff.is_zero() {
                let d = diff.homogeneous_degree().expect("dets are homogeneous");
                if d <= closure.horizon {
                    let v = alg.coords(&diff, d)?;
                    assert!(
                        closure.slices[d].contains_vector(&v),
                        "det difference escapes the limit closure in {}",
                        alg.model().signature()
                    );
                }
            }
        }
    }
    Ok(salted_differences)
}

/// Run the well-definedness check across nested witness-power systems of
/// the zoo until `minimum` pairs have been exercised; asserts that salts
/// produced at least one genuinely different certificate overall.
pub fn well_definedness_sweep(cfg: &EngineConfig, minimum: usize) -> (usize, usize) {
    let mut checked = 0usize;
    let mut salted_differences = 0usize;
    'outer: for (ring_idx, model) in dim1_zoo().into_iter().enumerate() {
        if model.dim() != 1 {
            continue;
        }
        for (i, j) in [(1usize, 2usize), (1, 3), (2, 4)] {
            let diffs = soclebound::config::with_escalation(&model, cfg, 24, |alg| {
                let inv = dim1_invariants(alg, 32, 7)?;
                let (wi, o1) = alg.power(&inv.c_witness, i);
                let (wj, o2) = alg.power(&inv.c_witness, j);
                assert!(!o1 && !o2);
                let outer = certify_sop_in(alg, std::slice::from_ref(&wi))?.certified()?;
                let inner = certify_sop_in(alg, std::slice::from_ref(&wj))?.certified()?;
                let e = wj.homogeneous_degree().unwrap();
                let push_steps = inv.g.div_ceil(e).max(1);
                let salts: Vec<u64> =
                    (0..3).map(|s| 1000 * ring_idx as u64 + 10 * i as u64 + s).collect();
                well_defined_pair(alg, &outer, &inner, &salts, push_steps)
            })
            .unwrap();
            salted_differences += diffs;
            checked += 1;
            if checked > minimum {
                break 'outer;
            }
        }
    }
    assert!(salted_differences > 0, "salts never produced a different certificate");
    (checked, salted_differences)
}
