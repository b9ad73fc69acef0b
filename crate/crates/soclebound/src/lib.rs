//! Exact commutative-algebra computations for local rings presented as
//! monomial-ideal quotients k[x_1..x_n]/I over a prime field.
//!
//! What the crate computes:
//!
//! - Krull dimension, Hilbert functions, and a finite graded model that is
//!   degreewise exact below a truncation horizon ([`ring`], [`algebra`]);
//! - graded ideal slices, colon ideals, socles of Artinian quotients, and
//!   the m-torsion submodule Γ_m(R) ([`ideals`], [`quotient`], [`torsion`]);
//! - for dimension-one rings, the reduction number c of m, the torsion gap
//!   g, and the bound n = max{c, g} + 1 past which irreducibility of a
//!   parameter ideal decides the Gorenstein property ([`dim1`]);
//! - the parameter-power direct system R/(x_1^i,...,x_d^i) with its socle
//!   images in the top local cohomology, determinant transition maps, and
//!   limit closures ([`limits`]);
//! - irreducibility testing and randomized bracketing of the threshold
//!   power of m ([`probe`]).
//!
//! All arithmetic is exact over F_p; every randomized search is seeded and
//! reproducible. The `soclebound` binary exposes the same operations behind
//! a subcommand CLI with canonical JSON reports; the `examples/` directory
//! walks through each capability against the worked rings.

pub mod algebra;
pub mod cli;
pub mod config;
pub mod dim1;
pub mod error;
pub mod ideals;
pub mod limits;
pub mod linalg;
pub mod monomial;
pub mod params;
pub mod probe;
pub mod quotient;
pub mod report;
pub mod ring;
pub mod ringfile;
pub mod rng;
pub mod torsion;

pub use algebra::{auto_truncation, RingElement, TruncatedAlgebra};
pub use config::{EngineConfig, DEFAULT_SEED};
pub use dim1::{dim1_invariants, Certainty, Dim1Invariants};
pub use error::{Error, Result};
pub use linalg::{Matrix, PrimeField, Subspace};
pub use monomial::Monomial;
pub use params::{certify_sop, certify_sop_in, ParameterSystem, SopVerdict};
pub use quotient::ArtinianQuotient;
pub use ring::{RingModel, RingSpec};
pub use torsion::gamma_torsion;
