//! Ring presentations R = k[x_1..x_n]/I for a monomial ideal I over a prime
//! field, with validation and Krull dimension.
//!
//! The dimension of a monomial quotient is `n - c` where `c` is the least
//! size of a set of variables meeting the support of every generator: the
//! minimal primes of a monomial ideal are generated by variables, and such a
//! prime contains I exactly when it covers every generator's support.

use crate::error::{Error, Result};
use crate::linalg::PrimeField;
use crate::monomial::Monomial;

/// Presentation data: variable names, prime characteristic, and the monomial
/// generators of the defining ideal (minimalized under divisibility).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingSpec {
    vars: Vec<String>,
    char_p: u64,
    gens: Vec<Monomial>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    pub fn new(vars: Vec<String>, char_p: u64, gens: Vec<Monomial>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::EmptyVariables);
        }
        for v in &vars {
            if !valid_name(v) {
                return Err(Error::InvalidVariableName(v.clone()));
            }
        }
        for i in 0..vars.len() {
            for j in i + 1..vars.len() {
                if vars[i] == vars[j] {
                    return Err(Error::DuplicateVariable(vars[i].clone()));
                }
            }
        }
        PrimeField::new(char_p)?;
        let n = vars.len();
        for g in &gens {
            if g.nvars() != n {
                return Err(Error::ArityMismatch { expected: n, found: g.nvars() });
            }
            if g.is_one() {
                return Err(Error::ZeroExponentGenerator);
            }
        }
        Ok(RingSpec { vars, char_p, gens: minimalize(gens) })
    }

    /// Convenience constructor from exponent vectors.
    pub fn from_exponents(
        vars: &[&str],
        char_p: u64,
        gens: &[&[u32]],
    ) -> Result<Self> {
        RingSpec::new(
            vars.iter().map(|s| s.to_string()).collect(),
            char_p,
            gens.iter().map(|e| Monomial::new(e.to_vec())).collect(),
        )
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn char_p(&self) -> u64 {
        self.char_p
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Membership in the monomial ideal is divisibility by some generator.
    pub fn in_ideal(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Sum over variables of the largest exponent occurring among the
    /// generators; the truncation policy and the torsion bound use it.
    pub fn generator_degree_mass(&self) -> usize {
        (0..self.nvars())
            .map(|t| self.gens.iter().map(|g| g.exponent(t)).max().unwrap_or(0) as usize)
            .sum()
    }

    /// Largest exponent of variable `t` among the generators.
    pub fn max_exponent(&self, t: usize) -> u32 {
        self.gens.iter().map(|g| g.exponent(t)).max().unwrap_or(0)
    }
}

/// Drop generators strictly divisible by another generator, dedup, sort.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    gens.iter()
        .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
        .cloned()
        .collect()
}

/// A validated ring with its Krull dimension.
#[derive(Clone, Debug)]
pub struct RingModel {
    spec: RingSpec,
    field: PrimeField,
    dim: usize,
}

impl RingModel {
    pub fn new(spec: RingSpec) -> Result<Self> {
        let field = PrimeField::new(spec.char_p())?;
        let n = spec.nvars();
        if n > 20 {
            return Err(Error::InvalidArgument(format!(
                "{n} variables exceeds the supported limit of 20"
            )));
        }
        let dim = n - min_support_cover(&spec);
        Ok(RingModel { spec, field, dim })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical one-line description, used as the ring id in reports.
    pub fn signature(&self) -> String {
        let gens: Vec<String> = self
            .spec
            .generators()
            .iter()
            .map(|g| g.display(self.spec.vars()))
            .collect();
        format!(
            "GF({})[{}]/({})",
            self.spec.char_p(),
            self.spec.vars().join(","),
            gens.join(", ")
        )
    }
}

/// Least size of a variable set meeting every generator's support, by brute
/// force over subsets in order of size.
fn min_support_cover(spec: &RingSpec) -> usize {
    let n = spec.nvars();
    if spec.generators().is_empty() {
        return 0;
    }
    let supports: Vec<u32> = spec
        .generators()
        .iter()
        .map(|g| g.support().iter().fold(0u32, |m, &t| m | (1 << t)))
        .collect();
    for size in 1..=n {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            if supports.iter().all(|&s| s & mask != 0) {
                return size;
            }
        }
    }
    n
}
