//! The truncated graded model A_N = k[x]/(I + m^N).
//!
//! Standard monomials (monomials outside I of degree < N) form a k-basis of
//! A_N, and below the horizon N the model is degreewise exact: the degree-d
//! slice has dimension equal to the Hilbert function of R. Every computation
//! in the crate happens in slice coordinates of this model, and operations
//! that would need degrees >= N report a window error instead of guessing.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};
use crate::monomial::Monomial;
use crate::ring::RingModel;

/// Cap on standard-monomial count so a runaway truncation fails fast.
const BASIS_BUDGET: usize = 4_000_000;

#[derive(Clone)]
pub struct TruncatedAlgebra {
    model: RingModel,
    field: PrimeField,
    truncation: usize,
    basis: Vec<Vec<Monomial>>,
    index: HashMap<Monomial, (usize, usize)>,
}

/// Base truncation for a ring: twice the total generator exponent mass plus
/// a margin. The torsion module, the reduction data, and the worked examples
/// all live well inside this window; callers escalate when they need more.
pub fn auto_truncation(model: &RingModel, requested: Option<usize>) -> usize {
    let base = 2 * model.spec().generator_degree_mass() + 4;
    base.max(requested.unwrap_or(0)).max(2)
}

fn enumerate_degree(nvars: usize, degree: usize, out: &mut Vec<Monomial>) {
    fn rec(exps: &mut Vec<u32>, pos: usize, remaining: usize, out: &mut Vec<Monomial>) {
        if pos + 1 == exps.len() {
            exps[pos] = remaining as u32;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in (0..=remaining).rev() {
            exps[pos] = e as u32;
            rec(exps, pos + 1, remaining - e, out);
        }
    }
    let mut exps = vec![0u32; nvars];
    rec(&mut exps, 0, degree, out);
}

impl TruncatedAlgebra {
    pub fn new(model: &RingModel, truncation: usize) -> Result<Self> {
        if truncation < 2 {
            return Err(Error::InvalidArgument(format!(
                "truncation {truncation} is below the minimum of 2"
            )));
        }
        let n = model.spec().nvars();
        let mut basis = Vec::with_capacity(truncation);
        let mut index = HashMap::new();
        let mut count = 0usize;
        for d in 0..truncation {
            let mut all = Vec::new();
            enumerate_degree(n, d, &mut all);
            let mut slice: Vec<Monomial> =
                all.into_iter().filter(|m| !model.spec().in_ideal(m)).collect();
            slice.sort();
            count += slice.len();
            if count > BASIS_BUDGET {
                return Err(Error::BasisBudget { count, cap: BASIS_BUDGET });
            }
            for (i, m) in slice.iter().enumerate() {
                index.insert(m.clone(), (d, i));
            }
            basis.push(slice);
        }
        Ok(TruncatedAlgebra {
            model: model.clone(),
            field: model.field(),
            truncation,
            basis,
            index,
        })
    }

    pub fn model(&self) -> &RingModel {
        &self.model
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn nvars(&self) -> usize {
        self.model.spec().nvars()
    }

    /// Hilbert function H_R(d); exact for every d < N.
    pub fn hilbert(&self, d: usize) -> usize {
        self.basis[d].len()
    }

    pub fn hilbert_series(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.len()).collect()
    }

    pub fn basis_at(&self, d: usize) -> &[Monomial] {
        &self.basis[d]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<(usize, usize)> {
        self.index.get(m).copied()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        m.degree() < self.truncation && !self.model.spec().in_ideal(m)
    }

    fn check_degree(&self, needed: usize) -> Result<()> {
        if needed >= self.truncation {
            return Err(Error::WindowExceeded { needed, horizon: self.truncation - 1 });
        }
        Ok(())
    }

    /// Build an element from (monomial, signed coefficient) terms. Monomials
    /// inside I reduce to zero; coefficients are reduced mod p; terms whose
    /// degree reaches N are rejected rather than silently dropped.
    pub fn element(&self, terms: &[(Monomial, i64)]) -> Result<RingElement> {
        let mut out: std::collections::BTreeMap<Monomial, u64> = Default::default();
        for (m, c) in terms {
            if m.nvars() != self.nvars() {
                return Err(Error::ArityMismatch { expected: self.nvars(), found: m.nvars() });
            }
            self.check_degree(m.degree())?;
            if self.model.spec().in_ideal(m) {
                continue;
            }
            let c = self.field.reduce_i64(*c);
            let entry = out.entry(m.clone()).or_insert(0);
            *entry = self.field.add(*entry, c);
        }
        out.retain(|_, c| *c != 0);
        Ok(RingElement { terms: out })
    }

    pub fn zero_element(&self) -> RingElement {
        RingElement { terms: Default::default() }
    }

    pub fn monomial_element(&self, m: Monomial) -> Result<RingElement> {
        self.element(&[(m, 1)])
    }

    pub fn variable(&self, t: usize) -> Result<RingElement> {
        self.monomial_element(Monomial::var(t, self.nvars()))
    }

    /// Product in A_N. `overflowed` is set when a cross-term of degree >= N
    /// was discarded; the result then only describes degrees below N.
    pub fn multiply(&self, f: &RingElement, g: &RingElement) -> (RingElement, bool) {
        let mut out: std::collections::BTreeMap<Monomial, u64> = Default::default();
        let mut overflow = false;
        for (mf, cf) in &f.terms {
            for (mg, cg) in &g.terms {
                let m = mf.mul(mg);
                if m.degree() >= self.truncation {
                    overflow = true;
                    continue;
                }
                if self.model.spec().in_ideal(&m) {
                    continue;
                }
                let c = self.field.mul(*cf, *cg);
                let entry = out.entry(m).or_insert(0);
                *entry = self.field.add(*entry, c);
            }
        }
        out.retain(|_, c| *c != 0);
        (RingElement { terms: out }, overflow)
    }

    /// k-th power; overflow flag as in `multiply`.
    pub fn power(&self, f: &RingElement, k: usize) -> (RingElement, bool) {
        let mut acc = match self.monomial_element(Monomial::one(self.nvars())) {
            Ok(e) => e,
            Err(_) => return (self.zero_element(), true),
        };
        let mut overflow = false;
        for _ in 0..k {
            let (next, o) = self.multiply(&acc, f);
            overflow |= o;
            acc = next;
        }
        (acc, overflow)
    }

    pub fn add(&self, f: &RingElement, g: &RingElement) -> RingElement {
        let mut out = f.terms.clone();
        for (m, c) in &g.terms {
            let entry = out.entry(m.clone()).or_insert(0);
            *entry = self.field.add(*entry, *c);
        }
        out.retain(|_, c| *c != 0);
        RingElement { terms: out }
    }

    pub fn scale(&self, f: &RingElement, c: u64) -> RingElement {
        let mut out = std::collections::BTreeMap::new();
        if c != 0 {
            for (m, x) in &f.terms {
                out.insert(m.clone(), self.field.mul(*x, c));
            }
        }
        RingElement { terms: out }
    }

    /// Coordinates of a homogeneous element in the degree-d slice.
    pub fn coords(&self, f: &RingElement, d: usize) -> Result<Vec<u64>> {
        self.check_degree(d)?;
        let mut v = vec![0u64; self.hilbert(d)];
        for (m, c) in &f.terms {
            if m.degree() != d {
                return Err(Error::InhomogeneousGenerator(format!("{f:?}")));
            }
            let (dd, i) = self.index[m];
            debug_assert_eq!(dd, d);
            v[i] = *c;
        }
        Ok(v)
    }

    /// Element reconstructed from slice coordinates.
    pub fn element_from_coords(&self, d: usize, v: &[u64]) -> RingElement {
        let mut terms = std::collections::BTreeMap::new();
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                terms.insert(self.basis[d][i].clone(), c);
            }
        }
        RingElement { terms }
    }

    /// Matrix of multiplication by a homogeneous element `f`, from the
    /// degree-d slice to the degree-(d + deg f) slice, rows indexed by the
    /// source standard basis.
    pub fn mult_matrix(&self, f: &RingElement, d: usize) -> Result<Matrix> {
        let e = f
            .homogeneous_degree()
            .ok_or_else(|| Error::InhomogeneousGenerator(self.display(f)))?;
        self.check_degree(d + e)?;
        let src = self.hilbert(d);
        let dst = self.hilbert(d + e);
        let mut m = Matrix::zeros(self.field, src, dst);
        for (i, u) in self.basis[d].iter().enumerate() {
            for (mf, cf) in &f.terms {
                let prod = u.mul(mf);
                if let Some(&(dd, j)) = self.index.get(&prod) {
                    debug_assert_eq!(dd, d + e);
                    m.set(i, j, self.field.add(m.get(i, j), *cf));
                }
            }
        }
        Ok(m)
    }

    /// Multiplication by the variable `x_t` from degree d to d + 1.
    pub fn var_mult_matrix(&self, t: usize, d: usize) -> Result<Matrix> {
        let f = self.variable(t)?;
        self.mult_matrix(&f, d)
    }

    pub fn display(&self, f: &RingElement) -> String {
        f.display(self.model.spec().vars())
    }
}

/// An element of the truncated algebra: a k-linear combination of standard
/// monomials with coefficients in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElement {
    terms: std::collections::BTreeMap<Monomial, u64>,
}

impl RingElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    /// `Some(d)` if nonzero and all terms have degree d.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        if it.all(|m| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn display(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let p = match (*c, m.is_one()) {
                (1, false) => m.display(vars),
                (c, true) => format!("{c}"),
                (c, false) => format!("{c}*{}", m.display(vars)),
            };
            parts.push(p);
        }
        parts.join(" + ")
    }
}
