//! Monomials as exponent vectors. Divisibility is the whole of ideal
//! membership for monomial ideals, so these few operations carry the ring
//! theory of the crate.

use std::cmp::Ordering;

/// A monomial in a fixed number of variables, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial 1.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The variable `x_t`.
    pub fn var(t: usize, nvars: usize) -> Self {
        Self::var_pow(t, 1, nvars)
    }

    /// The pure power `x_t^e`.
    pub fn var_pow(t: usize, e: u32, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[t] = e;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, t: usize) -> u32 {
        self.exps[t]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e * k).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&t| self.exps[t] > 0).collect()
    }

    /// Render with the given variable names, e.g. `x^2*y`.
    pub fn display(&self, vars: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (t, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars[t].clone()),
                _ => parts.push(format!("{}^{}", vars[t], e)),
            }
        }
        parts.join("*")
    }
}

// Degree first, then lexicographic with earlier variables large, so that
// within a degree `x^2` sorts before `x*y` before `y^2`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
