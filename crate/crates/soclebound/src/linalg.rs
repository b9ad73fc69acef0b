//! Exact linear algebra over a prime field F_p.
//!
//! Everything downstream (ideal slices, socles, transition maps) reduces to
//! row operations on dense matrices over F_p. Subspaces are kept in reduced
//! row-echelon form, so two equal subspaces have bit-identical bases and
//! equality is plain comparison.

use crate::error::{Error, Result};

/// The coefficient field F_p. Scalars are `u64` residues in `[0, p)`;
/// the field object carries the modulus and performs all arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeChar(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        mulmod(a, b, self.p)
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "inverse of zero");
        powmod(a, self.p - 2, self.p)
    }

    /// Reduce a signed integer into `[0, p)`.
    pub fn reduce_i64(self, a: i64) -> u64 {
        let m = self.p as i64;
        (((a % m) + m) % m) as u64
    }
}

/// Dense row-major matrix over F_p. Rows are vectors; a matrix of shape
/// `rows x cols` represents the linear map `v -> v * M` from F_p^rows
/// to F_p^cols when used as a map.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} mod {} [", self.rows, self.cols, self.field.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: Vec<Vec<u64>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            for &x in r {
                debug_assert!(x < field.p);
                data.push(x);
            }
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Matrix product; requires `self.cols == other.rows`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Apply the map to a single row vector: `v * M`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let f = self.field;
        let mut out = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for j in 0..self.cols {
                out[j] = f.add(out[j], f.mul(a, self.get(k, j)));
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// In-place Gauss-Jordan elimination to reduced row-echelon form.
    /// Returns the pivot columns; zero rows sink to the bottom.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut piv = None;
            for i in r..self.rows {
                if self.get(i, c) != 0 {
                    piv = Some(i);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            if piv != r {
                for j in 0..self.cols {
                    let tmp = self.get(r, j);
                    self.set(r, j, self.get(piv, j));
                    self.set(piv, j, tmp);
                }
            }
            let inv = f.inv(self.get(r, c));
            for j in c..self.cols {
                self.set(r, j, f.mul(inv, self.get(r, j)));
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// A particular solution `c` of `c * self = target`, or `None` if the
    /// target is outside the row space. `salt_kernel` adds the given
    /// combination of row-relation vectors, yielding a different (equally
    /// valid) solution when the system is underdetermined.
    pub fn solve_left(&self, target: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(target.len(), self.cols);
        let f = self.field;
        // Augment each row with the unit vector tracking row combinations,
        // plus one extra row carrying the target.
        let n = self.rows;
        let mut aug = Matrix::zeros(f, n, self.cols + n);
        for i in 0..n {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols + i, 1);
        }
        let mut m = aug;
        m.rref_in_place();
        // Reduce the target against the echelonized rows, tracking coefficients.
        let mut v = target.to_vec();
        let mut coeff = vec![0u64; n];
        for r in 0..m.rows {
            let Some(p) = (0..self.cols).find(|&j| m.get(r, j) != 0) else { break };
            if v[p] != 0 {
                let factor = v[p];
                for j in 0..self.cols {
                    v[j] = f.sub(v[j], f.mul(factor, m.get(r, j)));
                }
                for j in 0..n {
                    coeff[j] = f.add(coeff[j], f.mul(factor, m.get(r, self.cols + j)));
                }
            }
        }
        if v.iter().any(|&x| x != 0) {
            return None;
        }
        Some(coeff)
    }

    /// Basis (as rows) of the left relations `{c : c * self = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<u64>> {
        Subspace::kernel(&self.transpose()).basis_rows()
    }
}

/// An F_p subspace of a coordinate space, stored as a reduced row-echelon
/// basis. The representation is canonical: equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {}, basis {:?})", self.dim(), self.ambient, self.basis)
    }
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Matrix::zeros(field, 0, ambient), pivots: vec![] }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonical row space of the given spanning rows.
    pub fn from_rows(field: PrimeField, ambient: usize, rows: Vec<Vec<u64>>) -> Self {
        let mut m = Matrix::from_rows(field, ambient, rows);
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        let mut data = m.data;
        data.truncate(rank * ambient);
        let basis = Matrix { field, rows: rank, cols: ambient, data };
        Subspace { field, ambient, basis, pivots }
    }

    pub fn from_matrix(m: Matrix) -> Self {
        let ambient = m.cols();
        Subspace::from_rows(m.field, ambient, m.row_vecs())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<u64>> {
        self.basis.row_vecs()
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivot columns; these index a complement of the
    /// subspace, and coordinates of normal forms live there.
    pub fn nonpivot_cols(&self) -> Vec<usize> {
        let mut piv = self.pivots.iter().copied().peekable();
        let mut out = Vec::with_capacity(self.ambient - self.pivots.len());
        for c in 0..self.ambient {
            if piv.peek() == Some(&c) {
                piv.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Null space `{x : M x^T = 0}` of a matrix, i.e. the joint kernel of
    /// its rows viewed as linear functionals. dim = cols - rank.
    pub fn kernel(m: &Matrix) -> Subspace {
        let f = m.field;
        let mut red = m.clone();
        let pivots = red.rref_in_place();
        let rank = pivots.len();
        let n = m.cols();
        let mut in_piv = vec![false; n];
        for &p in &pivots {
            in_piv[p] = true;
        }
        let mut rows = Vec::with_capacity(n - rank);
        for free in (0..n).filter(|&c| !in_piv[c]) {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(red.get(i, free));
            }
            rows.push(v);
        }
        Subspace::from_rows(f, n, rows)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Annihilator matrix `A` with `self = {x : A x^T = 0}`.
    pub fn annihilator(&self) -> Matrix {
        let ker = Subspace::kernel(&self.basis);
        ker.basis.clone()
    }

    /// Intersection, via the kernel of the stacked annihilators.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let stacked = self.annihilator().vstack(&other.annihilator());
        Ok(Subspace::kernel(&stacked))
    }

    /// Sum of subspaces.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_rows(self.field, self.ambient, rows))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis_rows().iter().all(|v| self.contains_vector(v)))
    }

    pub fn contains_vector(&self, v: &[u64]) -> bool {
        self.reduce_vector(v).iter().all(|&x| x == 0)
    }

    /// Normal form of `v` modulo the subspace: the unique representative of
    /// `v + self` supported on non-pivot columns.
    pub fn reduce_vector(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let factor = out[p];
            if factor == 0 {
                continue;
            }
            for j in p..self.ambient {
                out[j] = f.sub(out[j], f.mul(factor, self.basis.get(i, j)));
            }
        }
        out
    }

    /// Rows extending `self`'s basis to a basis of `larger`; requires
    /// `self ⊆ larger`. The returned vectors are normal forms modulo the
    /// current span, so the output is deterministic.
    pub fn complement_basis_in(&self, larger: &Subspace) -> Result<Vec<Vec<u64>>> {
        self.check_ambient(larger)?;
        let mut span = self.clone();
        let mut out = Vec::new();
        for v in larger.basis_rows() {
            let red = span.reduce_vector(&v);
            if red.iter().any(|&x| x != 0) {
                out.push(red.clone());
                let mut rows = span.basis_rows();
                rows.push(red);
                span = Subspace::from_rows(self.field, self.ambient, rows);
            }
        }
        if span != *larger {
            return Err(Error::Internal(
                "complement_basis_in called with non-nested subspaces".into(),
            ));
        }
        Ok(out)
    }

    /// Image of the subspace under the row-vector map `v -> v * m`.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        Subspace::from_matrix(self.basis.mul(m))
    }

    /// Preimage `{v : v * m ∈ target}` of a subspace under a map.
    pub fn preimage_under(m: &Matrix, target: &Subspace) -> Subspace {
        assert_eq!(m.cols(), target.ambient);
        if target.is_full() {
            return Subspace::full(m.field, m.rows());
        }
        let ann = target.annihilator();
        Subspace::kernel(&ann.mul(&m.transpose()))
    }
}
