//! Arithmetic in F_p and the row-reduction engine.
//!
//! Everything above this module reduces to linear algebra over a prime
//! field: graded pieces are finite-dimensional F_p-vector spaces, ideals
//! and closures are subspaces of them. Two representations are provided:
//!
//! * [`Matrix`] / [`Subspace`]: dense, reduced row-echelon form. This is the
//!   exchange type for graded pieces.
//! * [`SparseEchelon`]: a sparse semi-echelon basis used for the very large
//!   pieces that show up at Frobenius degrees.
//!
//! Pivoting is deterministic (leftmost column, first nonzero row), so every
//! result is reproducible bit for bit.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not a prime")]
    NotPrime(u64),
    #[error("characteristic {0} is outside the supported range 2 <= p < 2^31")]
    OutOfRange(u64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("dimension mismatch: expected {expected}, got {got}")]
pub struct DimensionMismatch {
    pub expected: usize,
    pub got: usize,
}

/// The prime field F_p with elements stored as canonical residues `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !(2..(1u64 << 31)).contains(&p) {
            return Err(FieldError::OutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.p - b % self.p)
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i64) as u32)
    }

    /// Reduce an arbitrary integer to its canonical residue.
    pub fn from_i64(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    /// `dst += factor * src`, entrywise.
    #[inline]
    pub fn axpy(&self, dst: &mut [u32], factor: u32, src: &[u32]) {
        if factor == 0 {
            return;
        }
        let p = self.p as u64;
        let f = factor as u64;
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = ((*d as u64 + f * s as u64) % p) as u32;
            }
        }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// Dense row-major matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    /// Build from explicit rows; entries are reduced mod p.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Result<Self, DimensionMismatch> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| x % field.p()));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
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

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let ech = rref(self);
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &ech.pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1 % f.p();
            for (r, &pc) in ech.pivots.iter().enumerate() {
                v[pc] = f.neg(ech.matrix.get(r, free));
            }
            out.push(v);
        }
        out
    }

    /// Basis of the left kernel `{u : u M = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<u32>> {
        self.transpose().kernel()
    }
}

/// Reduced row-echelon form with deterministic pivoting: for each column
/// from the left, the first row at or below the current position with a
/// nonzero entry becomes the pivot row.
pub fn rref(m: &Matrix) -> RowEchelon {
    let f = m.field;
    let cols = m.cols;
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == a.rows {
            break;
        }
        let Some(pr) = (r..a.rows).find(|&i| a.data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for k in 0..cols {
                a.data.swap(pr * cols + k, r * cols + k);
            }
        }
        let inv = f.inv(a.data[r * cols + c]).expect("pivot is nonzero");
        for k in c..cols {
            a.data[r * cols + k] = f.mul(a.data[r * cols + k], inv);
        }
        let pivot_row: Vec<u32> = a.data[r * cols + c..(r + 1) * cols].to_vec();
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let factor = a.data[i * cols + c];
            if factor != 0 {
                let neg = f.neg(factor);
                f.axpy(&mut a.data[i * cols + c..(i + 1) * cols], neg, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = r;
    // drop the zero rows below the rank
    a.data.truncate(rank * cols);
    a.rows = rank;
    RowEchelon {
        matrix: a,
        rank,
        pivots,
    }
}

/// A subspace of F_p^n stored as the nonzero rows of its reduced row-echelon
/// basis. Equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row span of the given vectors.
    pub fn span(field: PrimeField, ambient_dim: usize, vectors: &[Vec<u32>]) -> Result<Self, DimensionMismatch> {
        let m = Matrix::from_rows(field, ambient_dim, vectors)?;
        let ech = rref(&m);
        Ok(Self {
            ambient_dim,
            basis: ech.matrix,
            pivots: ech.pivots,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }

    fn check_len(&self, v: &[u32]) -> Result<(), DimensionMismatch> {
        if v.len() != self.ambient_dim {
            return Err(DimensionMismatch {
                expected: self.ambient_dim,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Canonical residue of `v` modulo the subspace: the unique vector in
    /// `v + S` that vanishes on every pivot column.
    pub fn reduce(&self, v: &[u32]) -> Result<Vec<u32>, DimensionMismatch> {
        self.check_len(v)?;
        let f = self.field();
        let mut w: Vec<u32> = v.iter().map(|&x| x % f.p()).collect();
        for (r, &c) in self.pivots.iter().enumerate() {
            let factor = w[c];
            if factor != 0 {
                f.axpy(&mut w, f.neg(factor), self.basis.row(r));
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool, DimensionMismatch> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, DimensionMismatch> {
        if self.ambient_dim != other.ambient_dim {
            return Err(DimensionMismatch {
                expected: other.ambient_dim,
                got: self.ambient_dim,
            });
        }
        for r in 0..self.dim() {
            if !other.contains(self.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, DimensionMismatch> {
        if self.ambient_dim != other.ambient_dim {
            return Err(DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.field(), self.ambient_dim, &rows)
    }

    /// Intersection by Zassenhaus: row-reduce `[a | a; b | 0]`; the rows whose
    /// left half vanishes carry a basis of `a ∩ b` in their right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, DimensionMismatch> {
        let n = self.ambient_dim;
        if n != other.ambient_dim {
            return Err(DimensionMismatch {
                expected: n,
                got: other.ambient_dim,
            });
        }
        let f = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(f, n));
        }
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in 0..self.dim() {
            let mut row = self.basis.row(r).to_vec();
            row.extend_from_slice(self.basis.row(r));
            rows.push(row);
        }
        for r in 0..other.dim() {
            let mut row = other.basis.row(r).to_vec();
            row.extend(std::iter::repeat_n(0, n));
            rows.push(row);
        }
        let ech = rref(&Matrix::from_rows(f, 2 * n, &rows)?);
        let inter: Vec<Vec<u32>> = ech
            .pivots
            .iter()
            .enumerate()
            .filter(|(_, &c)| c >= n)
            .map(|(r, _)| ech.matrix.row(r)[n..].to_vec())
            .collect();
        Subspace::span(f, n, &inter)
    }

    /// Canonical basis of `self / sub` (requires `sub ⊆ self` for the result
    /// to be meaningful): the reduced residues of `self`'s basis modulo `sub`.
    pub fn quotient_representatives(&self, sub: &Subspace) -> Result<Vec<Vec<u32>>, DimensionMismatch> {
        let mut residues = Vec::new();
        for r in 0..self.dim() {
            residues.push(sub.reduce(self.basis.row(r))?);
        }
        Ok(Subspace::span(self.field(), self.ambient_dim, &residues)?.basis_vectors())
    }

    /// Image of the subspace under coordinate map `e_j ↦ image[j]`.
    pub fn map(&self, target_dim: usize, image: &[Vec<u32>]) -> Result<Subspace, DimensionMismatch> {
        if image.len() != self.ambient_dim {
            return Err(DimensionMismatch {
                expected: self.ambient_dim,
                got: image.len(),
            });
        }
        let f = self.field();
        let mut rows = Vec::with_capacity(self.dim());
        for r in 0..self.dim() {
            let mut acc = vec![0u32; target_dim];
            for (j, &coef) in self.basis.row(r).iter().enumerate() {
                f.axpy(&mut acc, coef, &image[j]);
            }
            rows.push(acc);
        }
        Subspace::span(f, target_dim, &rows)
    }
}

/// Sparse semi-echelon basis: each stored row starts at its pivot column
/// with coefficient 1; rows are not reduced against later pivots.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: PrimeField,
    ambient_dim: usize,
    rows: Vec<Vec<(u32, u32)>>,
    pivot_row: Vec<u32>,
}

const NO_PIVOT: u32 = u32::MAX;

impl SparseEchelon {
    pub fn new(field: PrimeField, ambient_dim: usize) -> Self {
        Self {
            field,
            ambient_dim,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ambient_dim],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_PIVOT
    }

    fn eliminate(&self, w: &mut [u32], col: usize) -> bool {
        let idx = self.pivot_row[col];
        if idx == NO_PIVOT {
            return false;
        }
        let f = self.field;
        let factor = f.neg(w[col]);
        let p = f.p() as u64;
        for &(c, v) in &self.rows[idx as usize] {
            let c = c as usize;
            w[c] = ((w[c] as u64 + factor as u64 * v as u64) % p) as u32;
        }
        true
    }

    /// Insert a dense vector; returns `true` when the rank grew.
    pub fn insert_dense(&mut self, mut w: Vec<u32>) -> bool {
        debug_assert_eq!(w.len(), self.ambient_dim);
        let f = self.field;
        for col in 0..self.ambient_dim {
            if w[col] == 0 {
                continue;
            }
            if self.eliminate(&mut w, col) {
                continue;
            }
            let inv = f.inv(w[col]).expect("nonzero");
            let row: Vec<(u32, u32)> = (col..self.ambient_dim)
                .filter(|&c| w[c] != 0)
                .map(|c| (c as u32, f.mul(w[c], inv)))
                .collect();
            self.pivot_row[col] = self.rows.len() as u32;
            self.rows.push(row);
            return true;
        }
        false
    }

    pub fn insert_sparse(&mut self, v: &[(usize, u32)]) -> bool {
        let mut w = vec![0u32; self.ambient_dim];
        for &(c, x) in v {
            w[c] = self.field.add(w[c], x);
        }
        self.insert_dense(w)
    }

    /// Full reduction in place: afterwards `w` vanishes on every pivot column.
    pub fn reduce_in_place(&self, w: &mut [u32]) {
        for col in 0..self.ambient_dim {
            if w[col] != 0 {
                self.eliminate(w, col);
            }
        }
    }

    pub fn contains(&self, w: &[u32]) -> bool {
        let mut w = w.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Convert to the dense RREF representation.
    pub fn to_subspace(&self) -> Subspace {
        let rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|r| {
                let mut v = vec![0u32; self.ambient_dim];
                for &(c, x) in r {
                    v[c as usize] = x;
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.ambient_dim, &rows).expect("rows have ambient length")
    }
}
