//! Dense exact matrices and canonical subspaces.
//!
//! A [`Subspace`] stores the reduced row echelon form of its spanning set, so
//! two subspaces of the same ambient space are equal exactly when their
//! stored bases are equal.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<F>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend_from_slice(r);
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<F>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| F::from_i64(x)).collect())
            .collect();
        Self::from_rows(cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn column_vecs(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| s.clone() * x.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scalar::add_vec(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scalar::sub_vec(&self.data, &other.data),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| scalar::dot(self.row(i), v)).collect()
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone())
            })
    }

    /// Bilinear form `aᵀ M b`.
    pub fn bilinear(&self, a: &[F], b: &[F]) -> F {
        scalar::dot(a, &self.mul_vec(b))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = F::one() / m[(r, c)].clone();
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] = m[(r, j)].clone() * inv.clone();
                }
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].clone() - factor.clone() * m[(r, j)].clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : Mx = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = scalar::zero_vec::<F>(self.cols);
                v[fc] = F::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, fc)].clone();
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * pivot.clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone() / pivot.clone();
                for j in c..n {
                    if !m[(c, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].clone() - factor.clone() * m[(c, j)].clone();
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotInvertible);
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::NotInvertible);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// One solution of `Mx = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = scalar::zero_vec::<F>(self.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Block-diagonal sum of square matrices.
    pub fn block_diagonal(blocks: &[Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|x| format!("{x:?}"))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of `F^n`, stored as the nonzero rows of the RREF of any
/// spanning set.
#[derive(Clone, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| scalar::unit_vec(ambient, i)).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(ambient, vectors).rref();
        Subspace {
            ambient,
            basis: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if scalar::is_zero_vec(v) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(self.ambient, &rows).rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &rows)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // Solve Σ a_i u_i - Σ b_j w_j = 0 and keep Σ a_i u_i.
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| scalar::neg_vec(w)));
        let sys = Matrix::from_columns(self.ambient, &cols);
        let k = self.dim();
        let vectors: Vec<Vec<F>> = sys
            .nullspace()
            .iter()
            .map(|c| scalar::combine(&c[..k], &self.basis, self.ambient))
            .collect();
        Self::span(self.ambient, &vectors)
    }

    /// `{α ∈ (F^n)* : α(v) = 0 for v in self}`, in dual coordinates.
    pub fn annihilator(&self) -> Self {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        Self::span(
            self.ambient,
            &Matrix::from_rows(self.ambient, &self.basis).nullspace(),
        )
    }

    /// Image under a linear map `F^n -> F^m`.
    pub fn image(&self, map: &Matrix<F>) -> Self {
        assert_eq!(map.cols(), self.ambient);
        let vectors: Vec<Vec<F>> = self.basis.iter().map(|v| map.mul_vec(v)).collect();
        Self::span(map.rows(), &vectors)
    }

    /// `{x ∈ F^m : map(x) ∈ self}` for `map : F^m -> F^n`.
    pub fn preimage(&self, map: &Matrix<F>) -> Self {
        assert_eq!(map.rows(), self.ambient);
        let m = map.cols();
        // [map | -basis] (x, c) = 0
        let mut cols = map.column_vecs();
        cols.extend(self.basis.iter().map(|w| scalar::neg_vec(w)));
        let sys = Matrix::from_columns(self.ambient, &cols);
        let vectors: Vec<Vec<F>> = sys.nullspace().into_iter().map(|v| v[..m].to_vec()).collect();
        Self::span(m, &vectors)
    }

    /// Coordinates of `v` in the stored basis, when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        coordinates_in(&self.basis, v)
    }

    /// Extends the stored basis by standard unit vectors to a basis of the
    /// ambient space and returns the added vectors.
    pub fn complement(&self) -> Vec<Vec<F>> {
        complement_within(&self.basis, &Self::full(self.ambient).basis)
    }

    pub fn map_vectors(&self, f: impl Fn(&[F]) -> Vec<F>, ambient: usize) -> Self {
        let v: Vec<Vec<F>> = self.basis.iter().map(|b| f(b)).collect();
        Self::span(ambient, &v)
    }
}

impl<F: fmt::Debug> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.basis.len(), self.ambient)?;
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(|x| format!("{x:?}")).collect();
                format!("[{}]", s.join(", "))
            })
            .collect();
        write!(f, "{{{}}}", rows.join(", "))
    }
}

/// Coordinates of `v` in the (independent) vectors of `basis`.
pub fn coordinates_in<F: Scalar>(basis: &[Vec<F>], v: &[F]) -> Option<Vec<F>> {
    if basis.is_empty() {
        return scalar::is_zero_vec(v).then(Vec::new);
    }
    Matrix::from_columns(v.len(), basis).solve(v)
}

/// Vectors from `candidates` that extend the independent set `base` to a
/// basis of `span(base ∪ candidates)`.
pub fn complement_within<F: Scalar>(base: &[Vec<F>], candidates: &[Vec<F>]) -> Vec<Vec<F>> {
    let mut rows: Vec<Vec<F>> = base.to_vec();
    let mut rank = if rows.is_empty() {
        0
    } else {
        Matrix::from_rows(rows[0].len(), &rows).rank()
    };
    let mut added = Vec::new();
    for c in candidates {
        rows.push(c.clone());
        let r = Matrix::from_rows(c.len(), &rows).rank();
        if r > rank {
            rank = r;
            added.push(c.clone());
        } else {
            rows.pop();
        }
    }
    added
}

/// Rank of a list of vectors of length `n`.
pub fn rank_of<F: Scalar>(n: usize, vectors: &[Vec<F>]) -> usize {
    if vectors.is_empty() {
        0
    } else {
        Matrix::from_rows(n, vectors).rank()
    }
}

/// Gram matrix `G_ij = form(v_i, v_j)`.
pub fn gram<F: Scalar>(vectors: &[Vec<F>], form: impl Fn(&[F], &[F]) -> F) -> Matrix<F> {
    let n = vectors.len();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = form(&vectors[i], &vectors[j]);
        }
    }
    g
}
