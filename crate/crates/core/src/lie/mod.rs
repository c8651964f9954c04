//! Finite-dimensional Lie algebras given by structure constants.

mod chevalley;
mod group;
pub mod roots;
mod sl2;

use std::fmt;

use crate::error::{check_len, Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::poly;
use crate::scalar::{self, Scalar};

pub use chevalley::{build_chevalley, cartan_matrix, CartanType, SUPPORTED_TYPES};
pub use group::GroupElement;
pub use sl2::{principal_sl2, Sl2Triple};

/// A Lie algebra with basis `e_0, …, e_{n-1}` and
/// `[e_i, e_j] = Σ_k c_{ij}^k e_k`.
///
/// Vectors of the algebra and covectors of its dual are plain coordinate
/// slices; covectors use the dual basis, so `ξ(x) = Σ ξ_i x_i`.
#[derive(Clone)]
pub struct LieAlgebra<F> {
    labels: Vec<String>,
    rank: usize,
    /// `constants[i * dim + j]` lists the nonzero `(k, c_{ij}^k)`.
    constants: Vec<Vec<(usize, F)>>,
    killing: Matrix<F>,
    killing_inv: Option<Matrix<F>>,
    root_data: Option<RootData<F>>,
    matrix_rep: Option<MatrixRealization<F>>,
}

/// Roots of a split semisimple algebra in its Chevalley basis.
#[derive(Clone, Debug)]
pub struct RootData<F> {
    pub cartan_type: CartanType,
    /// `cartan[i][j] = α_j(h_i)`.
    pub cartan: Vec<Vec<i64>>,
    /// All roots in simple-root coordinates: positive roots by height, then
    /// their negatives in the same order.
    pub roots: Vec<Vec<i64>>,
    /// Basis index of the root vector `e_α` for each entry of `roots`.
    pub root_vectors: Vec<usize>,
    /// Coroot `h_α = [e_α, e_{-α}]` for each entry of `roots`.
    pub coroots: Vec<Vec<F>>,
}

impl<F: Scalar> RootData<F> {
    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    /// Index into `roots` of the `i`-th simple root.
    pub fn simple_root(&self, i: usize) -> usize {
        i
    }

    /// Index into `roots` of the negative of `roots[idx]`.
    pub fn negative(&self, idx: usize) -> usize {
        let p = self.num_positive();
        if idx < p {
            idx + p
        } else {
            idx - p
        }
    }

    /// `α(h)` for `h` in the Cartan subalgebra spanned by the first `rank`
    /// basis vectors (only those coordinates are read).
    pub fn eval_root(&self, root: usize, h: &[F]) -> F {
        let alpha = &self.roots[root];
        let mut acc = F::zero();
        for (i, row) in self.cartan.iter().enumerate() {
            let weight: i64 = alpha.iter().zip(row).map(|(m, a)| m * a).sum();
            if weight != 0 {
                acc = acc + F::from_i64(weight) * h[i].clone();
            }
        }
        acc
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == coeffs)
    }
}

/// A faithful matrix representation `e_i ↦ M_i`.
#[derive(Clone)]
pub struct MatrixRealization<F> {
    size: usize,
    matrices: Vec<Matrix<F>>,
    pivots: Vec<(usize, usize)>,
    pivot_inv: Matrix<F>,
}

impl<F: Scalar> MatrixRealization<F> {
    /// Fails when the matrices are linearly dependent.
    pub fn new(size: usize, matrices: Vec<Matrix<F>>) -> Result<Self> {
        let flat: Vec<Vec<F>> = matrices.iter().map(flatten).collect();
        let columns = Matrix::from_columns(size * size, &flat);
        // Independent rows of the column matrix give an invertible square block.
        let (_, pivot_rows) = columns.transpose().rref();
        if pivot_rows.len() != matrices.len() {
            return Err(Error::InvalidArgument(
                "realization matrices are linearly dependent".into(),
            ));
        }
        let block = Matrix::from_rows(
            matrices.len(),
            &pivot_rows.iter().map(|&r| columns.row(r).to_vec()).collect::<Vec<_>>(),
        );
        Ok(MatrixRealization {
            size,
            pivots: pivot_rows.iter().map(|&r| (r / size, r % size)).collect(),
            pivot_inv: block.inverse()?,
            matrices,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.matrices
    }

    pub fn to_matrix(&self, x: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.size, self.size);
        for (c, b) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                m = m.add(&b.scale(c));
            }
        }
        m
    }

    /// Coordinates of a matrix in the realization basis.
    pub fn coordinates(&self, m: &Matrix<F>) -> Result<Vec<F>> {
        let rhs: Vec<F> = self.pivots.iter().map(|&(i, j)| m[(i, j)].clone()).collect();
        let x = self.pivot_inv.mul_vec(&rhs);
        if self.to_matrix(&x) == *m {
            Ok(x)
        } else {
            Err(Error::NotInRealization)
        }
    }

    fn block_power(&self, n: usize, dim: usize) -> Result<Self> {
        let zero = Matrix::zeros(self.size, self.size);
        let mut out = Vec::with_capacity(n * dim);
        for copy in 0..n {
            for m in &self.matrices {
                let blocks: Vec<Matrix<F>> = (0..n)
                    .map(|c| if c == copy { m.clone() } else { zero.clone() })
                    .collect();
                out.push(Matrix::block_diagonal(&blocks));
            }
        }
        Self::new(self.size * n, out)
    }
}

fn flatten<F: Scalar>(m: &Matrix<F>) -> Vec<F> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

impl<F: Scalar> LieAlgebra<F> {
    /// Builds an algebra from dense constants `c[(i * dim + j) * dim + k]`,
    /// checking antisymmetry and the Jacobi identity.
    pub fn from_structure_constants(
        labels: Vec<String>,
        rank: usize,
        constants: &[F],
    ) -> Result<Self> {
        let dim = labels.len();
        check_len(dim * dim * dim, constants.len())?;
        let sparse = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = &constants[ij * dim + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        Self::from_sparse(labels, rank, sparse, None, None)
    }

    pub(crate) fn from_sparse(
        labels: Vec<String>,
        rank: usize,
        constants: Vec<Vec<(usize, F)>>,
        root_data: Option<RootData<F>>,
        matrix_rep: Option<MatrixRealization<F>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidStructureConstants("empty basis".into()));
        }
        let mut alg = LieAlgebra {
            labels,
            rank,
            constants,
            killing: Matrix::zeros(dim, dim),
            killing_inv: None,
            root_data,
            matrix_rep,
        };
        if !alg.is_antisymmetric() {
            return Err(Error::InvalidStructureConstants("not antisymmetric".into()));
        }
        if let Some((i, j, k)) = alg.jacobi_violation() {
            return Err(Error::InvalidStructureConstants(format!(
                "Jacobi identity fails on ({i}, {j}, {k})"
            )));
        }
        if let Some(rd) = &alg.root_data {
            if rd.roots.len() != dim - rank {
                return Err(Error::InvalidStructureConstants(
                    "number of roots differs from dim - rank".into(),
                ));
            }
        }
        if let Some(rep) = &alg.matrix_rep {
            if rep.matrices.len() != dim || !alg.realization_consistent(rep) {
                return Err(Error::InvalidStructureConstants(
                    "matrix realization does not reproduce the constants".into(),
                ));
            }
        }
        alg.killing = alg.compute_killing();
        alg.killing_inv = alg.killing.inverse().ok();
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        scalar::unit_vec(self.dim(), i)
    }

    /// Vector with coordinate 1 on the basis element called `label`.
    pub fn element(&self, label: &str) -> Result<Vec<F>> {
        self.basis_index(label)
            .map(|i| self.basis_vector(i))
            .ok_or_else(|| Error::InvalidArgument(format!("no basis element {label}")))
    }

    pub fn root_data(&self) -> Option<&RootData<F>> {
        self.root_data.as_ref()
    }

    pub fn matrix_rep(&self) -> Option<&MatrixRealization<F>> {
        self.matrix_rep.as_ref()
    }

    pub fn killing(&self) -> &Matrix<F> {
        &self.killing
    }

    pub fn killing_inverse(&self) -> Result<&Matrix<F>> {
        self.killing_inv.as_ref().ok_or(Error::NotInvertible)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> F {
        self.constants[i * self.dim() + j]
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(F::zero, |(_, c)| c.clone())
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        check_len(self.dim(), x.len())?;
        check_len(self.dim(), y.len())?;
        Ok(self.br(x, y))
    }

    pub(crate) fn br(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = scalar::zero_vec::<F>(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi.clone() * yj.clone();
                for (k, c) in &self.constants[i * n + j] {
                    out[*k] = out[*k].clone() + s.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Matrix of `ad_x = [x, ·]`.
    pub fn ad_matrix(&self, x: &[F]) -> Result<Matrix<F>> {
        check_len(self.dim(), x.len())?;
        let n = self.dim();
        let mut m = Matrix::<F>::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.constants[i * n + j] {
                    m[(*k, j)] = m[(*k, j)].clone() + xi.clone() * c.clone();
                }
            }
        }
        Ok(m)
    }

    /// `ξ(x)`.
    pub fn pairing(&self, xi: &[F], x: &[F]) -> Result<F> {
        check_len(self.dim(), xi.len())?;
        check_len(self.dim(), x.len())?;
        Ok(scalar::dot(xi, x))
    }

    /// `ad_x^* ξ = −ξ ∘ ad_x`.
    pub fn ad_star(&self, x: &[F], xi: &[F]) -> Result<Vec<F>> {
        check_len(self.dim(), x.len())?;
        check_len(self.dim(), xi.len())?;
        Ok(self.coad_matrix(xi).mul_vec(x))
    }

    /// Matrix of the linear map `x ↦ ad_x^* ξ`; entry `(j, i)` is
    /// `−ξ([e_i, e_j])`.
    pub fn coad_matrix(&self, xi: &[F]) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = self.constants[i * n + j]
                    .iter()
                    .fold(F::zero(), |acc, (k, c)| acc + c.clone() * xi[*k].clone());
                if !v.is_zero() {
                    m[(j, i)] = -v;
                }
            }
        }
        m
    }

    /// The KKS bivector at `ξ` as a map `g → g*`, `x ↦ −ad_x^* ξ`.
    pub fn kks_matrix(&self, xi: &[F]) -> Matrix<F> {
        self.coad_matrix(xi).scale(&-F::one())
    }

    pub fn killing_form(&self, x: &[F], y: &[F]) -> F {
        self.killing.bilinear(x, y)
    }

    /// `x ↦ ⟨x, ·⟩`.
    pub fn flat(&self, x: &[F]) -> Vec<F> {
        self.killing.mul_vec(x)
    }

    /// Inverse of [`flat`](Self::flat).
    pub fn sharp(&self, xi: &[F]) -> Result<Vec<F>> {
        Ok(self.killing_inverse()?.mul_vec(xi))
    }

    /// `⟨ξ, η⟩` transported from the Killing form.
    pub fn dual_killing(&self, xi: &[F], eta: &[F]) -> Result<F> {
        Ok(self.killing_inverse()?.bilinear(xi, eta))
    }

    /// `g_ξ = {x : ad_x^* ξ = 0}`.
    pub fn centralizer_dual(&self, xi: &[F]) -> Result<Subspace<F>> {
        check_len(self.dim(), xi.len())?;
        Ok(Subspace::span(self.dim(), &self.coad_matrix(xi).nullspace()))
    }

    /// `g_x = {y : [x, y] = 0}`.
    pub fn centralizer(&self, x: &[F]) -> Result<Subspace<F>> {
        Ok(Subspace::span(self.dim(), &self.ad_matrix(x)?.nullspace()))
    }

    /// Elements commuting with every vector of `v`.
    pub fn centralizer_of(&self, v: &Subspace<F>) -> Subspace<F> {
        v.basis().iter().fold(Subspace::full(self.dim()), |acc, b| {
            acc.intersect(&Subspace::span(self.dim(), &self.ad_matrix(b).unwrap().nullspace()))
        })
    }

    /// `z(v) = v ∩ centralizer(v)`.
    pub fn center_of(&self, v: &Subspace<F>) -> Subspace<F> {
        v.intersect(&self.centralizer_of(v))
    }

    /// `[v, v]`.
    pub fn derived(&self, v: &Subspace<F>) -> Subspace<F> {
        let b = v.basis();
        let brackets: Vec<Vec<F>> = (0..b.len())
            .flat_map(|i| (i + 1..b.len()).map(move |j| (i, j)))
            .map(|(i, j)| self.br(&b[i], &b[j]))
            .collect();
        Subspace::span(self.dim(), &brackets)
    }

    /// `[g, x]`, the image of `ad_x`.
    pub fn image_of_ad(&self, x: &[F]) -> Result<Subspace<F>> {
        Ok(Subspace::span(self.dim(), &self.ad_matrix(x)?.column_vecs()))
    }

    pub fn is_subalgebra(&self, v: &Subspace<F>) -> bool {
        let b = v.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| v.contains(&self.br(&b[i], &b[j]))))
    }

    /// Semisimplicity of `x` via the squarefree part of the characteristic
    /// polynomial of `ad_x`.
    pub fn is_semisimple_element(&self, x: &[F]) -> Result<bool> {
        Ok(poly::is_semisimple(&self.ad_matrix(x)?))
    }

    pub fn jacobi_holds(&self) -> bool {
        self.jacobi_violation().is_none()
    }

    fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        let e = |i| scalar::unit_vec::<F>(n, i);
        for i in 0..n {
            for j in i + 1..n {
                let eij = self.br(&e(i), &e(j));
                for k in j + 1..n {
                    let a = self.br(&eij, &e(k));
                    let b = self.br(&self.br(&e(j), &e(k)), &e(i));
                    let c = self.br(&self.br(&e(k), &e(i)), &e(j));
                    if !scalar::is_zero_vec(&scalar::add_vec(&scalar::add_vec(&a, &b), &c)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i..n).all(|j| {
                let a = &self.constants[i * n + j];
                let b = &self.constants[j * n + i];
                a.len() == b.len()
                    && a.iter().all(|(k, c)| self.structure_constant(j, i, *k) == -c.clone())
            })
        })
    }

    /// `⟨[x,y],z⟩ + ⟨y,[x,z]⟩ = 0` on all basis triples.
    pub fn killing_invariant(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let ad = self.ad_matrix(&self.basis_vector(i)).unwrap();
            // adᵀ K + K ad = 0 is the matrix form of the identity.
            ad.transpose().mul(&self.killing).add(&self.killing.mul(&ad)).is_zero()
        })
    }

    pub fn killing_determinant(&self) -> F {
        self.killing.determinant()
    }

    fn compute_killing(&self) -> Matrix<F> {
        let n = self.dim();
        let ads: Vec<Matrix<F>> = (0..n)
            .map(|i| self.ad_matrix(&self.basis_vector(i)).unwrap())
            .collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = F::zero();
                for a in 0..n {
                    for b in 0..n {
                        let x = &ads[i][(a, b)];
                        if x.is_zero() {
                            continue;
                        }
                        let y = &ads[j][(b, a)];
                        if !y.is_zero() {
                            acc = acc + x.clone() * y.clone();
                        }
                    }
                }
                k[(i, j)] = acc.clone();
                k[(j, i)] = acc;
            }
        }
        k
    }

    fn realization_consistent(&self, rep: &MatrixRealization<F>) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let comm = rep.matrices[i].commutator(&rep.matrices[j]);
                comm == rep.to_matrix(&self.br(&self.basis_vector(i), &self.basis_vector(j)))
            })
        })
    }

    /// `g^n = g ⊕ ⋯ ⊕ g` with labels suffixed by the copy index.
    pub fn direct_sum_power(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("power must be positive".into()));
        }
        let d = self.dim();
        let big = n * d;
        let mut labels = Vec::with_capacity(big);
        for c in 0..n {
            labels.extend(self.labels.iter().map(|l| format!("{l}.{}", c + 1)));
        }
        let mut constants = vec![Vec::new(); big * big];
        for c in 0..n {
            for i in 0..d {
                for j in 0..d {
                    constants[(c * d + i) * big + c * d + j] = self.constants[i * d + j]
                        .iter()
                        .map(|(k, v)| (c * d + k, v.clone()))
                        .collect();
                }
            }
        }
        let rep = match &self.matrix_rep {
            Some(r) => Some(r.block_power(n, d)?),
            None => None,
        };
        Self::from_sparse(labels, n * self.rank, constants, None, rep)
    }

    /// Matrix of `x` in the stored realization.
    pub fn to_matrix(&self, x: &[F]) -> Result<Matrix<F>> {
        check_len(self.dim(), x.len())?;
        Ok(self.matrix_rep.as_ref().ok_or(Error::NoMatrixRep)?.to_matrix(x))
    }

    pub fn from_matrix(&self, m: &Matrix<F>) -> Result<Vec<F>> {
        self.matrix_rep.as_ref().ok_or(Error::NoMatrixRep)?.coordinates(m)
    }

    /// Matrix whose columns are `Ad_g e_j`.
    pub fn adjoint_matrix(&self, g: &GroupElement<F>) -> Result<Matrix<F>> {
        let rep = self.matrix_rep.as_ref().ok_or(Error::NoMatrixRep)?;
        check_len(rep.size(), g.size())?;
        let cols = rep
            .matrices()
            .iter()
            .map(|m| rep.coordinates(&g.matrix().mul(m).mul(g.inverse_matrix())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.dim(), &cols))
    }

    pub fn adjoint_group_action(&self, g: &GroupElement<F>, x: &[F]) -> Result<Vec<F>> {
        check_len(self.dim(), x.len())?;
        let rep = self.matrix_rep.as_ref().ok_or(Error::NoMatrixRep)?;
        let m = rep.to_matrix(x);
        rep.coordinates(&g.matrix().mul(&m).mul(g.inverse_matrix()))
    }

    /// `Ad_g^* ξ = ξ ∘ Ad_{g⁻¹}`.
    pub fn coadjoint_group_action(&self, g: &GroupElement<F>, xi: &[F]) -> Result<Vec<F>> {
        check_len(self.dim(), xi.len())?;
        Ok(self.coadjoint_matrix(g)?.mul_vec(xi))
    }

    /// Matrix of `ξ ↦ Ad_g^* ξ`.
    pub fn coadjoint_matrix(&self, g: &GroupElement<F>) -> Result<Matrix<F>> {
        Ok(self.adjoint_matrix(&g.inverse())?.transpose())
    }
}

impl<F: Scalar> fmt::Debug for LieAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("dim", &self.dim())
            .field("rank", &self.rank)
            .field("labels", &self.labels)
            .field("root_data", &self.root_data.as_ref().map(|r| r.cartan_type))
            .field("matrix_rep", &self.matrix_rep.as_ref().map(|r| r.size))
            .finish()
    }
}
