//! Pointwise Poisson linear algebra: bivectors, submanifold tangent models
//! and stabilizer subalgebroid fibers.

mod checks;
mod submanifold;

use std::sync::Arc;

use crate::error::{check_len, Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub use checks::{
    algebroid_fiber, coisotropic_check, moment_transversality_check, poisson_transversal_check,
    pre_poisson_sample_check, stable_at, stable_check, stabilizer_subalgebra, AlgebroidFiber,
    PrePoissonWitness, StabilizerSubalgebra,
};
pub use submanifold::{PointedSubmanifoldModel, SubmanifoldKind};

#[derive(Clone)]
pub enum PoissonKind<F> {
    /// Linear Poisson structure on `g*`, `σ_ξ(x) = −ad_x^* ξ`.
    Kks(Arc<LieAlgebra<F>>),
    /// A constant bivector on `F^n`.
    Constant(Matrix<F>),
}

/// A Poisson structure evaluated at points. `bivector_at(ξ)` is the matrix
/// of `σ_ξ : T*_ξX → T_ξX` in the standard bases.
#[derive(Clone)]
pub struct PoissonPointModel<F> {
    kind: PoissonKind<F>,
}

impl<F: Scalar> PoissonPointModel<F> {
    pub fn kks(algebra: Arc<LieAlgebra<F>>) -> Self {
        PoissonPointModel {
            kind: PoissonKind::Kks(algebra),
        }
    }

    pub fn constant(sigma: Matrix<F>) -> Result<Self> {
        if !sigma.is_antisymmetric() {
            return Err(Error::InvalidArgument("bivector must be antisymmetric".into()));
        }
        Ok(PoissonPointModel {
            kind: PoissonKind::Constant(sigma),
        })
    }

    /// The zero Poisson structure on `F^n`.
    pub fn trivial(n: usize) -> Self {
        PoissonPointModel {
            kind: PoissonKind::Constant(Matrix::zeros(n, n)),
        }
    }

    /// Poisson structure of a constant symplectic form `ω(a, b) = aᵀ W b`:
    /// `σ` inverts `v ↦ ω(v, ·)`, so `ω(σ(α), ·) = α`.
    pub fn from_symplectic(omega: &Matrix<F>) -> Result<Self> {
        if !omega.is_antisymmetric() {
            return Err(Error::InvalidArgument("symplectic form must be antisymmetric".into()));
        }
        Self::constant(omega.transpose().inverse()?)
    }

    pub fn kind(&self) -> &PoissonKind<F> {
        &self.kind
    }

    pub fn algebra(&self) -> Option<&Arc<LieAlgebra<F>>> {
        match &self.kind {
            PoissonKind::Kks(g) => Some(g),
            PoissonKind::Constant(_) => None,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match &self.kind {
            PoissonKind::Kks(g) => g.dim(),
            PoissonKind::Constant(m) => m.rows(),
        }
    }

    pub fn bivector_at(&self, point: &[F]) -> Result<Matrix<F>> {
        check_len(self.ambient_dim(), point.len())?;
        Ok(match &self.kind {
            PoissonKind::Kks(g) => g.kks_matrix(point),
            PoissonKind::Constant(m) => m.clone(),
        })
    }
}
