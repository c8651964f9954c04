//! The map of two-term complexes deciding whether the zero 2-form on `S` is
//! a Lagrangian structure on `[S/H] → [X/G]`, evaluated at one point.
//!
//! ```text
//! L ──α──▶ T*X ⊕ TS ──β──▶ TX
//! │            │γ           │δ
//! 0 ──────▶   T*S  ───ε──▶  L*
//! ```
//!
//! Coordinates: `T*X` and `TX` use the standard bases of `F^n`, `TS` and `T*S`
//! use a fixed basis `t₁..t_k` of `T_ξS` and its dual, and `L`, `L*` use the
//! given basis `λ₁..λ_ℓ` of `L` and its dual.

use crate::error::{check_len, Error, Result};
use crate::linalg::{coordinates_in, Matrix, Subspace};
use crate::poisson::{algebroid_fiber, PointedSubmanifoldModel, PoissonPointModel};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug)]
pub struct TwoTermComplexMap<F> {
    pub point: Vec<F>,
    pub l: Subspace<F>,
    pub tangent: Subspace<F>,
    /// `λ ↦ (λ, σ(λ))`.
    pub alpha: Matrix<F>,
    /// `(a, τ) ↦ σ(a) − τ`.
    pub beta: Matrix<F>,
    /// `(a, τ) ↦ a|_TS`.
    pub gamma: Matrix<F>,
    /// `v ↦ (λ_j(v))_j`.
    pub delta: Matrix<F>,
    /// Minus the dual of the anchor `σ_L : L → TS`.
    pub epsilon: Matrix<F>,
    /// `L_S` at the point, computed from `σ` and `T_ξS` alone.
    pub algebroid_fiber: Subspace<F>,
}

/// Builds the diagram for a candidate `L ⊆ T*_ξX` with `L ⊆ (T_ξS)°` and
/// `σ_ξ(L) ⊆ T_ξS`.
pub fn build_complex<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
    xi: &[F],
    candidate: &[Vec<F>],
) -> Result<TwoTermComplexMap<F>> {
    let n = p.ambient_dim();
    check_len(n, s.ambient_dim())?;
    for v in candidate {
        check_len(n, v.len())?;
    }
    let sigma = p.bivector_at(xi)?;
    let tangent = s.tangent_basis(xi)?;
    let l = Subspace::span(n, candidate);
    if !l.is_subspace_of(&tangent.annihilator()) {
        return Err(Error::NotACandidate("L is not contained in (T_ξS)°".into()));
    }
    let t = tangent.basis();
    let (k, ell) = (t.len(), l.dim());
    let mut anchor = Vec::with_capacity(ell);
    for lambda in l.basis() {
        let c = coordinates_in(t, &sigma.mul_vec(lambda))
            .ok_or_else(|| Error::NotACandidate("σ(L) is not contained in T_ξS".into()))?;
        anchor.push(c);
    }

    let alpha_cols: Vec<Vec<F>> = l
        .basis()
        .iter()
        .zip(&anchor)
        .map(|(lambda, c)| scalar::concat(lambda, c))
        .collect();
    let alpha = Matrix::from_columns(n + k, &alpha_cols);

    let mut beta_cols = sigma.column_vecs();
    beta_cols.extend(t.iter().map(|v| scalar::neg_vec(v)));
    let beta = Matrix::from_columns(n, &beta_cols);

    let gamma_rows: Vec<Vec<F>> = t
        .iter()
        .map(|v| scalar::concat(v, &scalar::zero_vec(k)))
        .collect();
    let gamma = Matrix::from_rows(n + k, &gamma_rows);

    let delta = Matrix::from_rows(n, l.basis());

    let epsilon_rows: Vec<Vec<F>> = anchor.iter().map(|c| scalar::neg_vec(c)).collect();
    let epsilon = Matrix::from_rows(k, &epsilon_rows);

    Ok(TwoTermComplexMap {
        point: xi.to_vec(),
        algebroid_fiber: algebroid_fiber(p, s, xi)?.fiber,
        l,
        tangent,
        alpha,
        beta,
        gamma,
        delta,
        epsilon,
    })
}

impl<F: Scalar> TwoTermComplexMap<F> {
    pub fn ambient_dim(&self) -> usize {
        self.beta.rows()
    }

    /// `β∘α = 0`.
    pub fn is_complex(&self) -> bool {
        self.l.is_zero() || self.beta.mul(&self.alpha).is_zero()
    }

    /// `γ∘α = 0` and `δ∘β = ε∘γ`.
    pub fn commutes(&self) -> bool {
        let left = self.l.is_zero() || self.gamma.mul(&self.alpha).is_zero();
        let right = self.tangent.is_zero()
            || self.l.is_zero()
            || self.delta.mul(&self.beta) == self.epsilon.mul(&self.gamma);
        left && right
    }
}

/// Dimensions of the cohomology groups and of the induced maps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CohomologyDims {
    /// `ker α`.
    pub top_minus1: usize,
    /// `ker β / im α ≅ σ⁻¹(TS)/L`.
    pub top_0: usize,
    /// `TX / im β`.
    pub top_1: usize,
    /// `ker ε = Ann(σ(L))`.
    pub bottom_0: usize,
    /// `L* / im ε`.
    pub bottom_1: usize,
    pub rank_phi: usize,
    pub rank_psi: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LagrangianVerdict {
    pub phi_iso: bool,
    pub psi_iso: bool,
    pub ker_phi_dim: usize,
    /// `dim(σ⁻¹(TS) ∩ TS°) − dim L`.
    pub expected_ker_phi_dim: usize,
    pub candidate_is_fiber: bool,
    pub details: CohomologyDims,
}

impl LagrangianVerdict {
    pub fn is_lagrangian(&self) -> bool {
        self.phi_iso && self.psi_iso
    }

    /// The verdict agrees with `L = L_S` and the kernel has the predicted size.
    pub fn consistent(&self) -> bool {
        self.is_lagrangian() == self.candidate_is_fiber
            && self.ker_phi_dim == self.expected_ker_phi_dim
    }
}

fn columns<F: Scalar>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::span(m.rows(), &m.column_vecs())
}

fn kernel<F: Scalar>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::span(m.cols(), &m.nullspace())
}

/// Rank of `A/B → C/D` induced by `f`: `dim(f(A) + D) − dim D`.
fn induced_rank<F: Scalar>(f: &Matrix<F>, a: &Subspace<F>, d: &Subspace<F>) -> usize {
    a.image(f).sum(d).dim() - d.dim()
}

pub fn lagrangian_criterion<F: Scalar>(cmap: &TwoTermComplexMap<F>) -> LagrangianVerdict {
    let n = cmap.ambient_dim();
    let k = cmap.tangent.dim();
    let ell = cmap.l.dim();

    let ker_alpha = ell - cmap.alpha.rank();
    let ker_beta = kernel(&cmap.beta);
    let im_alpha = if ell == 0 {
        Subspace::zero(n + k)
    } else {
        columns(&cmap.alpha)
    };
    let im_beta = columns(&cmap.beta);
    let ker_eps = if ell == 0 {
        Subspace::full(k)
    } else {
        kernel(&cmap.epsilon)
    };
    let im_eps = if k == 0 || ell == 0 {
        Subspace::zero(ell)
    } else {
        columns(&cmap.epsilon)
    };

    let top_0 = ker_beta.dim() - im_alpha.dim();
    let top_1 = n - im_beta.dim();
    let bottom_0 = ker_eps.dim();
    let bottom_1 = ell - im_eps.dim();

    let rank_phi = if k == 0 {
        0
    } else {
        induced_rank(&cmap.gamma, &ker_beta, &Subspace::zero(k))
    };
    let rank_psi = if ell == 0 {
        0
    } else {
        induced_rank(&cmap.delta, &Subspace::full(n), &im_eps)
    };

    let ker_phi_dim = top_0 - rank_phi;
    LagrangianVerdict {
        phi_iso: ker_alpha == 0 && ker_phi_dim == 0 && rank_phi == bottom_0,
        psi_iso: rank_psi == top_1 && rank_psi == bottom_1,
        ker_phi_dim,
        expected_ker_phi_dim: cmap.algebroid_fiber.dim() - ell,
        candidate_is_fiber: cmap.l == cmap.algebroid_fiber,
        details: CohomologyDims {
            top_minus1: ker_alpha,
            top_0,
            top_1,
            bottom_0,
            bottom_1,
            rank_phi,
            rank_psi,
        },
    }
}
