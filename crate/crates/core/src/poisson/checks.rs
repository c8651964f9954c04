use super::{PointedSubmanifoldModel, PoissonPointModel};
use crate::error::{check_len, Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// The fiber `(L_S)_ξ = σ_ξ⁻¹(T_ξS) ∩ (T_ξS)°` at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebroidFiber<F> {
    pub base_point: Vec<F>,
    pub fiber: Subspace<F>,
    /// Whether the fiber lies in `ker σ_ξ`.
    pub contained_in_centralizer: bool,
}

impl<F: Scalar> AlgebroidFiber<F> {
    pub fn rank(&self) -> usize {
        self.fiber.dim()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        self.fiber.basis()
    }
}

pub fn algebroid_fiber<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
    xi: &[F],
) -> Result<AlgebroidFiber<F>> {
    check_len(p.ambient_dim(), s.ambient_dim())?;
    let tangent = s.tangent_basis(xi)?;
    let sigma = p.bivector_at(xi)?;
    Ok(fiber_from_tangent(&sigma, &tangent, xi))
}

pub(crate) fn fiber_from_tangent<F: Scalar>(
    sigma: &Matrix<F>,
    tangent: &Subspace<F>,
    xi: &[F],
) -> AlgebroidFiber<F> {
    let fiber = tangent.annihilator().intersect(&tangent.preimage(sigma));
    let kernel = Subspace::span(sigma.cols(), &sigma.nullspace());
    AlgebroidFiber {
        base_point: xi.to_vec(),
        contained_in_centralizer: fiber.is_subspace_of(&kernel),
        fiber,
    }
}

/// Fiber ranks over the sample points. A constant rank here is evidence
/// gathered at finitely many points, not a proof over `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrePoissonWitness {
    pub ranks: Vec<usize>,
    pub constant_rank: bool,
}

pub fn pre_poisson_sample_check<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
) -> Result<PrePoissonWitness> {
    if s.samples().is_empty() {
        return Err(Error::InvalidArgument("model has no sample points".into()));
    }
    let ranks = s
        .samples()
        .iter()
        .map(|xi| algebroid_fiber(p, s, xi).map(|f| f.rank()))
        .collect::<Result<Vec<_>>>()?;
    let constant_rank = ranks.windows(2).all(|w| w[0] == w[1]);
    Ok(PrePoissonWitness { ranks, constant_rank })
}

pub fn stable_at<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
    xi: &[F],
) -> Result<bool> {
    Ok(algebroid_fiber(p, s, xi)?.contained_in_centralizer)
}

/// Stability at every sample point.
pub fn stable_check<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
) -> Result<Vec<bool>> {
    s.samples().iter().map(|xi| stable_at(p, s, xi)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilizerSubalgebra<F> {
    /// `h_ξ = (T_ξS)° ∩ g_ξ`.
    pub basis: Subspace<F>,
    pub bracket_closed: bool,
    /// Whether `h_ξ` coincides with the algebroid fiber.
    pub matches_fiber: bool,
}

pub fn stabilizer_subalgebra<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
    xi: &[F],
) -> Result<StabilizerSubalgebra<F>> {
    let g = p
        .algebra()
        .ok_or_else(|| Error::InvalidArgument("stabilizer subalgebras need a KKS model".into()))?;
    let fiber = algebroid_fiber(p, s, xi)?;
    if !fiber.contained_in_centralizer {
        return Err(Error::NotStable);
    }
    let tangent = s.tangent_basis(xi)?;
    let h = tangent.annihilator().intersect(&g.centralizer_dual(xi)?);
    Ok(StabilizerSubalgebra {
        bracket_closed: g.is_subalgebra(&h),
        matches_fiber: h == fiber.fiber,
        basis: h,
    })
}

/// `T_ξS ∩ σ_ξ((T_ξS)°) = 0` and the dimensions fill the ambient space.
pub fn poisson_transversal_check<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
    xi: &[F],
) -> Result<bool> {
    let tangent = s.tangent_basis(xi)?;
    let sigma = p.bivector_at(xi)?;
    let image = tangent.annihilator().image(&sigma);
    Ok(tangent.intersect(&image).is_zero() && tangent.dim() + image.dim() == p.ambient_dim())
}

/// `W^ω ⊆ W` for a nondegenerate constant form `ω(a, b) = aᵀ Ω b`.
pub fn coisotropic_check<F: Scalar>(omega: &Matrix<F>, w: &Subspace<F>) -> Result<bool> {
    check_len(omega.rows(), w.ambient_dim())?;
    if omega.determinant().is_zero() {
        return Err(Error::NotInvertible);
    }
    Ok(form_orthogonal(omega, w).is_subspace_of(w))
}

/// `{b : aᵀ M b = 0 for all a ∈ W}`.
pub(crate) fn form_orthogonal<F: Scalar>(m: &Matrix<F>, w: &Subspace<F>) -> Subspace<F> {
    w.image(&m.transpose()).annihilator()
}

/// `T_ξS + image = ambient`.
pub fn moment_transversality_check<F: Scalar>(
    image: &[Vec<F>],
    s: &PointedSubmanifoldModel<F>,
    xi: &[F],
) -> Result<bool> {
    let tangent = s.tangent_basis(xi)?;
    for v in image {
        check_len(s.ambient_dim(), v.len())?;
    }
    let total = tangent.sum(&Subspace::span(s.ambient_dim(), image));
    Ok(total.dim() == s.ambient_dim())
}
