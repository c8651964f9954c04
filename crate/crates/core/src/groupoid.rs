//! The cotangent groupoid `T*G = G × g*` in left trivialization.
//!
//! Tangent vectors at `(g, ξ)` are pairs `(u, ζ) ∈ g × g*` and are stored as
//! concatenated coordinate vectors of length `2 dim g`. The canonical form is
//!
//! `Ω((u₁,ζ₁),(u₂,ζ₂)) = −ζ₂(u₁) + ζ₁(u₂) − ξ([u₁,u₂])`,
//!
//! with source `s(g, ξ) = Ad_g^* ξ` and target `t(g, ξ) = ξ`.

use crate::error::{check_len, Error, Result};
use crate::lie::{GroupElement, LieAlgebra};
use crate::linalg::{gram, Matrix, Subspace};
use crate::poisson::{AlgebroidFiber, PointedSubmanifoldModel, PoissonPointModel};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct CotangentPoint<F> {
    /// `None` stands for the identity.
    pub g: Option<GroupElement<F>>,
    pub xi: Vec<F>,
}

impl<F: Scalar> CotangentPoint<F> {
    pub fn at_identity(xi: Vec<F>) -> Self {
        CotangentPoint { g: None, xi }
    }

    pub fn new(g: GroupElement<F>, xi: Vec<F>) -> Self {
        CotangentPoint { g: Some(g), xi }
    }

    pub fn is_identity(&self) -> bool {
        self.g.as_ref().is_none_or(GroupElement::is_identity)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CotangentTangent<F> {
    pub u: Vec<F>,
    pub zeta: Vec<F>,
}

impl<F: Scalar> CotangentTangent<F> {
    pub fn new(u: Vec<F>, zeta: Vec<F>) -> Self {
        CotangentTangent { u, zeta }
    }

    pub fn to_vec(&self) -> Vec<F> {
        scalar::concat(&self.u, &self.zeta)
    }

    pub fn from_slice(v: &[F]) -> Self {
        let d = v.len() / 2;
        CotangentTangent {
            u: v[..d].to_vec(),
            zeta: v[d..].to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberSource {
    /// `H_ξ × (ξ + h°)`.
    MarsdenWeinstein,
    /// `{(g, ξ) : Ad_g^* ξ = ξ}` over an orbit.
    CoadjointOrbit,
    /// `[G_ξ, G_ξ] × S` over a chamber face.
    ChamberFace,
    /// `ds⁻¹(T) ∩ dt⁻¹(T) ∩ (T)^Ω` at a unit.
    UnitIntersection,
}

/// Tangent space to a stabilizer subgroupoid at a point of `T*G`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupoidTangentFiber<F> {
    pub base: CotangentPoint<F>,
    pub basis: Subspace<F>,
    pub source: FiberSource,
    /// Pairwise vanishing of `Ω` on the basis, computed.
    pub isotropic: bool,
}

impl<F: Scalar> GroupoidTangentFiber<F> {
    fn new(
        g: &LieAlgebra<F>,
        base: CotangentPoint<F>,
        basis: Subspace<F>,
        source: FiberSource,
    ) -> Self {
        let isotropic = is_isotropic(g, &base.xi, &basis);
        GroupoidTangentFiber {
            base,
            basis,
            source,
            isotropic,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn tangents(&self) -> Vec<CotangentTangent<F>> {
        self.basis
            .basis()
            .iter()
            .map(|v| CotangentTangent::from_slice(v))
            .collect()
    }
}

pub fn omega_eval<F: Scalar>(
    g: &LieAlgebra<F>,
    xi: &[F],
    t1: &CotangentTangent<F>,
    t2: &CotangentTangent<F>,
) -> Result<F> {
    let d = g.dim();
    for v in [xi, &t1.u, &t1.zeta, &t2.u, &t2.zeta] {
        check_len(d, v.len())?;
    }
    Ok(scalar::dot(&t1.zeta, &t2.u)
        - scalar::dot(&t2.zeta, &t1.u)
        - scalar::dot(xi, &g.br(&t1.u, &t2.u)))
}

/// Gram matrix of `Ω` at `ξ` on the standard basis of `g × g*`.
pub fn omega_matrix<F: Scalar>(g: &LieAlgebra<F>, xi: &[F]) -> Matrix<F> {
    let d = g.dim();
    let mut w = Matrix::zeros(2 * d, 2 * d);
    // −ξ([e_i, e_j]) is the (j, i) entry of the coadjoint matrix.
    let c = g.coad_matrix(xi);
    for i in 0..d {
        for j in 0..d {
            w[(i, j)] = c[(j, i)].clone();
        }
        w[(i, d + i)] = -F::one();
        w[(d + i, i)] = F::one();
    }
    w
}

pub fn omega_rank<F: Scalar>(g: &LieAlgebra<F>, xi: &[F]) -> Result<usize> {
    check_len(g.dim(), xi.len())?;
    Ok(omega_matrix(g, xi).rank())
}

pub fn is_isotropic<F: Scalar>(g: &LieAlgebra<F>, xi: &[F], sub: &Subspace<F>) -> bool {
    let w = omega_matrix(g, xi);
    gram(sub.basis(), |a, b| w.bilinear(a, b)).is_zero()
}

/// Matrix of `ds : (u, ζ) ↦ Ad_g^*(ad_u^* ξ + ζ)`.
pub fn ds_matrix<F: Scalar>(g: &LieAlgebra<F>, p: &CotangentPoint<F>) -> Result<Matrix<F>> {
    let d = g.dim();
    check_len(d, p.xi.len())?;
    let c = g.coad_matrix(&p.xi);
    let mut m = Matrix::zeros(d, 2 * d);
    for i in 0..d {
        for j in 0..d {
            m[(i, j)] = c[(i, j)].clone();
        }
        m[(i, d + i)] = F::one();
    }
    match &p.g {
        Some(elt) if !elt.is_identity() => Ok(g.coadjoint_matrix(elt)?.mul(&m)),
        _ => Ok(m),
    }
}

/// Matrix of `dt : (u, ζ) ↦ ζ`.
pub fn dt_matrix<F: Scalar>(d: usize) -> Matrix<F> {
    let mut m = Matrix::zeros(d, 2 * d);
    for i in 0..d {
        m[(i, d + i)] = F::one();
    }
    m
}

pub fn source_target_differentials<F: Scalar>(
    g: &LieAlgebra<F>,
    p: &CotangentPoint<F>,
    t: &CotangentTangent<F>,
) -> Result<(Vec<F>, Vec<F>)> {
    check_len(g.dim(), t.u.len())?;
    check_len(g.dim(), t.zeta.len())?;
    let v = t.to_vec();
    Ok((ds_matrix(g, p)?.mul_vec(&v), t.zeta.clone()))
}

/// `{(0, ζ) : ζ ∈ T}`, the tangent space of the unit section over `T`.
fn units_over<F: Scalar>(d: usize, tangent: &Subspace<F>) -> Subspace<F> {
    let vs: Vec<Vec<F>> = tangent
        .basis()
        .iter()
        .map(|z| scalar::concat(&scalar::zero_vec(d), z))
        .collect();
    Subspace::span(2 * d, &vs)
}

/// `ds⁻¹(T) ∩ dt⁻¹(T) ∩ {(0, ζ) : ζ ∈ T}^Ω` at the unit over `ξ`.
pub fn unit_intersection_fiber<F: Scalar>(
    g: &LieAlgebra<F>,
    xi: &[F],
    tangent: &Subspace<F>,
) -> Result<GroupoidTangentFiber<F>> {
    let d = g.dim();
    check_len(d, tangent.ambient_dim())?;
    let base = CotangentPoint::at_identity(xi.to_vec());
    let ds = ds_matrix(g, &base)?;
    let dt = dt_matrix::<F>(d);
    let w = omega_matrix(g, xi);
    let units = units_over(d, tangent);
    let omega_perp = units.image(&w.transpose()).annihilator();
    let basis = tangent
        .preimage(&ds)
        .intersect(&tangent.preimage(&dt))
        .intersect(&omega_perp);
    Ok(GroupoidTangentFiber::new(g, base, basis, FiberSource::UnitIntersection))
}

/// Fiber of `H_ξ × (ξ + h°)` at `(1, ξ + η)`: `h_ξ × {0} ⊕ {0} × h°`, where
/// `h_ξ = {x ∈ h : (ad_x^* ξ)|_h = 0}`.
pub fn mw_fiber<F: Scalar>(
    g: &LieAlgebra<F>,
    h: &Subspace<F>,
    xi: &[F],
    eta: &[F],
) -> Result<GroupoidTangentFiber<F>> {
    let d = g.dim();
    check_len(d, h.ambient_dim())?;
    check_len(d, xi.len())?;
    check_len(d, eta.len())?;
    if !g.is_subalgebra(h) {
        return Err(Error::NotASubalgebra);
    }
    let h_ann = h.annihilator();
    if !h_ann.contains(eta) {
        return Err(Error::EtaNotInAnnihilator);
    }
    let h_xi = mw_stabilizer(g, h, xi);
    let mut vs: Vec<Vec<F>> = h_xi
        .basis()
        .iter()
        .map(|x| scalar::concat(x, &scalar::zero_vec(d)))
        .collect();
    vs.extend(units_over(d, &h_ann).basis().iter().cloned());
    let base = CotangentPoint::at_identity(scalar::add_vec(xi, eta));
    Ok(GroupoidTangentFiber::new(
        g,
        base,
        Subspace::span(2 * d, &vs),
        FiberSource::MarsdenWeinstein,
    ))
}

/// `{x ∈ h : (ad_x^* ξ)|_h = 0}`.
pub fn mw_stabilizer<F: Scalar>(g: &LieAlgebra<F>, h: &Subspace<F>, xi: &[F]) -> Subspace<F> {
    let d = g.dim();
    let b = h.basis();
    if b.is_empty() {
        return Subspace::zero(d);
    }
    // Coefficients c with Σ c_i (ad_{b_i}^* ξ)(b_j) = 0 for all j.
    let rows: Vec<Vec<F>> = b
        .iter()
        .map(|bj| {
            b.iter()
                .map(|bi| scalar::dot(&g.ad_star(bi, xi).unwrap(), bj))
                .collect()
        })
        .collect();
    let sys = Matrix::from_rows(b.len(), &rows);
    let vs: Vec<Vec<F>> = sys
        .nullspace()
        .iter()
        .map(|c| scalar::combine(c, b, d))
        .collect();
    Subspace::span(d, &vs)
}

/// Fiber of `{(g, ξ) : Ad_g^* ξ = ξ}` at `(g, ξ)`:
/// `{(u, ad_v^* ξ) : ad_u^* ξ = (Ad_{g⁻¹}^* − 1) ad_v^* ξ}`.
pub fn coadjoint_orbit_fiber<F: Scalar>(
    g: &LieAlgebra<F>,
    p: &CotangentPoint<F>,
) -> Result<GroupoidTangentFiber<F>> {
    let d = g.dim();
    check_len(d, p.xi.len())?;
    let c = g.coad_matrix(&p.xi);
    let shift = match &p.g {
        Some(elt) if !elt.is_identity() => {
            if g.coadjoint_group_action(elt, &p.xi)? != p.xi {
                return Err(Error::BaseNotInSubgroupoid);
            }
            g.coadjoint_matrix(&elt.inverse())?.sub(&Matrix::identity(d))
        }
        _ => Matrix::zeros(d, d),
    };
    // [C | −(A − 1) C] (u, v) = 0
    let right = shift.mul(&c).scale(&-F::one());
    let mut sys = Matrix::zeros(d, 2 * d);
    for i in 0..d {
        for j in 0..d {
            sys[(i, j)] = c[(i, j)].clone();
            sys[(i, d + j)] = right[(i, j)].clone();
        }
    }
    let vs: Vec<Vec<F>> = sys
        .nullspace()
        .iter()
        .map(|uv| scalar::concat(&uv[..d], &c.mul_vec(&uv[d..])))
        .collect();
    Ok(GroupoidTangentFiber::new(
        g,
        p.clone(),
        Subspace::span(2 * d, &vs),
        FiberSource::CoadjointOrbit,
    ))
}

/// Fiber of `[G_ξ, G_ξ] × S` at `(1, ξ)`: `[g_ξ, g_ξ] × {0} ⊕ {0} × T_ξS`.
pub fn chamber_face_fiber<F: Scalar>(
    g: &LieAlgebra<F>,
    xi: &[F],
    tangent: &Subspace<F>,
) -> Result<GroupoidTangentFiber<F>> {
    let d = g.dim();
    check_len(d, tangent.ambient_dim())?;
    let derived = g.derived(&g.centralizer_dual(xi)?);
    let mut vs: Vec<Vec<F>> = derived
        .basis()
        .iter()
        .map(|x| scalar::concat(x, &scalar::zero_vec(d)))
        .collect();
    vs.extend(units_over(d, tangent).basis().iter().cloned());
    Ok(GroupoidTangentFiber::new(
        g,
        CotangentPoint::at_identity(xi.to_vec()),
        Subspace::span(2 * d, &vs),
        FiberSource::ChamberFace,
    ))
}

/// The Lie functor sends `(x, ξ) ↦ (−x, ξ)`: the `ker dt` part of a fiber at a
/// unit, negated, must be the algebroid fiber.
pub fn lie_functor_check<F: Scalar>(
    fiber: &GroupoidTangentFiber<F>,
    expected: &AlgebroidFiber<F>,
) -> Result<bool> {
    if !fiber.base.is_identity() {
        return Err(Error::InvalidArgument("Lie functor check needs a unit".into()));
    }
    let d = fiber.basis.ambient_dim() / 2;
    check_len(d, expected.fiber.ambient_dim())?;
    let horizontal: Vec<Vec<F>> = (0..d).map(|i| scalar::unit_vec(2 * d, i)).collect();
    let ker_dt = fiber.basis.intersect(&Subspace::span(2 * d, &horizontal));
    let negated: Vec<Vec<F>> = ker_dt
        .basis()
        .iter()
        .map(|v| scalar::neg_vec(&v[..d]))
        .collect();
    Ok(Subspace::span(d, &negated) == expected.fiber)
}

/// `{0} × g*` is Lagrangian for `Ω` at every `ξ`.
pub fn identity_section_lagrangian_check<F: Scalar>(g: &LieAlgebra<F>, xi: &[F]) -> Result<bool> {
    let d = g.dim();
    check_len(d, xi.len())?;
    let units = units_over(d, &Subspace::full(d));
    Ok(is_isotropic(g, xi, &units) && 2 * units.dim() == 2 * d)
}

/// `Ad_g(h_ξ) = h_{Ad_g^* ξ}` for an invariant submanifold.
pub fn normality_infinitesimal_check<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
    elt: &GroupElement<F>,
    xi: &[F],
) -> Result<bool> {
    let g = p
        .algebra()
        .ok_or_else(|| Error::InvalidArgument("normality needs a KKS model".into()))?;
    if !s.is_invariant() {
        return Err(Error::KindNotInvariant(s.kind_name().into()));
    }
    let here = s.tangent_basis(xi)?.annihilator().intersect(&g.centralizer_dual(xi)?);
    let (eta, tangent) = s.tangent_at_translate(xi, elt)?;
    let there = tangent.annihilator().intersect(&g.centralizer_dual(&eta)?);
    Ok(here.image(&g.adjoint_matrix(elt)?) == there)
}
