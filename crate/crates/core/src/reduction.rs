//! Linear models of reduced spaces at a point.

use crate::error::{check_len, Error, Result};
use crate::groupoid::{
    dt_matrix, normality_infinitesimal_check, omega_eval, omega_matrix, CotangentPoint,
    CotangentTangent,
};
use crate::lie::{GroupElement, LieAlgebra};
use crate::linalg::{complement_within, coordinates_in, gram, Matrix, Subspace};
use crate::poisson::{
    algebroid_fiber, stabilizer_subalgebra, PointedSubmanifoldModel, PoissonPointModel,
};
use crate::scalar::{self, Scalar};

fn kks_algebra<F: Scalar>(p: &PoissonPointModel<F>) -> Result<&LieAlgebra<F>> {
    p.algebra()
        .map(|g| g.as_ref())
        .ok_or_else(|| Error::InvalidArgument("reduction models need a KKS model".into()))
}

/// Tangent to the `H`-orbit through `(g, ξ)` in `G × S`:
/// `{(−x, 0) : x ∈ h_ξ}`. In left trivialization right translation by
/// `exp(−tx)` has velocity `−x` at every `g`, so no conjugation appears.
pub fn orbit_tangent_in_universal<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
    point: &CotangentPoint<F>,
) -> Result<Subspace<F>> {
    let d = kks_algebra(p)?.dim();
    let h = stabilizer_subalgebra(p, s, &point.xi)?;
    let vs: Vec<Vec<F>> = h
        .basis
        .basis()
        .iter()
        .map(|x| scalar::concat(&scalar::neg_vec(x), &scalar::zero_vec(d)))
        .collect();
    Ok(Subspace::span(2 * d, &vs))
}

/// `T_pN / (T_pN ∩ T_pN^Ω)` with the form induced by `Ω`.
#[derive(Clone, Debug)]
pub struct ReducedSpaceModel<F> {
    pub base: CotangentPoint<F>,
    pub n_tangent: Subspace<F>,
    pub kernel: Subspace<F>,
    /// Representatives in `T_pN` of a basis of the quotient.
    pub complement: Vec<Vec<F>>,
    pub quotient_dim: usize,
    pub reduced_form: Matrix<F>,
    omega: Matrix<F>,
}

impl<F: Scalar> ReducedSpaceModel<F> {
    /// Builds the quotient of `n_tangent` by its `Ω`-radical.
    pub fn new(g: &LieAlgebra<F>, base: CotangentPoint<F>, n_tangent: Subspace<F>) -> Self {
        let omega = omega_matrix(g, &base.xi);
        let perp = n_tangent.image(&omega.transpose()).annihilator();
        let kernel = n_tangent.intersect(&perp);
        let complement = complement_within(kernel.basis(), n_tangent.basis());
        let reduced_form = gram(&complement, |a, b| omega.bilinear(a, b));
        ReducedSpaceModel {
            base,
            quotient_dim: complement.len(),
            n_tangent,
            kernel,
            complement,
            reduced_form,
            omega,
        }
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.reduced_form.rank() == self.quotient_dim
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.reduced_form.is_antisymmetric()
    }

    /// `Ω(k, n) = 0` for every kernel vector `k` and every `n ∈ T_pN`.
    pub fn form_descends(&self) -> bool {
        self.kernel.basis().iter().all(|k| {
            self.n_tangent
                .basis()
                .iter()
                .all(|n| self.omega.bilinear(k, n).is_zero())
        })
    }

    /// Coordinates of the class of `v ∈ T_pN` in the quotient basis.
    pub fn quotient_coordinates(&self, v: &[F]) -> Result<Vec<F>> {
        let mut basis = self.complement.clone();
        basis.extend(self.kernel.basis().iter().cloned());
        let c = coordinates_in(&basis, v)
            .ok_or_else(|| Error::LiftNotValid("vector is not tangent to N".into()))?;
        Ok(c[..self.quotient_dim].to_vec())
    }

    /// The reduced form evaluated on the classes of `a` and `b`.
    pub fn eval(&self, a: &[F], b: &[F]) -> Result<F> {
        let ca = self.quotient_coordinates(a)?;
        let cb = self.quotient_coordinates(b)?;
        Ok(self.reduced_form.bilinear(&ca, &cb))
    }
}

#[derive(Clone, Debug)]
pub struct KernelIdentity<F> {
    /// `T_pN ∩ T_pN^Ω` equals the `H`-orbit tangent.
    pub holds: bool,
    pub orbit_tangent: Subspace<F>,
    pub model: ReducedSpaceModel<F>,
}

/// `T_p(H·p) = T_pN ∩ T_pN^Ω` for `N = G × S`, with `T_pN = g × T_ξS`.
pub fn kernel_identity_check<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
    point: &CotangentPoint<F>,
) -> Result<KernelIdentity<F>> {
    let g = kks_algebra(p)?;
    let d = g.dim();
    let tangent = s.tangent_basis(&point.xi)?;
    let mut vs: Vec<Vec<F>> = (0..d).map(|i| scalar::unit_vec(2 * d, i)).collect();
    vs.extend(
        tangent
            .basis()
            .iter()
            .map(|t| scalar::concat(&scalar::zero_vec(d), t)),
    );
    let model = ReducedSpaceModel::new(g, point.clone(), Subspace::span(2 * d, &vs));
    let orbit_tangent = orbit_tangent_in_universal(p, s, point)?;
    Ok(KernelIdentity {
        holds: model.kernel == orbit_tangent,
        orbit_tangent,
        model,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionFormula {
    pub dim_g: usize,
    pub dim_s: usize,
    pub rank_l: usize,
    pub quotient_dim: usize,
}

impl DimensionFormula {
    /// `dim g + dim S − rk L_S`.
    pub fn predicted(&self) -> usize {
        self.dim_g + self.dim_s - self.rank_l
    }

    pub fn holds(&self) -> bool {
        self.predicted() == self.quotient_dim
    }
}

pub fn dimension_formula_check<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
    model: &ReducedSpaceModel<F>,
) -> Result<DimensionFormula> {
    let g = kks_algebra(p)?;
    let xi = &model.base.xi;
    Ok(DimensionFormula {
        dim_g: g.dim(),
        dim_s: s.tangent_basis(xi)?.dim(),
        rank_l: algebroid_fiber(p, s, xi)?.rank(),
        quotient_dim: model.quotient_dim,
    })
}

/// Values of one bilinear quantity computed two ways, pair by pair.
#[derive(Clone, Debug, PartialEq)]
pub struct FormComparison<F> {
    pub values: Vec<(F, F)>,
}

impl<F: Scalar> FormComparison<F> {
    pub fn all_agree(&self) -> bool {
        self.values.iter().all(|(a, b)| a == b)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A tangent vector `([u], ζ)` to the reduced space of a decomposition class,
/// with `u ∈ g` a representative and `ζ ∈ [g_x, g_x]^⊥`.
#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionLift<F> {
    pub u: Vec<F>,
    pub zeta: Vec<F>,
}

/// Compares `−⟨u₁,ζ₂⟩ + ⟨u₂,ζ₁⟩ − ⟨x,[u₁,u₂]⟩` with the reduced form of
/// `model` evaluated on `(u, ζ^♭)`.
pub fn decomposition_form_check<F: Scalar>(
    g: &LieAlgebra<F>,
    x: &[F],
    model: &ReducedSpaceModel<F>,
    pairs: &[(DecompositionLift<F>, DecompositionLift<F>)],
) -> Result<FormComparison<F>> {
    check_len(g.dim(), x.len())?;
    if !g.is_semisimple_element(x)? {
        return Err(Error::InvalidArgument("x must be semisimple".into()));
    }
    let h = g.derived(&g.centralizer(x)?);
    let h_perp = h.image(g.killing()).annihilator();
    let k = |a: &[F], b: &[F]| g.killing_form(a, b);
    let mut values = Vec::with_capacity(pairs.len());
    for (l1, l2) in pairs {
        for l in [l1, l2] {
            check_len(g.dim(), l.u.len())?;
            if !h_perp.contains(&l.zeta) {
                return Err(Error::LiftNotValid(
                    "ζ is not Killing-orthogonal to [g_x, g_x]".into(),
                ));
            }
        }
        let explicit = k(&l2.u, &l1.zeta) - k(&l1.u, &l2.zeta) - k(x, &g.br(&l1.u, &l2.u));
        let a = scalar::concat(&l1.u, &g.flat(&l1.zeta));
        let b = scalar::concat(&l2.u, &g.flat(&l2.zeta));
        values.push((explicit, model.eval(&a, &b)?));
    }
    Ok(FormComparison { values })
}

/// `β_η(a, b) = −η([p, q])` for `a = ad_p^* η`, `b = ad_q^* η`, evaluated as
/// `a(q)` after solving for `q`.
pub fn orbit_form<F: Scalar>(g: &LieAlgebra<F>, eta: &[F], a: &[F], b: &[F]) -> Result<F> {
    let q = g
        .coad_matrix(eta)
        .solve(b)
        .ok_or_else(|| Error::LiftNotValid("vector is not tangent to the orbit".into()))?;
    Ok(scalar::dot(a, &q))
}

/// A tangent vector `(x, ad_y^* ξ)` to `G × O`, recorded by `(x, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitProductTangent<F> {
    pub x: Vec<F>,
    pub y: Vec<F>,
}

/// Compares `ψ^*(β, −β)` with `Ω`, where
/// `dψ(x, ad_y^* ξ) = (ad^*_{Ad_g(x+y)} Ad_g^* ξ, ad_y^* ξ)`.
pub fn orbit_product_symplecto_check<F: Scalar>(
    g: &LieAlgebra<F>,
    point: &CotangentPoint<F>,
    pairs: &[(OrbitProductTangent<F>, OrbitProductTangent<F>)],
) -> Result<FormComparison<F>> {
    let xi = &point.xi;
    check_len(g.dim(), xi.len())?;
    let identity;
    let elt = match &point.g {
        Some(e) => e,
        None => {
            let size = g.matrix_rep().map_or(1, |r| r.size());
            identity = GroupElement::identity(size);
            &identity
        }
    };
    let translate = |v: &[F]| -> Result<Vec<F>> {
        if point.g.is_none() {
            Ok(v.to_vec())
        } else {
            g.adjoint_group_action(elt, v)
        }
    };
    let moved = if point.g.is_none() {
        xi.clone()
    } else {
        g.coadjoint_group_action(elt, xi)?
    };
    let mut values = Vec::with_capacity(pairs.len());
    for (t1, t2) in pairs {
        let first = |t: &OrbitProductTangent<F>| -> Result<Vec<F>> {
            g.ad_star(&translate(&scalar::add_vec(&t.x, &t.y))?, &moved)
        };
        let second = |t: &OrbitProductTangent<F>| g.ad_star(&t.y, xi);
        let pulled = orbit_form(g, &moved, &first(t1)?, &first(t2)?)?
            - orbit_form(g, xi, &second(t1)?, &second(t2)?)?;
        let direct = omega_eval(
            g,
            xi,
            &CotangentTangent::new(t1.x.clone(), second(t1)?),
            &CotangentTangent::new(t2.x.clone(), second(t2)?),
        )?;
        values.push((pulled, direct));
    }
    Ok(FormComparison { values })
}

/// A Hamiltonian space linearized at a point: `ω_p` on `T_pM` and
/// `dμ_p : T_pM → g*`, with `μ(p) = xi`.
#[derive(Clone, Debug)]
pub struct HamiltonianLinearModel<F> {
    pub omega: Matrix<F>,
    pub dmu: Matrix<F>,
    pub xi: Vec<F>,
}

impl<F: Scalar> HamiltonianLinearModel<F> {
    /// `T*G` at `(1, ξ)` with moment map `(g, ξ) ↦ ξ` for right translations.
    pub fn cotangent_right(g: &LieAlgebra<F>, xi: &[F]) -> Self {
        HamiltonianLinearModel {
            omega: omega_matrix(g, xi),
            dmu: dt_matrix(g.dim()),
            xi: xi.to_vec(),
        }
    }

    /// The orbit through `ξ` with `μ` the inclusion, in the coordinates of a
    /// basis of `T_ξO`.
    pub fn coadjoint_orbit(g: &LieAlgebra<F>, xi: &[F]) -> Result<Self> {
        let basis = Subspace::span(g.dim(), &g.coad_matrix(xi).column_vecs());
        let b = basis.basis().to_vec();
        let omega = gram(&b, |a, c| orbit_form(g, xi, a, c).unwrap());
        Ok(HamiltonianLinearModel {
            omega,
            dmu: Matrix::from_columns(g.dim(), &b),
            xi: xi.to_vec(),
        })
    }
}

/// On `T_p μ⁻¹(S) = dμ⁻¹(T_ξS)`, `ω − Ω((0, dμ·), (0, dμ·))` equals `ω`.
pub fn universality_identity_check<F: Scalar>(
    g: &LieAlgebra<F>,
    model: &HamiltonianLinearModel<F>,
    tangent: &Subspace<F>,
    pairs: &[(Vec<F>, Vec<F>)],
) -> Result<FormComparison<F>> {
    let allowed = tangent.preimage(&model.dmu);
    let d = g.dim();
    let mut values = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        if !allowed.contains(a) || !allowed.contains(b) {
            return Err(Error::LiftNotValid("vector is not tangent to μ⁻¹(S)".into()));
        }
        let w = model.omega.bilinear(a, b);
        let lift = |v: &[F]| CotangentTangent::new(scalar::zero_vec(d), model.dmu.mul_vec(v));
        let pulled = w.clone() - omega_eval(g, &model.xi, &lift(a), &lift(b))?;
        values.push((pulled, w));
    }
    Ok(FormComparison { values })
}

/// A constant symplectic form and a subspace `E` with `F^n = E ⊕ E^ω`.
#[derive(Clone, Debug)]
pub struct SplittingData<F> {
    omega: Matrix<F>,
    e: Subspace<F>,
    e_perp: Subspace<F>,
    sigma: Matrix<F>,
}

impl<F: Scalar> SplittingData<F> {
    pub fn new(omega: Matrix<F>, e: &[Vec<F>]) -> Result<Self> {
        if !omega.is_antisymmetric() {
            return Err(Error::InvalidArgument("form must be antisymmetric".into()));
        }
        let n = omega.rows();
        let e = Subspace::span(n, e);
        let e_perp = e.image(&omega.transpose()).annihilator();
        if !e.intersect(&e_perp).is_zero() || e.dim() + e_perp.dim() != n {
            return Err(Error::SplittingInvalid);
        }
        let sigma = omega.transpose().inverse()?;
        Ok(SplittingData {
            omega,
            e,
            e_perp,
            sigma,
        })
    }

    pub fn e(&self) -> &Subspace<F> {
        &self.e
    }

    pub fn e_perp(&self) -> &Subspace<F> {
        &self.e_perp
    }

    /// `X_F` with `ω(X_F, ·) = dF`.
    pub fn hamiltonian_vector(&self, df: &[F]) -> Result<Vec<F>> {
        check_len(self.omega.rows(), df.len())?;
        Ok(self.sigma.mul_vec(df))
    }

    /// Projection onto `E` along `E^ω`.
    pub fn project(&self, v: &[F]) -> Vec<F> {
        let k = self.e.dim();
        let mut basis = self.e.basis().to_vec();
        basis.extend(self.e_perp.basis().iter().cloned());
        let c = coordinates_in(&basis, v).expect("E ⊕ E^ω spans the ambient space");
        scalar::combine(&c[..k], self.e.basis(), v.len())
    }

    /// `ω(θ(X_F), θ(X_G))`.
    pub fn theta_bracket(&self, df: &[F], dg: &[F]) -> Result<F> {
        let xf = self.project(&self.hamiltonian_vector(df)?);
        let xg = self.project(&self.hamiltonian_vector(dg)?);
        Ok(self.omega.bilinear(&xf, &xg))
    }

    /// `ω(X_F, X_G)` without projection.
    pub fn plain_bracket(&self, df: &[F], dg: &[F]) -> Result<F> {
        let xf = self.hamiltonian_vector(df)?;
        let xg = self.hamiltonian_vector(dg)?;
        Ok(self.omega.bilinear(&xf, &xg))
    }
}

/// An arrow `(g, ξ)` of `G × S ⇉ S` with `s = Ad_g^* ξ` and `t = ξ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Arrow<F> {
    pub g: GroupElement<F>,
    pub xi: Vec<F>,
}

impl<F: Scalar> Arrow<F> {
    pub fn source(&self, alg: &LieAlgebra<F>) -> Result<Vec<F>> {
        alg.coadjoint_group_action(&self.g, &self.xi)
    }

    pub fn target(&self) -> &[F] {
        &self.xi
    }

    /// `(g, ξ)·(h, η) = (gh, η)` when `ξ = Ad_h^* η`, so `t(a) = s(b)`.
    pub fn compose(&self, alg: &LieAlgebra<F>, other: &Self) -> Result<Self> {
        if self.xi != other.source(alg)? {
            return Err(Error::NotComposable);
        }
        Ok(Arrow {
            g: self.g.product(&other.g),
            xi: other.xi.clone(),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GroupoidAxioms {
    pub source_of_product: bool,
    pub target_of_product: bool,
    pub associative: bool,
    pub unit_law: bool,
    pub normality: bool,
}

impl GroupoidAxioms {
    pub fn all(&self) -> bool {
        self.source_of_product
            && self.target_of_product
            && self.associative
            && self.unit_law
            && self.normality
    }
}

/// Checks the groupoid axioms on composable triples `(a, b, c)` and the
/// infinitesimal normality of the stabilizers at every arrow.
pub fn invariant_reduction_groupoid_check<F: Scalar>(
    p: &PoissonPointModel<F>,
    s: &PointedSubmanifoldModel<F>,
    triples: &[(Arrow<F>, Arrow<F>, Arrow<F>)],
) -> Result<GroupoidAxioms> {
    let alg = kks_algebra(p)?;
    if !s.is_invariant() {
        return Err(Error::KindNotInvariant(s.kind_name().into()));
    }
    let mut out = GroupoidAxioms {
        source_of_product: true,
        target_of_product: true,
        associative: true,
        unit_law: true,
        normality: true,
    };
    for (a, b, c) in triples {
        let ab = a.compose(alg, b)?;
        let bc = b.compose(alg, c)?;
        out.source_of_product &= ab.source(alg)? == a.source(alg)?;
        out.target_of_product &= ab.target() == b.target();
        out.associative &= ab.compose(alg, c)? == a.compose(alg, &bc)?;
        let unit = |xi: Vec<F>| Arrow {
            g: GroupElement::identity(a.g.size()),
            xi,
        };
        let right = a.compose(alg, &unit(a.xi.clone()))?;
        let left = unit(a.source(alg)?).compose(alg, a)?;
        for c in [right, left] {
            out.unit_law &= c.g.matrix() == a.g.matrix() && c.xi == a.xi;
        }
        for arrow in [a, b, c] {
            out.normality &= normality_infinitesimal_check(p, s, &arrow.g, &arrow.xi)?;
        }
    }
    Ok(out)
}
