use std::fmt;
use std::sync::Arc;

use num_traits::Signed;

use crate::error::{check_len, Error, Result};
use crate::lie::{GroupElement, LieAlgebra, Sl2Triple};
use crate::linalg::Subspace;
use crate::scalar::{self, Scalar};

type Membership<F> = Arc<dyn Fn(&[F]) -> bool + Send + Sync>;
type TangentFn<F> = Arc<dyn Fn(&[F]) -> Vec<Vec<F>> + Send + Sync>;

#[derive(Clone)]
pub enum SubmanifoldKind<F> {
    Singleton {
        point: Vec<F>,
    },
    AffineSubspace {
        base: Vec<F>,
        directions: Subspace<F>,
    },
    /// Orbit of `seed`; membership is decided against the translates of the
    /// seed by the stored witnesses.
    CoadjointOrbit {
        algebra: Arc<LieAlgebra<F>>,
        seed: Vec<F>,
        points: Vec<Vec<F>>,
    },
    /// `(e + g_f)^♭ ⊆ g*`.
    SlodowySlice {
        algebra: Arc<LieAlgebra<F>>,
        triple: Sl2Triple<F>,
        g_f: Subspace<F>,
    },
    /// The slice embedded diagonally in `(g*)^n`.
    DiagonalSlodowy {
        algebra: Arc<LieAlgebra<F>>,
        triple: Sl2Triple<F>,
        g_f: Subspace<F>,
        n: usize,
    },
    /// Semisimple `x^♭` with `dim g_x` equal to `centralizer_dim`. In `sl(3)`
    /// with `centralizer_dim = 4` this is the single class of
    /// `diag(a, a, −2a)` up to conjugacy and scaling.
    DecompositionClass {
        algebra: Arc<LieAlgebra<F>>,
        centralizer_dim: usize,
    },
    /// `{ξ : ⟨ξ, ξ⟩ = level}` for the dual Killing form.
    CasimirLevelSet {
        algebra: Arc<LieAlgebra<F>>,
        level: F,
    },
    /// Points of `t* ⊆ g*` vanishing on the simple coroots in `face` and
    /// positive on the others.
    WeylChamberFace {
        algebra: Arc<LieAlgebra<F>>,
        face: Vec<usize>,
    },
    PolyhedralFace {
        base: Vec<F>,
        directions: Subspace<F>,
    },
    /// Caller-supplied membership and tangent; results are trusted.
    Explicit {
        name: String,
        membership: Membership<F>,
        tangent: TangentFn<F>,
    },
}

/// A submanifold kind together with sample points that pass its membership
/// test.
#[derive(Clone)]
pub struct PointedSubmanifoldModel<F> {
    kind: SubmanifoldKind<F>,
    ambient: usize,
    samples: Vec<Vec<F>>,
}

impl<F: Scalar> PointedSubmanifoldModel<F> {
    fn new(kind: SubmanifoldKind<F>, ambient: usize) -> Self {
        PointedSubmanifoldModel {
            kind,
            ambient,
            samples: Vec::new(),
        }
    }

    pub fn singleton(point: Vec<F>) -> Self {
        let n = point.len();
        Self::new(SubmanifoldKind::Singleton { point: point.clone() }, n).with_trusted(vec![point])
    }

    pub fn affine(base: Vec<F>, directions: &[Vec<F>]) -> Self {
        let n = base.len();
        let directions = Subspace::span(n, directions);
        Self::new(SubmanifoldKind::AffineSubspace { base: base.clone(), directions }, n)
            .with_trusted(vec![base])
    }

    /// Orbit through `seed`, sampled at `seed` and its translates.
    pub fn coadjoint_orbit(
        algebra: Arc<LieAlgebra<F>>,
        seed: Vec<F>,
        witnesses: &[GroupElement<F>],
    ) -> Result<Self> {
        check_len(algebra.dim(), seed.len())?;
        let mut points = vec![seed.clone()];
        for g in witnesses {
            let p = algebra.coadjoint_group_action(g, &seed)?;
            if !points.contains(&p) {
                points.push(p);
            }
        }
        let n = algebra.dim();
        let samples = points.clone();
        Ok(Self::new(SubmanifoldKind::CoadjointOrbit { algebra, seed, points }, n)
            .with_trusted(samples))
    }

    pub fn slodowy_slice(algebra: Arc<LieAlgebra<F>>, triple: Sl2Triple<F>) -> Result<Self> {
        let g_f = algebra.centralizer(&triple.f)?;
        let n = algebra.dim();
        Ok(Self::new(SubmanifoldKind::SlodowySlice { algebra, triple, g_f }, n))
    }

    pub fn diagonal_slodowy(
        algebra: Arc<LieAlgebra<F>>,
        triple: Sl2Triple<F>,
        n: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("diagonal power must be positive".into()));
        }
        let g_f = algebra.centralizer(&triple.f)?;
        let ambient = n * algebra.dim();
        Ok(Self::new(
            SubmanifoldKind::DiagonalSlodowy { algebra, triple, g_f, n },
            ambient,
        ))
    }

    pub fn decomposition_class(algebra: Arc<LieAlgebra<F>>, centralizer_dim: usize) -> Result<Self> {
        algebra.killing_inverse()?;
        let n = algebra.dim();
        Ok(Self::new(
            SubmanifoldKind::DecompositionClass { algebra, centralizer_dim },
            n,
        ))
    }

    pub fn casimir_level_set(algebra: Arc<LieAlgebra<F>>, level: F) -> Result<Self> {
        algebra.killing_inverse()?;
        if level.is_zero() {
            return Err(Error::InvalidArgument("Casimir level must be nonzero".into()));
        }
        let n = algebra.dim();
        Ok(Self::new(SubmanifoldKind::CasimirLevelSet { algebra, level }, n))
    }

    pub fn weyl_chamber_face(algebra: Arc<LieAlgebra<F>>, face: Vec<usize>) -> Result<Self> {
        if algebra.root_data().is_none() {
            return Err(Error::NoRootData);
        }
        if face.iter().any(|&i| i >= algebra.rank()) {
            return Err(Error::InvalidArgument("face index exceeds the rank".into()));
        }
        let n = algebra.dim();
        Ok(Self::new(SubmanifoldKind::WeylChamberFace { algebra, face }, n))
    }

    pub fn polyhedral_face(base: Vec<F>, directions: &[Vec<F>]) -> Self {
        let n = base.len();
        let directions = Subspace::span(n, directions);
        Self::new(SubmanifoldKind::PolyhedralFace { base: base.clone(), directions }, n)
            .with_trusted(vec![base])
    }

    pub fn explicit(
        name: impl Into<String>,
        ambient: usize,
        membership: impl Fn(&[F]) -> bool + Send + Sync + 'static,
        tangent: impl Fn(&[F]) -> Vec<Vec<F>> + Send + Sync + 'static,
    ) -> Self {
        Self::new(
            SubmanifoldKind::Explicit {
                name: name.into(),
                membership: Arc::new(membership),
                tangent: Arc::new(tangent),
            },
            ambient,
        )
    }

    fn with_trusted(mut self, samples: Vec<Vec<F>>) -> Self {
        self.samples = samples;
        self
    }

    /// Replaces the sample points after checking each against the model.
    pub fn with_samples(mut self, samples: Vec<Vec<F>>) -> Result<Self> {
        for s in &samples {
            if !self.contains(s)? {
                return Err(Error::NotOnModel(self.kind_name().into()));
            }
        }
        self.samples = samples;
        Ok(self)
    }

    pub fn kind(&self) -> &SubmanifoldKind<F> {
        &self.kind
    }

    pub fn kind_name(&self) -> &str {
        match &self.kind {
            SubmanifoldKind::Singleton { .. } => "singleton",
            SubmanifoldKind::AffineSubspace { .. } => "affine_subspace",
            SubmanifoldKind::CoadjointOrbit { .. } => "coadjoint_orbit",
            SubmanifoldKind::SlodowySlice { .. } => "slodowy_slice",
            SubmanifoldKind::DiagonalSlodowy { .. } => "diagonal_slodowy",
            SubmanifoldKind::DecompositionClass { .. } => "decomposition_class",
            SubmanifoldKind::CasimirLevelSet { .. } => "casimir_level_set",
            SubmanifoldKind::WeylChamberFace { .. } => "weyl_chamber_face",
            SubmanifoldKind::PolyhedralFace { .. } => "polyhedral_face",
            SubmanifoldKind::Explicit { name, .. } => name,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn samples(&self) -> &[Vec<F>] {
        &self.samples
    }

    /// `true` when membership is asserted by caller-supplied code.
    pub fn is_trusted(&self) -> bool {
        matches!(self.kind, SubmanifoldKind::Explicit { .. })
    }

    /// Orbits, decomposition classes and Casimir level sets are preserved
    /// by the coadjoint action.
    pub fn is_invariant(&self) -> bool {
        matches!(
            self.kind,
            SubmanifoldKind::CoadjointOrbit { .. }
                | SubmanifoldKind::DecompositionClass { .. }
                | SubmanifoldKind::CasimirLevelSet { .. }
        )
    }

    /// Exact membership test for the kind.
    pub fn contains(&self, xi: &[F]) -> Result<bool> {
        check_len(self.ambient, xi.len())?;
        Ok(match &self.kind {
            SubmanifoldKind::Singleton { point } => point.as_slice() == xi,
            SubmanifoldKind::AffineSubspace { base, directions }
            | SubmanifoldKind::PolyhedralFace { base, directions } => {
                directions.contains(&scalar::sub_vec(xi, base))
            }
            SubmanifoldKind::CoadjointOrbit { points, .. } => points.iter().any(|p| p == xi),
            SubmanifoldKind::SlodowySlice { algebra, triple, g_f } => {
                slice_member(algebra, triple, g_f, xi)?
            }
            SubmanifoldKind::DiagonalSlodowy { algebra, triple, g_f, n } => {
                let d = algebra.dim();
                let first = &xi[..d];
                (1..*n).all(|k| &xi[k * d..(k + 1) * d] == first)
                    && slice_member(algebra, triple, g_f, first)?
            }
            SubmanifoldKind::DecompositionClass { algebra, centralizer_dim } => {
                let x = algebra.sharp(xi)?;
                algebra.is_semisimple_element(&x)?
                    && algebra.centralizer(&x)?.dim() == *centralizer_dim
            }
            SubmanifoldKind::CasimirLevelSet { algebra, level } => {
                algebra.dual_killing(xi, xi)? == *level
            }
            SubmanifoldKind::WeylChamberFace { algebra, face } => {
                let r = algebra.rank();
                scalar::is_zero_vec(&xi[r..])
                    && (0..r).all(|i| {
                        if face.contains(&i) {
                            xi[i].is_zero()
                        } else {
                            xi[i].to_big_rational().is_positive()
                        }
                    })
            }
            SubmanifoldKind::Explicit { membership, .. } => membership(xi),
        })
    }

    /// Basis of `T_ξS`; fails when `ξ` is not on the model.
    pub fn tangent_basis(&self, xi: &[F]) -> Result<Subspace<F>> {
        if !self.contains(xi)? {
            return Err(Error::NotOnModel(self.kind_name().into()));
        }
        self.tangent_formula(xi)
    }

    /// For an invariant kind, the translate `Ad_g^* ξ` of a member `ξ` and
    /// the tangent space there.
    pub fn tangent_at_translate(
        &self,
        xi: &[F],
        g: &GroupElement<F>,
    ) -> Result<(Vec<F>, Subspace<F>)> {
        let algebra = match &self.kind {
            SubmanifoldKind::CoadjointOrbit { algebra, .. }
            | SubmanifoldKind::DecompositionClass { algebra, .. }
            | SubmanifoldKind::CasimirLevelSet { algebra, .. } => algebra,
            _ => return Err(Error::KindNotInvariant(self.kind_name().into())),
        };
        if !self.contains(xi)? {
            return Err(Error::NotOnModel(self.kind_name().into()));
        }
        let eta = algebra.coadjoint_group_action(g, xi)?;
        let tangent = self.tangent_formula(&eta)?;
        Ok((eta, tangent))
    }

    fn tangent_formula(&self, xi: &[F]) -> Result<Subspace<F>> {
        let n = self.ambient;
        Ok(match &self.kind {
            SubmanifoldKind::Singleton { .. } => Subspace::zero(n),
            SubmanifoldKind::AffineSubspace { directions, .. }
            | SubmanifoldKind::PolyhedralFace { directions, .. } => directions.clone(),
            SubmanifoldKind::CoadjointOrbit { algebra, .. } => {
                Subspace::span(n, &algebra.coad_matrix(xi).column_vecs())
            }
            SubmanifoldKind::SlodowySlice { algebra, g_f, .. } => {
                g_f.map_vectors(|v| algebra.flat(v), n)
            }
            SubmanifoldKind::DiagonalSlodowy { algebra, g_f, n: copies, .. } => {
                g_f.map_vectors(
                    |v| {
                        let flat = algebra.flat(v);
                        (0..*copies).flat_map(|_| flat.iter().cloned()).collect()
                    },
                    n,
                )
            }
            SubmanifoldKind::DecompositionClass { algebra, .. } => {
                // T_x D = z(g_x) + [g, x] for semisimple x.
                let x = algebra.sharp(xi)?;
                let g_x = algebra.centralizer(&x)?;
                let t = algebra.center_of(&g_x).sum(&algebra.image_of_ad(&x)?);
                t.map_vectors(|v| algebra.flat(v), n)
            }
            SubmanifoldKind::CasimirLevelSet { algebra, .. } => {
                Subspace::span(n, &[algebra.sharp(xi)?]).annihilator()
            }
            SubmanifoldKind::WeylChamberFace { algebra, face } => {
                let vs: Vec<Vec<F>> = (0..algebra.rank())
                    .filter(|i| !face.contains(i))
                    .map(|i| scalar::unit_vec(n, i))
                    .collect();
                Subspace::span(n, &vs)
            }
            SubmanifoldKind::Explicit { tangent, .. } => Subspace::span(n, &tangent(xi)),
        })
    }

    /// `(e + Σ c_j y_j)^♭` for the stored basis `y_j` of `g_f`.
    pub fn slice_point(&self, coeffs: &[F]) -> Result<Vec<F>> {
        match &self.kind {
            SubmanifoldKind::SlodowySlice { algebra, triple, g_f }
            | SubmanifoldKind::DiagonalSlodowy { algebra, triple, g_f, .. } => {
                check_len(g_f.dim(), coeffs.len())?;
                let y = scalar::combine(coeffs, g_f.basis(), algebra.dim());
                let p = algebra.flat(&scalar::add_vec(&triple.e, &y));
                Ok(match &self.kind {
                    SubmanifoldKind::DiagonalSlodowy { n, .. } => {
                        (0..*n).flat_map(|_| p.iter().cloned()).collect()
                    }
                    _ => p,
                })
            }
            _ => Err(Error::InvalidArgument("not a slice model".into())),
        }
    }

    /// Dimension of the slice parameter space, `dim g_f`.
    pub fn slice_dim(&self) -> Option<usize> {
        match &self.kind {
            SubmanifoldKind::SlodowySlice { g_f, .. }
            | SubmanifoldKind::DiagonalSlodowy { g_f, .. } => Some(g_f.dim()),
            _ => None,
        }
    }

    /// Point of a chamber face with the given values on the simple coroots
    /// outside the face (listed in increasing index order).
    pub fn face_point(&self, values: &[F]) -> Result<Vec<F>> {
        match &self.kind {
            SubmanifoldKind::WeylChamberFace { algebra, face } => {
                let free: Vec<usize> = (0..algebra.rank()).filter(|i| !face.contains(i)).collect();
                check_len(free.len(), values.len())?;
                let mut p = scalar::zero_vec(algebra.dim());
                for (&i, v) in free.iter().zip(values) {
                    p[i] = v.clone();
                }
                Ok(p)
            }
            _ => Err(Error::InvalidArgument("not a chamber face model".into())),
        }
    }
}

fn slice_member<F: Scalar>(
    algebra: &LieAlgebra<F>,
    triple: &Sl2Triple<F>,
    g_f: &Subspace<F>,
    xi: &[F],
) -> Result<bool> {
    let x = algebra.sharp(xi)?;
    Ok(g_f.contains(&scalar::sub_vec(&x, &triple.e)))
}

impl<F: Scalar> fmt::Debug for PointedSubmanifoldModel<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointedSubmanifoldModel")
            .field("kind", &self.kind_name())
            .field("ambient", &self.ambient)
            .field("samples", &self.samples.len())
            .finish()
    }
}
