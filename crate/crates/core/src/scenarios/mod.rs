//! Named end-to-end scenarios. Each returns a [`ScenarioReport`] of exact
//! checks; a failed check is recorded, never dropped.

mod casimir;
mod decomposition;
mod implosion;
mod moore_tachikawa;
mod prepoisson;
mod torus;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::lie::{GroupElement, LieAlgebra};
use crate::linalg::Subspace;
use crate::poisson::{algebroid_fiber, PointedSubmanifoldModel, PoissonPointModel};
use crate::report::{check, CheckValue, ScenarioReport};
use crate::scalar;
use crate::shifted::{build_complex, lagrangian_criterion};
use crate::{Rational, Result};

pub use casimir::casimir_sphere;
pub use decomposition::decomposition_class_sl3;
pub use implosion::implosion_faces_a2;
pub use moore_tachikawa::slodowy_moore_tachikawa;
pub use prepoisson::c4_prepoisson_remark;
pub use torus::polyhedral_face_torus;

/// Registered scenario identifiers, sorted.
pub const SCENARIO_NAMES: [&str; 6] = [
    "c4_prepoisson_remark",
    "casimir_sphere",
    "decomposition_class_sl3",
    "implosion_faces_A2",
    "polyhedral_face_torus",
    "slodowy_moore_tachikawa",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioOptions {
    pub seed: u64,
    /// Number of seeded random sample points added to the fixed ones.
    pub sample_count: usize,
    /// Overrides for expected integer values, keyed by check name.
    pub expect: BTreeMap<String, i64>,
}

impl Default for ScenarioOptions {
    fn default() -> Self {
        ScenarioOptions {
            seed: 0,
            sample_count: 3,
            expect: BTreeMap::new(),
        }
    }
}

impl ScenarioOptions {
    pub fn with_seed(seed: u64) -> Self {
        ScenarioOptions {
            seed,
            ..Self::default()
        }
    }

    pub fn expected(&self, key: &str, default: i64) -> i64 {
        self.expect.get(key).copied().unwrap_or(default)
    }

    pub fn sampler(&self) -> Sampler {
        Sampler::new(self.seed)
    }
}

/// Seeded source of small rationals: numerators in `−5..=5`, denominators
/// in `1..=3`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn small(&mut self) -> Rational {
        let n = self.rng.gen_range(-5..=5);
        let d = self.rng.gen_range(1..=3);
        Rational::new(n.into(), d.into())
    }

    pub fn nonzero(&mut self) -> Rational {
        let n = loop {
            let n: i64 = self.rng.gen_range(-5..=5);
            if n != 0 {
                break n;
            }
        };
        let d: i64 = self.rng.gen_range(1..=3);
        Rational::new(n.into(), d.into())
    }

    pub fn positive(&mut self) -> Rational {
        let n: i64 = self.rng.gen_range(1..=5);
        let d: i64 = self.rng.gen_range(1..=3);
        Rational::new(n.into(), d.into())
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.small()).collect()
    }

    /// A random element of the span of `basis`.
    pub fn combination(&mut self, basis: &[Vec<Rational>], ambient: usize) -> Vec<Rational> {
        let c = self.vector(basis.len());
        scalar::combine(&c, basis, ambient)
    }

    /// A product of unipotent elements `exp(t e_α)` and `exp(t e_{−α})` over
    /// random simple roots.
    pub fn unipotent_word(
        &mut self,
        g: &LieAlgebra<Rational>,
        letters: usize,
    ) -> Result<GroupElement<Rational>> {
        let rd = g.root_data().ok_or(Error::NoRootData)?;
        let size = g.matrix_rep().ok_or(Error::NoMatrixRep)?.size();
        let mut out = GroupElement::identity(size);
        for k in 0..letters {
            let i = self.index(g.rank());
            let root = if k % 2 == 0 { i } else { rd.negative(i) };
            let x = g.basis_vector(rd.root_vectors[root]);
            out = out.product(&GroupElement::unipotent(g, &x, &self.nonzero())?);
        }
        Ok(out)
    }
}

pub(crate) fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub(crate) fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub(crate) const SHIFTED_ANCHOR: &str =
    "zero 2-form Lagrangian iff φ, ψ isomorphisms iff L = σ⁻¹(TS) ∩ TS°; ker φ = (σ⁻¹(TS) ∩ TS°)/L";

/// Runs the Lagrangian criterion on `L_S`, on `0`, on a random proper
/// subspace of `L_S` and on an enlargement of `L_S`, which must be rejected.
pub(crate) fn shifted_checks(
    report: &mut ScenarioReport,
    p: &PoissonPointModel<Rational>,
    s: &PointedSubmanifoldModel<Rational>,
    xi: &[Rational],
    sampler: &mut Sampler,
) -> Result<()> {
    let n = p.ambient_dim();
    let fiber = algebroid_fiber(p, s, xi)?.fiber;
    let rank = fiber.dim();
    let mut candidates: Vec<(&str, Vec<Vec<Rational>>)> = vec![
        ("stabilizer", fiber.basis().to_vec()),
        ("zero", Vec::new()),
    ];
    if rank > 0 {
        let mut proper: Vec<Vec<Rational>> = (0..rank - 1)
            .map(|_| sampler.combination(fiber.basis(), n))
            .collect();
        if Subspace::span(n, &proper).dim() != rank - 1 {
            proper = fiber.basis()[..rank - 1].to_vec();
        }
        candidates.push(("proper", proper));
    }
    for (label, basis) in candidates {
        let cmap = build_complex(p, s, xi, &basis)?;
        let v = lagrangian_criterion(&cmap);
        let ok = cmap.is_complex() && cmap.commutes() && v.consistent();
        report.push(
            check("shifted_lagrangian_criterion", SHIFTED_ANCHOR, ok)
                .with("candidate", label)
                .with("point", CheckValue::vector(xi))
                .with("candidate_dim", cmap.l.dim())
                .with("stabilizer_rank", rank)
                .with("lagrangian", v.is_lagrangian())
                .with("candidate_is_stabilizer", v.candidate_is_fiber)
                .with("ker_phi_dim", v.ker_phi_dim)
                .with("expected_ker_phi_dim", v.expected_ker_phi_dim),
        );
    }
    if let Some(extra) = (0..n)
        .map(|i| scalar::unit_vec::<Rational>(n, i))
        .find(|v| !fiber.contains(v))
    {
        let mut basis = fiber.basis().to_vec();
        basis.push(extra);
        let rejected = matches!(
            build_complex(p, s, xi, &basis),
            Err(Error::NotACandidate(_))
        );
        report.push(
            check("shifted_lagrangian_criterion", SHIFTED_ANCHOR, rejected)
                .with("candidate", "enlarged")
                .with("point", CheckValue::vector(xi))
                .with("candidate_dim", rank + 1)
                .with("rejected", rejected),
        );
    }
    Ok(())
}
