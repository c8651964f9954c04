use std::sync::Arc;

use num_traits::Zero;

use super::{r, shifted_checks, ScenarioOptions};
use crate::error::Error;
use crate::groupoid::{chamber_face_fiber, lie_functor_check};
use crate::lie::{build_chevalley, CartanType};
use crate::linalg::Subspace;
use crate::poisson::{algebroid_fiber, PointedSubmanifoldModel, PoissonPointModel};
use crate::report::{check, CheckValue, ScenarioReport};
use crate::scalar;
use crate::{Rational, Result};

const FACE: &str = "(V_y)_C^⊥ ∩ g_y = [g_y, g_y] = g_Ψ";
const GROUPOID: &str = "[K_S, K_S] × S is an isotropic stabilizer subgroupoid";
const FACES: [&[usize]; 4] = [&[], &[0], &[1], &[0, 1]];

/// The four faces of the closed positive Weyl chamber of `sl(3)`.
pub fn implosion_faces_a2(opts: &ScenarioOptions) -> Result<ScenarioReport> {
    let mut sampler = opts.sampler();
    let g = Arc::new(build_chevalley::<Rational>(CartanType::A, 2)?);
    let d = g.dim();
    let rd = g.root_data().ok_or(Error::NoRootData)?;
    let p = PoissonPointModel::kks(g.clone());
    let mut report = ScenarioReport::new("implosion_faces_A2");

    for face in FACES {
        let s = PointedSubmanifoldModel::weyl_chamber_face(g.clone(), face.to_vec())?;
        let free = g.rank() - face.len();
        let mut values: Vec<Vec<Rational>> = vec![(1..=free as i64).map(r).collect()];
        values.extend((0..opts.sample_count).map(|_| (0..free).map(|_| sampler.positive()).collect()));
        let points: Vec<Vec<Rational>> =
            values.iter().map(|v| s.face_point(v)).collect::<Result<_>>()?;
        let s = s.with_samples(points.clone())?;

        for xi in &points {
            let fiber = algebroid_fiber(&p, &s, xi)?;
            // Ψ = {α : ξ(h_α) = 0}; g_Ψ = span of its coroots and root vectors.
            let mut span = Vec::new();
            for (idx, h) in rd.coroots.iter().enumerate() {
                if scalar::dot(xi, h).is_zero() {
                    span.push(h.clone());
                    span.push(g.basis_vector(rd.root_vectors[idx]));
                }
            }
            let g_psi = Subspace::span(d, &span);
            let face_label: Vec<usize> = face.iter().map(|i| i + 1).collect();
            report.push(
                check("face_fiber", FACE, fiber.fiber == g_psi)
                    .with("face", face_label.clone())
                    .with("point", CheckValue::vector(xi))
                    .with("fiber_dim", fiber.rank())
                    .with("g_psi_dim", g_psi.dim()),
            );
            let tangent = s.tangent_basis(xi)?;
            let gf = chamber_face_fiber(&g, xi, &tangent)?;
            report.push(
                check(
                    "face_groupoid",
                    GROUPOID,
                    gf.isotropic && lie_functor_check(&gf, &fiber)?,
                )
                .with("face", face_label)
                .with("dim", gf.dim()),
            );
        }
        shifted_checks(&mut report, &p, &s, &points[0], &mut sampler)?;
    }
    Ok(report)
}
