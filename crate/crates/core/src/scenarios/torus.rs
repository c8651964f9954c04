use super::{r, shifted_checks, ScenarioOptions};
use crate::error::{check_len, Error, Result};
use crate::linalg::Subspace;
use crate::poisson::{
    algebroid_fiber, pre_poisson_sample_check, stable_check, PointedSubmanifoldModel,
    PoissonPointModel,
};
use crate::report::{check, sampled_check, CheckValue, ScenarioReport};
use crate::scalar;
use crate::Rational;

const FIBER: &str = "Lie(T_F) = (T_ξF)°";
const STABLE: &str = "σ = 0, so every L_F is stable";
const PRE_POISSON: &str = "σ⁻¹(TS) ∩ TS° has constant rank";

/// A face of a polyhedron in `t*` for a torus `T` of dimension `dim_t`, with
/// the zero Poisson structure.
pub fn polyhedral_face_torus(
    dim_t: usize,
    directions: &[Vec<Rational>],
    opts: &ScenarioOptions,
) -> Result<ScenarioReport> {
    if dim_t == 0 {
        return Err(Error::InvalidArgument("torus dimension must be positive".into()));
    }
    for v in directions {
        check_len(dim_t, v.len())?;
    }
    let mut sampler = opts.sampler();
    let p = PoissonPointModel::trivial(dim_t);
    let base = vec![r(1); dim_t];
    let span = Subspace::span(dim_t, directions);
    let mut points = vec![base.clone()];
    points.extend(
        (0..opts.sample_count)
            .map(|_| scalar::add_vec(&base, &sampler.combination(span.basis(), dim_t))),
    );
    points.dedup();
    let s = PointedSubmanifoldModel::polyhedral_face(base.clone(), directions)
        .with_samples(points.clone())?;

    let mut report = ScenarioReport::new("polyhedral_face_torus")
        .with_param("dim_t", dim_t)
        .with_param(
            "directions",
            CheckValue::List(directions.iter().map(|v| CheckValue::vector(v)).collect()),
        );
    let expected = opts.expected("fiber_dim", (dim_t - span.dim()) as i64);
    for xi in &points {
        let fiber = algebroid_fiber(&p, &s, xi)?;
        let ann = span.annihilator();
        report.push(
            check(
                "face_fiber",
                FIBER,
                fiber.fiber == ann && fiber.rank() as i64 == expected,
            )
            .with("point", CheckValue::vector(xi))
            .with("fiber_dim", fiber.rank())
            .with("expected", expected)
            .with("face_dim", span.dim()),
        );
    }
    let stable = stable_check(&p, &s)?;
    report.push(check("stable", STABLE, stable.iter().all(|&b| b)));
    let witness = pre_poisson_sample_check(&p, &s)?;
    report.push(
        sampled_check("pre_poisson", PRE_POISSON, witness.constant_rank)
            .with("ranks", witness.ranks.clone()),
    );
    shifted_checks(&mut report, &p, &s, &base, &mut sampler)?;
    Ok(report)
}
