use num_traits::Zero;

use super::{r, shifted_checks, ScenarioOptions};
use crate::linalg::{Matrix, Subspace};
use crate::poisson::{
    algebroid_fiber, coisotropic_check, pre_poisson_sample_check, PointedSubmanifoldModel,
    PoissonPointModel,
};
use crate::reduction::SplittingData;
use crate::report::{check, sampled_check, CheckValue, ScenarioReport};
use crate::scalar;
use crate::{Rational, Result};

const TANGENT: &str = "TS = span{∂_x + 2x∂_u, ∂_v}";
const ANNIHILATOR: &str = "TS° = span{du − 2x dx, dy}";
const IMAGE: &str = "ω(TS) = span{dy + 2x dv, du}";
const TRIVIAL: &str = "L_S = ω(TS) ∩ TS° = 0 on x² = u ≠ 0, y = 0";
const ORTHOGONAL: &str = "TS^ω = span{2x∂_y − ∂_v, ∂_x}";
const NOT_COISOTROPIC: &str = "TS^ω ⊄ TS";
const PRE_POISSON: &str = "σ⁻¹(TS) ∩ TS° has constant rank";
const THETA: &str = "{F, G} = ω(θ(X_F), θ(X_G)) for TM|_N = E ⊕ E^ω";

fn v4(a: [Rational; 4]) -> Vec<Rational> {
    a.to_vec()
}

/// Gram matrix of `ω = dx∧dy + du∧dv` in the coordinates `(x, y, u, v)`.
pub fn c4_form() -> Matrix<Rational> {
    Matrix::from_i64_rows(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]])
}

/// `S = {x² = u ≠ 0, y = 0}`, with the tangent space computed as the kernel
/// of the Jacobian of `(x² − u, y)`.
pub fn c4_surface() -> PointedSubmanifoldModel<Rational> {
    PointedSubmanifoldModel::explicit(
        "c4_parabola",
        4,
        |p: &[Rational]| p[1].is_zero() && !p[2].is_zero() && p[0].clone() * p[0].clone() == p[2],
        |p: &[Rational]| {
            let two_x = r(2) * p[0].clone();
            Matrix::from_rows(4, &[vec![two_x, r(0), r(-1), r(0)], vec![r(0), r(1), r(0), r(0)]])
                .nullspace()
        },
    )
}

pub fn c4_prepoisson_remark(opts: &ScenarioOptions) -> Result<ScenarioReport> {
    let mut sampler = opts.sampler();
    let omega = c4_form();
    let p = PoissonPointModel::from_symplectic(&omega)?;
    let mut ts: Vec<Rational> = vec![r(1), r(2), r(-1)];
    ts.extend((0..opts.sample_count).map(|_| sampler.nonzero()));
    let points: Vec<Vec<Rational>> = ts
        .iter()
        .map(|t| v4([t.clone(), r(0), t.clone() * t.clone(), r(0)]))
        .collect();
    let s = c4_surface().with_samples(points.clone())?;
    let mut report = ScenarioReport::new("c4_prepoisson_remark");
    let (o, i) = (r(0), r(1));

    for (t, xi) in ts.iter().zip(&points) {
        let two_x = r(2) * t.clone();
        let tangent = s.tangent_basis(xi)?;
        let expected_tangent = Subspace::span(
            4,
            &[v4([i.clone(), o.clone(), two_x.clone(), o.clone()]), v4([o.clone(), o.clone(), o.clone(), i.clone()])],
        );
        report.push(
            check("tangent", TANGENT, tangent == expected_tangent)
                .with("point", CheckValue::vector(xi))
                .with("basis", CheckValue::basis(&tangent)),
        );
        let ann = tangent.annihilator();
        let expected_ann = Subspace::span(
            4,
            &[v4([-two_x.clone(), o.clone(), i.clone(), o.clone()]), v4([o.clone(), i.clone(), o.clone(), o.clone()])],
        );
        report.push(check("annihilator", ANNIHILATOR, ann == expected_ann));

        // ω(v) = ω(v, ·) has coordinates Wᵀ v.
        let image = tangent.image(&omega.transpose());
        let expected_image = Subspace::span(
            4,
            &[v4([o.clone(), i.clone(), o.clone(), two_x.clone()]), v4([o.clone(), o.clone(), i.clone(), o.clone()])],
        );
        report.push(check("omega_image", IMAGE, image == expected_image));

        let fiber = algebroid_fiber(&p, &s, xi)?;
        report.push(
            check("stabilizer_trivial", TRIVIAL, fiber.fiber.is_zero() && image.intersect(&ann).is_zero())
                .with("rank", fiber.rank()),
        );

        let orth = tangent.image(&omega.transpose()).annihilator();
        let expected_orth = Subspace::span(
            4,
            &[v4([o.clone(), two_x.clone(), o.clone(), -i.clone()]), v4([i.clone(), o.clone(), o.clone(), o.clone()])],
        );
        report.push(
            check("symplectic_orthogonal", ORTHOGONAL, orth == expected_orth)
                .with("basis", CheckValue::basis(&orth)),
        );
        report.push(check(
            "not_coisotropic",
            NOT_COISOTROPIC,
            !coisotropic_check(&omega, &tangent)?,
        ));
    }

    let witness = pre_poisson_sample_check(&p, &s)?;
    report.push(
        sampled_check("pre_poisson", PRE_POISSON, witness.constant_rank && witness.ranks.iter().all(|&k| k == 0))
            .with("ranks", witness.ranks.clone()),
    );

    let unit = |k: usize| scalar::unit_vec::<Rational>(4, k);
    let split = SplittingData::new(omega.clone(), &[unit(0), unit(1)])?;
    let xy = split.theta_bracket(&unit(0), &unit(1))?;
    let u_any = split.theta_bracket(&unit(2), &sampler.vector(4))?;
    let whole = SplittingData::new(omega.clone(), &(0..4).map(unit).collect::<Vec<_>>())?;
    let (df, dg) = (sampler.vector(4), sampler.vector(4));
    let plain_ok = whole.theta_bracket(&df, &dg)? == whole.plain_bracket(&df, &dg)?;
    let x_field = split.hamiltonian_vector(&unit(0))?;
    report.push(
        check(
            "theta_bracket",
            THETA,
            xy == r(1) && u_any.is_zero() && plain_ok && x_field == scalar::neg_vec(&unit(1)),
        )
        .with("x_y", CheckValue::scalar(&xy))
        .with("u_any", CheckValue::scalar(&u_any)),
    );

    shifted_checks(&mut report, &p, &s, &points[0], &mut sampler)?;
    Ok(report)
}
