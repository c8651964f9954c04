use std::sync::Arc;

use super::{shifted_checks, ScenarioOptions};
use crate::error::{Error, Result};
use crate::groupoid::{lie_functor_check, unit_intersection_fiber, CotangentPoint};
use crate::lie::{build_chevalley, CartanType, LieAlgebra};
use crate::linalg::Subspace;
use crate::poisson::{algebroid_fiber, PointedSubmanifoldModel, PoissonPointModel};
use crate::reduction::{
    dimension_formula_check, invariant_reduction_groupoid_check, kernel_identity_check, Arrow,
};
use crate::report::{check, CheckValue, ScenarioReport};
use crate::scalar;
use crate::Rational;

const FIBER: &str = "(T_ξS)° = span ξ^♯ on a level set of the Casimir";
const STABLE: &str = "ad*_{ξ^♯} ξ = 0";
const GROUPOID: &str = "stabilizer subgroupoid tangent = Lie(L_S), isotropic";
const KERNEL: &str = "T_p(H·p) = T_pN ∩ T_pN^Ω";
const DIMENSION: &str = "dim 𝔐 = dim g + dim S − rk L_S";
const REDUCED: &str = "dim 𝔐 = dim g + (dim g − 1) − 1";
const ARROWS: &str = "s[(g,ξ)] = Ad_g^*ξ, t[(g,ξ)] = ξ, (g,ξ)·(h,η) = (gh,η)";

/// A point of `{⟨ξ, ξ⟩ = level}`: `h_1^♭` by default, otherwise
/// `(e_α + t f_α)^♭` with `t = level / 2⟨e_α, f_α⟩`.
pub fn casimir_seed(g: &LieAlgebra<Rational>, level: Option<&Rational>) -> Result<Vec<Rational>> {
    let rd = g.root_data().ok_or(Error::NoRootData)?;
    let x = match level {
        None => g.basis_vector(0),
        Some(c) => {
            let e = g.basis_vector(rd.root_vectors[0]);
            let f = g.basis_vector(rd.root_vectors[rd.negative(0)]);
            let t = c.clone() / (Rational::from_integer(2.into()) * g.killing_form(&e, &f));
            scalar::add_vec(&e, &scalar::scale_vec(&t, &f))
        }
    };
    Ok(g.flat(&x))
}

pub fn casimir_sphere(
    ty: CartanType,
    rank: usize,
    level: Option<Rational>,
    opts: &ScenarioOptions,
) -> Result<ScenarioReport> {
    let mut sampler = opts.sampler();
    let g = Arc::new(build_chevalley::<Rational>(ty, rank)?);
    let d = g.dim();
    let seed = casimir_seed(&g, level.as_ref())?;
    let c = g.dual_killing(&seed, &seed)?;
    let p = PoissonPointModel::kks(g.clone());
    let s0 = PointedSubmanifoldModel::casimir_level_set(g.clone(), c.clone())?;

    let mut points = vec![seed.clone()];
    for _ in 0..opts.sample_count.max(2) {
        let w = sampler.unipotent_word(&g, 2)?;
        let pt = g.coadjoint_group_action(&w, &seed)?;
        if !points.contains(&pt) {
            points.push(pt);
        }
    }
    let s = s0.with_samples(points.clone())?;

    let mut report = ScenarioReport::new("casimir_sphere")
        .with_param("cartan_type", ty.to_string())
        .with_param("rank", rank)
        .with_param("level", CheckValue::scalar(&c));
    let target = opts.expected("reduced_dim", 2 * d as i64 - 2);

    for xi in &points {
        let fiber = algebroid_fiber(&p, &s, xi)?;
        let expected = Subspace::span(d, &[g.sharp(xi)?]);
        report.push(
            check("casimir_fiber", FIBER, fiber.fiber == expected && fiber.rank() == 1)
                .with("point", CheckValue::vector(xi))
                .with("rank", fiber.rank()),
        );
        report.push(check("stable", STABLE, fiber.contained_in_centralizer));

        let tangent = s.tangent_basis(xi)?;
        let gf = unit_intersection_fiber(&g, xi, &tangent)?;
        report.push(
            check(
                "groupoid_fiber",
                GROUPOID,
                gf.isotropic && lie_functor_check(&gf, &fiber)?,
            )
            .with("dim", gf.dim()),
        );

        let ki = kernel_identity_check(&p, &s, &CotangentPoint::at_identity(xi.clone()))?;
        report.push(check("kernel_identity", KERNEL, ki.holds).with("kernel_dim", ki.model.kernel.dim()));
        let m = &ki.model;
        let df = dimension_formula_check(&p, &s, m)?;
        report.push(
            check("dimension_formula", DIMENSION, df.holds())
                .with("dim_g", df.dim_g)
                .with("dim_s", df.dim_s)
                .with("rank_l", df.rank_l),
        );
        report.push(
            check(
                "reduced_dim",
                REDUCED,
                m.quotient_dim as i64 == target && m.is_nondegenerate() && m.form_descends(),
            )
            .with("value", m.quotient_dim)
            .with("expected", target),
        );
    }

    let mut triples = Vec::new();
    for _ in 0..opts.sample_count.max(1) {
        let (g1, g2, g3) = (
            sampler.unipotent_word(&g, 2)?,
            sampler.unipotent_word(&g, 2)?,
            sampler.unipotent_word(&g, 2)?,
        );
        let c_arrow = Arrow { g: g3, xi: seed.clone() };
        let b_arrow = Arrow { xi: c_arrow.source(&g)?, g: g2 };
        let a_arrow = Arrow { xi: b_arrow.source(&g)?, g: g1 };
        triples.push((a_arrow, b_arrow, c_arrow));
    }
    let axioms = invariant_reduction_groupoid_check(&p, &s, &triples)?;
    report.push(
        check("groupoid_axioms", ARROWS, axioms.all())
            .with("source", axioms.source_of_product)
            .with("target", axioms.target_of_product)
            .with("associative", axioms.associative)
            .with("unit", axioms.unit_law)
            .with("normality", axioms.normality)
            .with("triples", triples.len()),
    );

    shifted_checks(&mut report, &p, &s, &seed, &mut sampler)?;
    Ok(report)
}
