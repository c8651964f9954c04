use std::sync::Arc;

use super::{r, shifted_checks, ScenarioOptions};
use crate::groupoid::CotangentPoint;
use crate::lie::{build_chevalley, CartanType};
use crate::linalg::Subspace;
use crate::poisson::{
    algebroid_fiber, pre_poisson_sample_check, stabilizer_subalgebra, PointedSubmanifoldModel,
    PoissonPointModel,
};
use crate::reduction::{
    decomposition_form_check, dimension_formula_check, kernel_identity_check, DecompositionLift,
};
use crate::report::{check, sampled_check, CheckValue, ScenarioReport};
use crate::scalar;
use crate::{Rational, Result};

const TANGENT: &str = "T_xD = z(g_x) + [g, x], codimension three in g";
const ANNIHILATOR: &str = "(T_xD)^⊥ = [g_x, g_x]";
const SL2: &str = "[g_x, g_x] ≅ sl₂";
const STABLE: &str = "decomposition classes are G-invariant, hence stable";
const KERNEL: &str = "T_p(H·p) = T_pN ∩ T_pN^Ω";
const DIMENSION: &str = "dim 𝔐 = dim g + dim S − rk L_S";
const REDUCED: &str = "dim 𝔐_{G,g°_irr} = 2 dim G − 6";
const FORM: &str = "ω((u₁,ζ₁),(u₂,ζ₂)) = −⟨u₁,ζ₂⟩ + ⟨u₂,ζ₁⟩ − ⟨x,[u₁,u₂]⟩";
const PRE_POISSON: &str = "σ⁻¹(TS) ∩ TS° has constant rank";

/// The class of `diag(a, a, −2a)` in `sl(3)`.
pub fn decomposition_class_sl3(opts: &ScenarioOptions) -> Result<ScenarioReport> {
    let mut sampler = opts.sampler();
    let g = Arc::new(build_chevalley::<Rational>(CartanType::A, 2)?);
    let d = g.dim();
    let p = PoissonPointModel::kks(g.clone());

    // diag(a, a, −2a) = a·h1 + 2a·h2; one Weyl-permuted sample diag(−2a, a, a).
    let diag = |c1: i64, c2: i64| {
        let mut x = scalar::zero_vec::<Rational>(d);
        x[0] = r(c1);
        x[1] = r(c2);
        x
    };
    let xs: Vec<Vec<Rational>> = vec![diag(1, 2), diag(2, 4), diag(-3, -6), diag(-2, -1)];
    let points: Vec<Vec<Rational>> = xs.iter().map(|x| g.flat(x)).collect();
    let s = PointedSubmanifoldModel::decomposition_class(g.clone(), 4)?
        .with_samples(points.clone())?;

    let mut report = ScenarioReport::new("decomposition_class_sl3");
    let target = opts.expected("reduced_dim", 10);
    let pair_count = 20.max(opts.sample_count);

    for (x, xi) in xs.iter().zip(&points) {
        let tangent = s.tangent_basis(xi)?;
        report.push(
            check("class_tangent", TANGENT, tangent.dim() == 5)
                .with("x", CheckValue::vector(x))
                .with("dim", tangent.dim()),
        );

        let h = g.derived(&g.centralizer(x)?);
        let annihilator = tangent.annihilator();
        report.push(
            check("annihilator_is_derived", ANNIHILATOR, annihilator == h)
                .with("dim", annihilator.dim())
                .with("basis", CheckValue::basis(&annihilator)),
        );
        let table_rank = Subspace::span(
            d,
            &h.basis()
                .iter()
                .flat_map(|a| h.basis().iter().map(move |b| (a, b)))
                .map(|(a, b)| g.br(a, b))
                .collect::<Vec<_>>(),
        )
        .dim();
        report.push(
            check("derived_is_sl2", SL2, h.dim() == 3 && table_rank == 3)
                .with("bracket_table_rank", table_rank),
        );

        let fiber = algebroid_fiber(&p, &s, xi)?;
        let stab = stabilizer_subalgebra(&p, &s, xi)?;
        report.push(
            check(
                "stable",
                STABLE,
                fiber.contained_in_centralizer && stab.bracket_closed && stab.matches_fiber,
            )
            .with("rank", fiber.rank()),
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
                m.quotient_dim as i64 == target && m.is_nondegenerate(),
            )
            .with("value", m.quotient_dim)
            .with("expected", target),
        );

        let perp = h.image(g.killing()).annihilator();
        let mut lift = || DecompositionLift {
            u: sampler.vector(d),
            zeta: sampler.combination(perp.basis(), d),
        };
        let mut pairs: Vec<_> = (0..pair_count).map(|_| (lift(), lift())).collect();
        let u = pairs[0].0.u.clone();
        let zeta = pairs[0].1.zeta.clone();
        pairs.push((
            DecompositionLift { u: u.clone(), zeta: scalar::zero_vec(d) },
            DecompositionLift { u: scalar::zero_vec(d), zeta: zeta.clone() },
        ));
        let cmp = decomposition_form_check(&g, x, m, &pairs)?;
        let last = cmp.values.last().cloned();
        let pure = last.is_some_and(|(a, b)| {
            let expect = -g.killing_form(&u, &zeta);
            a == expect && b == expect
        });
        report.push(
            check("decomposition_form", FORM, cmp.all_agree() && pure)
                .with("pairs", cmp.len())
                .with(
                    "first_value",
                    CheckValue::scalar(&cmp.values[0].0),
                ),
        );
    }

    let witness = pre_poisson_sample_check(&p, &s)?;
    report.push(
        sampled_check("pre_poisson", PRE_POISSON, witness.constant_rank)
            .with("ranks", witness.ranks.clone()),
    );
    shifted_checks(&mut report, &p, &s, &points[0], &mut sampler)?;
    Ok(report)
}
