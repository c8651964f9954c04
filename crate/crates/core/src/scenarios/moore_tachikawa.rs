use std::sync::Arc;

use super::{q, r, shifted_checks, ScenarioOptions};
use crate::error::Error;
use crate::groupoid::{omega_matrix, CotangentPoint};
use crate::lie::{build_chevalley, principal_sl2, CartanType};
use crate::linalg::{gram, Matrix, Subspace};
use crate::poisson::{
    algebroid_fiber, coisotropic_check, poisson_transversal_check, pre_poisson_sample_check,
    PointedSubmanifoldModel, PoissonPointModel,
};
use crate::reduction::{dimension_formula_check, kernel_identity_check};
use crate::report::{check, sampled_check, CheckValue, ScenarioReport};
use crate::scalar;
use crate::{Rational, Result};

const TRANSVERSAL: &str = "g = g_f ⊕ [g, x]";
const FIBER: &str = "L_{Δ_nS} = {(y_i) ∈ (g_x)^n : y₁ + ⋯ + y_n = 0}";
const RANK: &str = "rk L_{Δ_nS} = (n − 1)ℓ";
const STABLE: &str = "Δ_nS ⊆ (g*)^n is stable";
const KERNEL: &str = "T_p(H·p) = T_pN ∩ T_pN^Ω";
const FORM: &str = "π*ω̄ = i*Ω with ω̄ nondegenerate";
const DIMENSION: &str = "dim 𝔐 = dim g + dim S − rk L_S";
const REDUCED: &str = "η_G(C_2) = T*G, η_SL₂(C_3) = C² ⊗ C² ⊗ C²";
const COISOTROPIC: &str = "N ×_c ⋯ ×_c N is coisotropic in N^n";
const PRE_POISSON: &str = "σ⁻¹(TS) ∩ TS° has constant rank";

/// Principal slice `S` in `g*`, its diagonal copy `Δ_nS ⊆ (g*)^n` and the
/// reduced space of `T*G^n` along it, checked at rational slice points.
pub fn slodowy_moore_tachikawa(
    ty: CartanType,
    rank: usize,
    n: usize,
    opts: &ScenarioOptions,
) -> Result<ScenarioReport> {
    if ty != CartanType::A || !(1..=3).contains(&rank) {
        return Err(Error::UnsupportedType(format!("{ty}{rank}")));
    }
    if !(1..=4).contains(&n) {
        return Err(Error::InvalidArgument("n must lie in 1..=4".into()));
    }
    let mut sampler = opts.sampler();
    let g = Arc::new(build_chevalley::<Rational>(ty, rank)?);
    let d = g.dim();
    let triple = principal_sl2(&g)?;
    let g_f = g.centralizer(&triple.f)?;
    let gn = Arc::new(g.direct_sum_power(n)?);
    let p1 = PoissonPointModel::kks(g.clone());
    let pn = PoissonPointModel::kks(gn);
    let single = PointedSubmanifoldModel::slodowy_slice(g.clone(), triple.clone())?;
    let ell = g_f.dim();

    let mut coeffs: Vec<Vec<Rational>> = vec![
        vec![r(0); ell],
        vec![r(1); ell],
        (0..ell)
            .map(|k| if k % 2 == 0 { q(-1, 2) } else { r(2) })
            .collect(),
    ];
    coeffs.extend((0..opts.sample_count).map(|_| sampler.vector(ell)));
    let points: Vec<Vec<Rational>> = coeffs
        .iter()
        .map(|c| single.slice_point(c))
        .collect::<Result<_>>()?;
    let diagonal: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| (0..n).flat_map(|_| p.iter().cloned()).collect())
        .collect();
    let s = PointedSubmanifoldModel::diagonal_slodowy(g.clone(), triple, n)?
        .with_samples(diagonal.clone())?;

    let mut report = ScenarioReport::new("slodowy_moore_tachikawa")
        .with_param("cartan_type", ty.to_string())
        .with_param("rank", rank)
        .with_param("n", n);

    let expected_dim = (n * d + ell - (n - 1) * ell) as i64;
    for (xi1, xi) in points.iter().zip(&diagonal) {
        let x = g.sharp(xi1)?;
        let image = g.image_of_ad(&x)?;
        let direct = g_f.intersect(&image).is_zero() && g_f.dim() + image.dim() == d;
        let transversal = poisson_transversal_check(&p1, &single, xi1)?;
        report.push(
            check("slice_transversality", TRANSVERSAL, direct && transversal)
                .with("point", CheckValue::vector(xi1))
                .with("dim_g_f", g_f.dim())
                .with("dim_ad_image", image.dim()),
        );

        let fiber = algebroid_fiber(&pn, &s, xi)?;
        let g_x = g.centralizer(&x)?;
        let mut sums = Vec::new();
        for i in 1..n {
            for z in g_x.basis() {
                let mut v = scalar::zero_vec(n * d);
                v[..d].clone_from_slice(z);
                v[i * d..(i + 1) * d].clone_from_slice(&scalar::neg_vec(z));
                sums.push(v);
            }
        }
        let zero_sum = Subspace::span(n * d, &sums);
        report.push(
            check("moore_tachikawa_fiber", FIBER, fiber.fiber == zero_sum)
                .with("point", CheckValue::vector(xi1))
                .with("fiber_rank", fiber.rank())
                .with("zero_sum_dim", zero_sum.dim())
                .with("centralizer_dim", g_x.dim()),
        );
        report.push(
            check("fiber_rank", RANK, fiber.rank() == (n - 1) * ell)
                .with("value", fiber.rank())
                .with("expected", (n - 1) * ell),
        );
        report.push(check("stable", STABLE, fiber.contained_in_centralizer));

        let ki = kernel_identity_check(&pn, &s, &CotangentPoint::at_identity(xi.clone()))?;
        report.push(
            check("kernel_identity", KERNEL, ki.holds)
                .with("kernel_dim", ki.model.kernel.dim())
                .with("orbit_tangent_dim", ki.orbit_tangent.dim()),
        );
        let m = &ki.model;
        report.push(
            check(
                "reduced_form",
                FORM,
                m.is_antisymmetric() && m.is_nondegenerate() && m.form_descends(),
            )
            .with("rank", m.reduced_form.rank()),
        );
        let df = dimension_formula_check(&pn, &s, m)?;
        report.push(
            check(
                "dimension_formula",
                DIMENSION,
                df.holds() && df.predicted() as i64 == expected_dim,
            )
            .with("dim_g", df.dim_g)
            .with("dim_s", df.dim_s)
            .with("rank_l", df.rank_l)
            .with("quotient_dim", df.quotient_dim),
        );
        let target = opts.expected("reduced_dim", expected_dim);
        report.push(
            check("reduced_dim", REDUCED, m.quotient_dim as i64 == target)
                .with("value", m.quotient_dim)
                .with("expected", target),
        );

        report.push(
            check("coisotropic_fiber_product", COISOTROPIC, fiber_product_coisotropic(
                &g, xi1, &single, n,
            )?)
            .with("n", n),
        );
    }

    let witness = pre_poisson_sample_check(&pn, &s)?;
    report.push(
        sampled_check("pre_poisson", PRE_POISSON, witness.constant_rank)
            .with("ranks", witness.ranks.clone()),
    );
    shifted_checks(&mut report, &pn, &s, &diagonal[1], &mut sampler)?;
    Ok(report)
}

/// `T(N ×_c ⋯ ×_c N) = {(u_i, ζ) : ζ ∈ T_ξS}` is coisotropic in `T(N^n)`,
/// where `T N = g × T_ξS` carries the restriction of `Ω`.
fn fiber_product_coisotropic(
    g: &crate::lie::LieAlgebra<Rational>,
    xi: &[Rational],
    s: &PointedSubmanifoldModel<Rational>,
    n: usize,
) -> Result<bool> {
    let d = g.dim();
    let t = s.tangent_basis(xi)?;
    let k = t.dim();
    let block = d + k;
    let omega = omega_matrix(g, xi);
    let local: Vec<Vec<Rational>> = (0..d)
        .map(|i| scalar::unit_vec(2 * d, i))
        .chain(t.basis().iter().map(|v| scalar::concat(&scalar::zero_vec(d), v)))
        .collect();
    let small = gram(&local, |a, b| omega.bilinear(a, b));
    let big = Matrix::block_diagonal(&vec![small; n]);
    let mut w: Vec<Vec<Rational>> = Vec::new();
    for c in 0..n {
        for i in 0..d {
            w.push(scalar::unit_vec(n * block, c * block + i));
        }
    }
    for j in 0..k {
        let mut v = scalar::zero_vec(n * block);
        for c in 0..n {
            v[c * block + d + j] = r(1);
        }
        w.push(v);
    }
    coisotropic_check(&big, &Subspace::span(n * block, &w))
}
