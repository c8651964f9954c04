use std::sync::Arc;

use symred_core::groupoid::CotangentPoint;
use symred_core::lie::{build_chevalley, principal_sl2, CartanType, GroupElement};
use symred_core::linalg::{Matrix, Subspace};
use symred_core::poisson::{PointedSubmanifoldModel, PoissonPointModel};
use symred_core::reduction::{
    decomposition_form_check, dimension_formula_check, invariant_reduction_groupoid_check,
    kernel_identity_check, orbit_form, orbit_product_symplecto_check, orbit_tangent_in_universal,
    universality_identity_check, Arrow, DecompositionLift, HamiltonianLinearModel, OrbitProductTangent,
    SplittingData,
};
use symred_core::scalar::{concat, neg_vec, unit_vec, zero_vec};
use symred_core::{Error, LieAlgebraQ, Rational};

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn sl(n: usize) -> Arc<LieAlgebraQ> {
    Arc::new(build_chevalley(CartanType::A, n - 1).unwrap())
}

fn el(g: &LieAlgebraQ, label: &str) -> Vec<Rational> {
    g.element(label).unwrap()
}

fn h_orbit(g: &Arc<LieAlgebraQ>) -> PointedSubmanifoldModel<Rational> {
    let words = [GroupElement::unipotent(g, &el(g, "e1"), &r(1)).unwrap()];
    PointedSubmanifoldModel::coadjoint_orbit(g.clone(), g.flat(&el(g, "h1")), &words).unwrap()
}

fn minus_h(g: &LieAlgebraQ) -> Subspace<Rational> {
    Subspace::span(6, &[concat(&neg_vec(&el(g, "h1")), &zero_vec(3))])
}

#[test]
fn orbit_tangents() {
    let g = sl(2);
    let p = PoissonPointModel::kks(g.clone());
    let slice = PointedSubmanifoldModel::slodowy_slice(g.clone(), principal_sl2(&g).unwrap()).unwrap();
    let e = CotangentPoint::at_identity(g.flat(&el(&g, "e1")));
    assert!(orbit_tangent_in_universal(&p, &slice, &e).unwrap().is_zero());

    let xi = g.flat(&el(&g, "h1"));
    let at = CotangentPoint::at_identity(xi.clone());
    assert_eq!(orbit_tangent_in_universal(&p, &h_orbit(&g), &at).unwrap(), minus_h(&g));
    let single = PointedSubmanifoldModel::singleton(xi);
    assert_eq!(orbit_tangent_in_universal(&p, &single, &at).unwrap(), minus_h(&g));
}

#[test]
fn quotient_dimensions() {
    let g = sl(2);
    let p = PoissonPointModel::kks(g.clone());
    let slice = PointedSubmanifoldModel::slodowy_slice(g.clone(), principal_sl2(&g).unwrap()).unwrap();
    let xi = g.flat(&el(&g, "h1"));
    let cases = [
        (slice.clone(), CotangentPoint::at_identity(slice.slice_point(&[r(3)]).unwrap()), 4, 0),
        (h_orbit(&g), CotangentPoint::at_identity(xi.clone()), 4, 1),
        (PointedSubmanifoldModel::singleton(xi.clone()), CotangentPoint::at_identity(xi), 2, 1),
    ];
    for (s, point, quotient, kernel) in cases {
        let k = kernel_identity_check(&p, &s, &point).unwrap();
        assert!(k.holds, "{}", s.kind_name());
        assert_eq!((k.model.quotient_dim, k.model.kernel.dim()), (quotient, kernel));
        assert!(k.model.is_nondegenerate() && k.model.is_antisymmetric() && k.model.form_descends());
        let f = dimension_formula_check(&p, &s, &k.model).unwrap();
        assert!(f.holds());
    }
}

#[test]
fn kernel_identity_away_from_the_identity() {
    let g = sl(2);
    let p = PoissonPointModel::kks(g.clone());
    let slice = PointedSubmanifoldModel::slodowy_slice(g.clone(), principal_sl2(&g).unwrap()).unwrap();
    let u = GroupElement::unipotent(&g, &el(&g, "f1"), &q(-3, 2)).unwrap();
    let point = CotangentPoint::new(u, slice.slice_point(&[q(1, 5)]).unwrap());
    let k = kernel_identity_check(&p, &slice, &point).unwrap();
    assert!(k.holds);
    assert_eq!(k.model.quotient_dim, 4);
}

#[test]
fn diagonal_slice_dimension() {
    let g = sl(2);
    let triple = principal_sl2(&g).unwrap();
    let slice = PointedSubmanifoldModel::slodowy_slice(g.clone(), triple.clone()).unwrap();
    let xi = slice.slice_point(&[q(5, 2)]).unwrap();
    let pt = [xi.clone(), xi].concat();
    let diag = PointedSubmanifoldModel::diagonal_slodowy(g.clone(), triple, 2)
        .unwrap()
        .with_samples(vec![pt.clone()])
        .unwrap();
    let p = PoissonPointModel::kks(Arc::new(g.direct_sum_power(2).unwrap()));
    let k = kernel_identity_check(&p, &diag, &CotangentPoint::at_identity(pt)).unwrap();
    assert!(k.holds);
    let f = dimension_formula_check(&p, &diag, &k.model).unwrap();
    assert_eq!((f.dim_g, f.dim_s, f.rank_l, f.quotient_dim), (6, 1, 1, 6));
}

#[test]
fn decomposition_form() {
    let g = sl(3);
    let p = PoissonPointModel::kks(g.clone());
    let class = PointedSubmanifoldModel::decomposition_class(g.clone(), 4).unwrap();
    let x: Vec<Rational> = [1, 2, 0, 0, 0, 0, 0, 0].iter().map(|&n| r(n)).collect();
    let k = kernel_identity_check(&p, &class, &CotangentPoint::at_identity(g.flat(&x))).unwrap();
    assert!(k.holds);
    assert_eq!(k.model.quotient_dim, 10);

    // K = 6 tr on sl(3).
    let trace_form = |a: &[Rational], b: &[Rational]| {
        r(6) * g.to_matrix(a).unwrap().mul(&g.to_matrix(b).unwrap()).trace()
    };
    let lift = |u: Vec<Rational>, zeta: Vec<Rational>| DecompositionLift { u, zeta };
    let (u, zeta) = (el(&g, "f01"), el(&g, "e01"));
    let pure = (lift(u.clone(), zero_vec(8)), lift(zero_vec(8), zeta.clone()));
    let c = decomposition_form_check(&g, &x, &k.model, &[pure]).unwrap();
    assert!(c.all_agree());
    assert_eq!(c.values[0].0, -trace_form(&u, &zeta));
    assert_eq!(c.values[0].0, r(-6));

    let z = el(&g, "f11");
    let same = (lift(u.clone(), z.clone()), lift(u, z));
    let c = decomposition_form_check(&g, &x, &k.model, &[same]).unwrap();
    assert_eq!(c.values[0], (r(0), r(0)));

    let bad = (lift(zero_vec(8), el(&g, "e10")), lift(zero_vec(8), zero_vec(8)));
    assert!(matches!(
        decomposition_form_check(&g, &x, &k.model, &[bad]),
        Err(Error::LiftNotValid(_))
    ));
    assert!(decomposition_form_check(&g, &el(&g, "e10"), &k.model, &[]).is_err());
}

#[test]
fn orbit_form_values() {
    // β_η(ad_p^* η, ad_q^* η) = −η([p, q]).
    let g = sl(2);
    let eta = g.flat(&el(&g, "h1"));
    let (e, f) = (el(&g, "e1"), el(&g, "f1"));
    let a = g.ad_star(&e, &eta).unwrap();
    let b = g.ad_star(&f, &eta).unwrap();
    let expected = -g.killing_form(&el(&g, "h1"), &g.bracket(&e, &f).unwrap());
    assert_eq!(orbit_form(&g, &eta, &a, &b).unwrap(), expected);
    assert_eq!(expected, r(-8));
    assert!(matches!(orbit_form(&g, &eta, &a, &eta), Err(Error::LiftNotValid(_))));
}

#[test]
fn orbit_products() {
    let g = sl(2);
    let xi = g.flat(&el(&g, "h1"));
    let t = |x: Vec<Rational>, y: Vec<Rational>| OrbitProductTangent { x, y };
    let (h, e, f) = (el(&g, "h1"), el(&g, "e1"), el(&g, "f1"));
    let pairs = vec![
        (t(e.clone(), e.clone()), t(f.clone(), f.clone())),
        (t(e.clone(), f.clone()), t(h.clone(), e.clone())),
        (t(f.clone(), zero_vec(3)), t(zero_vec(3), e.clone())),
    ];
    let u = GroupElement::unipotent(&g, &e, &r(1)).unwrap();
    assert_eq!(u.matrix(), &Matrix::from_i64_rows(&[&[1, 1], &[0, 1]]));
    for point in [CotangentPoint::at_identity(xi.clone()), CotangentPoint::new(u, xi)] {
        let c = orbit_product_symplecto_check(&g, &point, &pairs).unwrap();
        assert!(c.all_agree());
        assert!(c.values.iter().any(|(a, _)| *a != r(0)));
    }
}

#[test]
fn universality() {
    let g = sl(2);
    let slice = PointedSubmanifoldModel::slodowy_slice(g.clone(), principal_sl2(&g).unwrap()).unwrap();
    let xi = slice.slice_point(&[r(2)]).unwrap();
    let m = HamiltonianLinearModel::cotangent_right(&g, &xi);
    let tangent = slice.tangent_basis(&xi).unwrap();
    let allowed = tangent.preimage(&m.dmu);
    assert_eq!(allowed.dim(), 4);
    let b = allowed.basis();
    let pairs: Vec<_> = (0..b.len())
        .flat_map(|i| (0..b.len()).map(move |j| (i, j)))
        .map(|(i, j)| (b[i].clone(), b[j].clone()))
        .collect();
    assert!(universality_identity_check(&g, &m, &tangent, &pairs).unwrap().all_agree());
    let outside = (unit_vec(6, 3), unit_vec(6, 0));
    assert!(matches!(
        universality_identity_check(&g, &m, &tangent, &[outside]),
        Err(Error::LiftNotValid(_))
    ));

    // A model with dμ = 0.
    let flat = HamiltonianLinearModel {
        omega: Matrix::from_i64_rows(&[&[0, 1], &[-1, 0]]),
        dmu: Matrix::zeros(3, 2),
        xi: zero_vec(3),
    };
    let c = universality_identity_check(&g, &flat, &Subspace::zero(3), &[(unit_vec(2, 0), unit_vec(2, 1))]).unwrap();
    assert_eq!(c.values, vec![(r(1), r(1))]);

    let eta = g.flat(&el(&g, "h1"));
    let orbit = HamiltonianLinearModel::coadjoint_orbit(&g, &eta).unwrap();
    assert_eq!(orbit.omega.rank(), 2);
    let c = universality_identity_check(&g, &orbit, &Subspace::zero(3), &[(zero_vec(2), zero_vec(2))]).unwrap();
    assert!(c.all_agree());
}

fn c4_form() -> Matrix<Rational> {
    Matrix::from_i64_rows(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]])
}

#[test]
fn theta_brackets() {
    let w = c4_form();
    let whole = SplittingData::new(w.clone(), &(0..4).map(|i| unit_vec(4, i)).collect::<Vec<_>>()).unwrap();
    let df = vec![r(1), q(2, 3), r(0), r(-1)];
    let dg = vec![r(0), r(5), q(-1, 2), r(2)];
    assert_eq!(whole.theta_bracket(&df, &dg).unwrap(), whole.plain_bracket(&df, &dg).unwrap());

    // E = span{∂x, ∂y}, E^ω = span{∂u, ∂v}; X_dx = −∂y, X_dy = ∂x, X_du = −∂v.
    let e = SplittingData::new(w, &[unit_vec(4, 0), unit_vec(4, 1)]).unwrap();
    assert_eq!(e.e_perp(), &Subspace::span(4, &[unit_vec(4, 2), unit_vec(4, 3)]));
    let (dx, dy, du, dv) = (unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2), unit_vec(4, 3));
    assert_eq!(e.hamiltonian_vector(&dx).unwrap(), neg_vec(&unit_vec(4, 1)));
    assert_eq!(e.hamiltonian_vector(&du).unwrap(), neg_vec(&unit_vec(4, 3)));
    assert_eq!(e.theta_bracket(&dx, &dy).unwrap(), r(1));
    assert_eq!(e.theta_bracket(&dx, &du).unwrap(), r(0));
    assert_eq!(e.theta_bracket(&du, &dv).unwrap(), r(0));
    assert_eq!(e.plain_bracket(&du, &dv).unwrap(), r(1));
    assert!(e.project(&du).iter().all(|c| *c == r(0)));
}

#[test]
fn splitting_must_be_symplectic() {
    assert!(matches!(SplittingData::new(c4_form(), &[unit_vec(4, 0)]), Err(Error::SplittingInvalid)));
    let sym = Matrix::<Rational>::identity(2);
    assert!(matches!(SplittingData::new(sym, &[unit_vec(2, 0)]), Err(Error::InvalidArgument(_))));
}

#[test]
fn arrows_compose() {
    let g = sl(2);
    let xi = vec![r(1), r(2), r(3)];
    let u = GroupElement::unipotent(&g, &el(&g, "e1"), &r(1)).unwrap();
    let v = GroupElement::unipotent(&g, &el(&g, "f1"), &q(1, 2)).unwrap();
    let b = Arrow { g: v, xi: xi.clone() };
    let a = Arrow { g: u.clone(), xi: b.source(&g).unwrap() };
    let ab = a.compose(&g, &b).unwrap();
    assert_eq!(ab.target(), b.target());
    assert_eq!(ab.source(&g).unwrap(), a.source(&g).unwrap());
    let stray = Arrow { g: u, xi };
    assert!(matches!(stray.compose(&g, &stray), Err(Error::NotComposable)));
}

#[test]
fn casimir_groupoid_axioms() {
    let g = sl(2);
    let p = PoissonPointModel::kks(g.clone());
    let cas = PointedSubmanifoldModel::casimir_level_set(g.clone(), r(8)).unwrap();
    let xi = g.flat(&el(&g, "h1"));
    let els = [
        GroupElement::unipotent(&g, &el(&g, "e1"), &r(2)).unwrap(),
        GroupElement::torus(&[r(3), q(1, 3)]).unwrap(),
        GroupElement::unipotent(&g, &el(&g, "f1"), &q(-1, 4)).unwrap(),
    ];
    let c = Arrow { g: els[2].clone(), xi };
    let b = Arrow { xi: c.source(&g).unwrap(), g: els[1].clone() };
    let a = Arrow { xi: b.source(&g).unwrap(), g: els[0].clone() };
    let axioms = invariant_reduction_groupoid_check(&p, &cas, &[(a.clone(), b, c)]).unwrap();
    assert!(axioms.all());

    let slice = PointedSubmanifoldModel::slodowy_slice(g.clone(), principal_sl2(&g).unwrap()).unwrap();
    assert!(matches!(
        invariant_reduction_groupoid_check(&p, &slice, &[]),
        Err(Error::KindNotInvariant(_))
    ));
    let broken = (a.clone(), a.clone(), a);
    assert!(matches!(
        invariant_reduction_groupoid_check(&p, &cas, &[broken]),
        Err(Error::NotComposable)
    ));
}
