use num_traits::{One, Zero};
use symred_core::lie::{build_chevalley, principal_sl2, CartanType, GroupElement};
use symred_core::lie::roots::reflection_closure;
use symred_core::linalg::Matrix;
use symred_core::scalar::scale_vec;
use symred_core::{Error, LieAlgebraQ, Rational};

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn alg(ty: CartanType, rank: usize) -> LieAlgebraQ {
    build_chevalley(ty, rank).unwrap()
}

fn el(g: &LieAlgebraQ, label: &str) -> Vec<Rational> {
    g.element(label).unwrap()
}

#[test]
fn dimensions_and_ranks() {
    let sl2 = alg(CartanType::A, 1);
    assert_eq!((sl2.dim(), sl2.rank()), (3, 1));
    for (ty, rank) in [(CartanType::A, 2), (CartanType::B, 3), (CartanType::G2, 2), (CartanType::D, 4)] {
        let g = alg(ty, rank);
        // Independent root count: close the simple roots under reflections.
        let cartan = symred_core::lie::cartan_matrix(ty, rank);
        let roots = reflection_closure(&cartan).len();
        assert_eq!(g.dim(), roots + rank, "{ty}{rank}");
        assert_eq!(g.root_data().unwrap().roots.len(), g.dim() - rank);
    }
    assert_eq!(alg(CartanType::A, 2).dim(), 8);
    assert_eq!(alg(CartanType::G2, 2).dim(), 14);
}

#[test]
fn unsupported_types() {
    assert!(matches!(build_chevalley::<Rational>(CartanType::A, 5), Err(Error::UnsupportedType(_))));
    assert!(matches!(build_chevalley::<Rational>(CartanType::D, 3), Err(Error::UnsupportedType(_))));
    assert!(matches!(build_chevalley::<Rational>(CartanType::G2, 3), Err(Error::UnsupportedType(_))));
}

#[test]
fn sl2_relations() {
    let g = alg(CartanType::A, 1);
    let (h, e, f) = (el(&g, "h1"), el(&g, "e1"), el(&g, "f1"));
    assert_eq!(g.bracket(&e, &f).unwrap(), h);
    assert_eq!(g.bracket(&h, &e).unwrap(), scale_vec(&r(2), &e));
    assert_eq!(g.bracket(&h, &f).unwrap(), scale_vec(&r(-2), &f));
    let x = vec![r(3), Rational::new(1.into(), 2.into()), r(-7)];
    assert!(g.bracket(&x, &x).unwrap().iter().all(Zero::is_zero));
    assert!(matches!(g.bracket(&x, &[r(1)]), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn sl3_bracket_matches_matrix_commutator() {
    let g = alg(CartanType::A, 2);
    let (a1, a2, a12) = (el(&g, "e10"), el(&g, "e01"), el(&g, "e11"));
    let m = |rows: &[&[i64]]| Matrix::<Rational>::from_i64_rows(rows);
    // e_α1 = E12, e_α2 = E23 in the standard realization.
    assert_eq!(g.to_matrix(&a1).unwrap(), m(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]));
    assert_eq!(g.to_matrix(&a2).unwrap(), m(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]));
    let e13 = m(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
    let br = g.bracket(&a1, &a2).unwrap();
    assert_eq!(g.to_matrix(&br).unwrap(), e13);
    assert!(br == a12 || br == scale_vec(&r(-1), &a12));
}

#[test]
fn killing_values_sl2() {
    let g = alg(CartanType::A, 1);
    let (h, e, f) = (el(&g, "h1"), el(&g, "e1"), el(&g, "f1"));
    assert_eq!(g.killing_form(&h, &h), r(8));
    assert_eq!(g.killing_form(&e, &f), r(4));
    assert_eq!(g.killing_form(&e, &e), r(0));
    assert_eq!(g.killing_form(&h, &e), r(0));
}

#[test]
fn killing_is_trace_form_in_type_a() {
    // K(x, y) = 2n tr(xy) on sl(n).
    for n in 2..=4 {
        let g = alg(CartanType::A, n - 1);
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let (x, y) = (g.basis_vector(i), g.basis_vector(j));
                let trace = g.to_matrix(&x).unwrap().mul(&g.to_matrix(&y).unwrap()).trace();
                assert_eq!(g.killing_form(&x, &y), r(2 * n as i64) * trace);
            }
        }
    }
}

#[test]
fn soundness_across_types() {
    for (ty, rank) in [
        (CartanType::A, 1),
        (CartanType::A, 2),
        (CartanType::A, 3),
        (CartanType::B, 2),
        (CartanType::C, 3),
        (CartanType::G2, 2),
    ] {
        let g = alg(ty, rank);
        assert!(g.jacobi_holds(), "{ty}{rank}");
        assert!(g.killing_invariant(), "{ty}{rank}");
        assert!(!g.killing_determinant().is_zero(), "{ty}{rank}");
    }
}

#[test]
fn ad_star_examples() {
    let g = alg(CartanType::A, 1);
    let (h, e) = (el(&g, "h1"), el(&g, "e1"));
    assert!(g.ad_star(&e, &[r(0), r(0), r(0)]).unwrap().iter().all(Zero::is_zero));
    // −h^♭([e, ·]) on the basis (h, e, f): 0, 0, −h^♭(h) = −8; equals −2 e^♭.
    let v = g.ad_star(&e, &g.flat(&h)).unwrap();
    assert_eq!(v, vec![r(0), r(0), r(-8)]);
    assert_eq!(v, scale_vec(&r(-2), &g.flat(&e)));
}

#[test]
fn centralizers() {
    let g = alg(CartanType::A, 1);
    assert_eq!(g.centralizer_dual(&[r(0), r(0), r(0)]).unwrap().dim(), 3);
    let c = g.centralizer_dual(&g.flat(&el(&g, "h1"))).unwrap();
    assert_eq!(c.dim(), 1);
    assert!(c.contains(&el(&g, "h1")));

    let g3 = alg(CartanType::A, 2);
    let x: Vec<Rational> = [1, 2, 0, 0, 0, 0, 0, 0].iter().map(|&n| r(n)).collect();
    assert_eq!(g3.to_matrix(&x).unwrap(), Matrix::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]]));
    assert_eq!(g3.centralizer_dual(&g3.flat(&x)).unwrap().dim(), 4);
}

#[test]
fn principal_triples() {
    let g = alg(CartanType::A, 1);
    let t = principal_sl2(&g).unwrap();
    assert_eq!((t.e.clone(), t.h.clone(), t.f.clone()), (el(&g, "e1"), el(&g, "h1"), el(&g, "f1")));

    let g3 = alg(CartanType::A, 2);
    let t3 = principal_sl2(&g3).unwrap();
    // α_i(h) = 2 against the A2 Cartan matrix gives h = 2h₁ + 2h₂.
    assert_eq!(&t3.h[..2], &[r(2), r(2)]);
    assert!(t3.satisfies_relations(&g3));
    assert!(t3.is_regular(&g3).unwrap());
    assert_eq!(g3.centralizer(&t3.e).unwrap().dim(), 2);

    for (ty, rank) in [(CartanType::B, 2), (CartanType::G2, 2), (CartanType::A, 3)] {
        let g = alg(ty, rank);
        let t = principal_sl2(&g).unwrap();
        assert!(t.satisfies_relations(&g) && t.is_regular(&g).unwrap(), "{ty}{rank}");
    }
}

#[test]
fn adjoint_action_of_unipotent() {
    let g = alg(CartanType::A, 1);
    let (h, e, f) = (el(&g, "h1"), el(&g, "e1"), el(&g, "f1"));
    let u = GroupElement::unipotent(&g, &e, &Rational::one()).unwrap();
    assert_eq!(u.matrix(), &Matrix::from_i64_rows(&[&[1, 1], &[0, 1]]));
    let expected: Vec<Rational> = (0..3).map(|i| f[i].clone() + h[i].clone() - e[i].clone()).collect();
    assert_eq!(g.adjoint_group_action(&u, &f).unwrap(), expected);

    let id = GroupElement::identity(2);
    assert_eq!(g.adjoint_group_action(&id, &f).unwrap(), f);
    assert_eq!(g.coadjoint_group_action(&id, &g.flat(&h)).unwrap(), g.flat(&h));
}

#[test]
fn killing_is_ad_invariant_under_group() {
    let g = alg(CartanType::A, 2);
    let e = el(&g, "e11");
    let u = GroupElement::unipotent(&g, &e, &r(3)).unwrap();
    let t = GroupElement::torus(&[r(2), r(-1), Rational::new((-1).into(), 2.into())]).unwrap();
    let w = u.product(&t);
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let (x, y) = (g.basis_vector(i), g.basis_vector(j));
            let (ax, ay) = (g.adjoint_group_action(&w, &x).unwrap(), g.adjoint_group_action(&w, &y).unwrap());
            assert_eq!(g.killing_form(&ax, &ay), g.killing_form(&x, &y));
        }
    }
}

#[test]
fn torus_elements_must_be_invertible() {
    let singular = GroupElement::<Rational>::torus(&[Rational::zero(), Rational::one()]);
    assert!(matches!(singular, Err(Error::NotInvertible)));
}
