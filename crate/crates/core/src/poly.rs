//! Dense univariate polynomials, coefficients listed from degree 0 upward.

use crate::linalg::Matrix;
use crate::scalar::Scalar;

fn trim<F: Scalar>(mut p: Vec<F>) -> Vec<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Characteristic polynomial `det(tI − M)` by the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial<F: Scalar>(m: &Matrix<F>) -> Vec<F> {
    assert!(m.is_square());
    let n = m.rows();
    let mut coeffs = vec![F::zero(); n + 1];
    coeffs[n] = F::one();
    let mut aux = Matrix::zeros(n, n);
    for k in 1..=n {
        // M_k = M·M_{k-1} + c_{n-k+1} I, c_{n-k} = −tr(M·M_k)/k
        let mut next = m.mul(&aux);
        for i in 0..n {
            next[(i, i)] = next[(i, i)].clone() + coeffs[n - k + 1].clone();
        }
        aux = next;
        coeffs[n - k] = -m.mul(&aux).trace() / F::from_i64(k as i64);
    }
    coeffs
}

pub fn derivative<F: Scalar>(p: &[F]) -> Vec<F> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| F::from_i64(i as i64) * c.clone())
        .collect()
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub fn div_rem<F: Scalar>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![F::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap().clone() / lead.clone();
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].clone() - c.clone() * bc.clone();
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

pub fn gcd<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// `p / gcd(p, p')`, the product of the distinct irreducible factors.
pub fn squarefree_part<F: Scalar>(p: &[F]) -> Vec<F> {
    let g = gcd(p, &derivative(p));
    div_rem(p, &g).0
}

/// `p(M)` by Horner's rule.
pub fn eval_matrix<F: Scalar>(p: &[F], m: &Matrix<F>) -> Matrix<F> {
    let n = m.rows();
    let mut acc = Matrix::zeros(n, n);
    for c in p.iter().rev() {
        acc = m.mul(&acc).add(&Matrix::identity(n).scale(c));
    }
    acc
}

/// A matrix over a field of characteristic zero is semisimple exactly when
/// the squarefree part of its characteristic polynomial annihilates it.
pub fn is_semisimple<F: Scalar>(m: &Matrix<F>) -> bool {
    eval_matrix(&squarefree_part(&characteristic_polynomial(m)), m).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn p(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| Q::from_i64(x)).collect()
    }

    #[test]
    fn char_poly_of_companion_like_matrix() {
        let m = Matrix::<Q>::from_i64_rows(&[&[2, 1], &[0, 3]]);
        // (t-2)(t-3) = t² − 5t + 6
        assert_eq!(characteristic_polynomial(&m), p(&[6, -5, 1]));
    }

    #[test]
    fn squarefree_and_gcd() {
        // (t-1)²(t+2) = t³ − 3t + 2
        let f = p(&[2, -3, 0, 1]);
        let s = squarefree_part(&f);
        // monic up to scale: (t-1)(t+2) = t² + t − 2
        let lead = s.last().unwrap().clone();
        let monic: Vec<Q> = s.iter().map(|c| c.clone() / lead.clone()).collect();
        assert_eq!(monic, p(&[-2, 1, 1]));
    }

    #[test]
    fn semisimplicity() {
        let nilpotent = Matrix::<Q>::from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert!(!is_semisimple(&nilpotent));
        let diag = Matrix::<Q>::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]]);
        assert!(is_semisimple(&diag));
        let jordan = Matrix::<Q>::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert!(!is_semisimple(&jordan));
        assert!(is_semisimple(&Matrix::<Q>::zeros(3, 3)));
    }
}
