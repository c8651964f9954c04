//! Exact scalar fields.
//!
//! Every computation in this crate is generic over [`Scalar`], an exact field
//! of rational numbers. Rank and nullspace computations are only meaningful
//! when equality is exact, so floating point types deliberately do not
//! implement the trait.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, Signed, ToPrimitive, Zero};

/// An exact field of characteristic zero containing the rationals.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(value: i64) -> Self;

    /// `numer / denom`; panics when `denom == 0`.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn to_big_rational(&self) -> BigRational;

    /// Converts back from an arbitrary-precision rational, failing when the
    /// value does not fit the representation.
    fn from_big_rational(value: &BigRational) -> Option<Self>;

    /// Exact square root when it exists in the field.
    fn sqrt_exact(&self) -> Option<Self> {
        let q = self.to_big_rational();
        if q.is_negative() {
            return None;
        }
        let n = q.numer().sqrt();
        let d = q.denom().sqrt();
        if &n * &n == *q.numer() && &d * &d == *q.denom() {
            Self::from_big_rational(&BigRational::new(n, d))
        } else {
            None
        }
    }
}

impl Scalar for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn to_big_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_big_rational(value: &BigRational) -> Option<Self> {
        Some(value.clone())
    }
}

impl Scalar for Rational64 {
    fn from_i64(value: i64) -> Self {
        Rational64::from_integer(value)
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Rational64::new(numer, denom)
    }

    fn to_big_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn from_big_rational(value: &BigRational) -> Option<Self> {
        Some(Rational64::new(value.numer().to_i64()?, value.denom().to_i64()?))
    }
}

/// Formats a scalar as `"p/q"` in lowest terms (integers carry `/1`).
pub fn to_fraction_string<F: Scalar>(value: &F) -> String {
    let q = value.to_big_rational();
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"p/q"` or a plain integer `"p"`.
pub fn parse_fraction<F: Scalar>(text: &str) -> Option<F> {
    let text = text.trim();
    let q = match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(text.parse().ok()?),
    };
    F::from_big_rational(&q)
}

pub fn is_zero_vec<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + x.clone() * y.clone();
        }
    }
    acc
}

pub fn add_vec<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub_vec<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale_vec<F: Scalar>(s: &F, a: &[F]) -> Vec<F> {
    a.iter().map(|x| s.clone() * x.clone()).collect()
}

pub fn neg_vec<F: Scalar>(a: &[F]) -> Vec<F> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn zero_vec<F: Scalar>(n: usize) -> Vec<F> {
    vec![F::zero(); n]
}

pub fn unit_vec<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = zero_vec(n);
    v[i] = F::one();
    v
}

/// Linear combination `Σ c_i v_i`; all vectors must share a length.
pub fn combine<F: Scalar>(coeffs: &[F], vectors: &[Vec<F>], len: usize) -> Vec<F> {
    let mut out = zero_vec::<F>(len);
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
    }
    out
}

/// Concatenates two coordinate vectors.
pub fn concat<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    v
}
