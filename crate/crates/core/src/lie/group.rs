use std::fmt;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// An invertible matrix in the realization of a Lie algebra, with the word
/// that produced it.
#[derive(Clone, PartialEq)]
pub struct GroupElement<F> {
    matrix: Matrix<F>,
    inverse: Matrix<F>,
    provenance: String,
}

impl<F: Scalar> GroupElement<F> {
    pub fn identity(n: usize) -> Self {
        GroupElement {
            matrix: Matrix::identity(n),
            inverse: Matrix::identity(n),
            provenance: "1".into(),
        }
    }

    pub fn from_matrix(matrix: Matrix<F>, provenance: impl Into<String>) -> Result<Self> {
        let inverse = matrix.inverse()?;
        Ok(GroupElement {
            matrix,
            inverse,
            provenance: provenance.into(),
        })
    }

    /// `exp(t·x)` for `x` acting nilpotently in the realization.
    pub fn unipotent(algebra: &LieAlgebra<F>, x: &[F], t: &F) -> Result<Self> {
        let m = algebra.to_matrix(x)?.scale(t);
        let n = m.rows();
        let mut term = Matrix::identity(n);
        let mut sum = Matrix::identity(n);
        for k in 1..=n {
            term = term.mul(&m).scale(&(F::one() / F::from_i64(k as i64)));
            if term.is_zero() {
                let label = nonzero_label(algebra, x);
                return Self::from_matrix(sum, format!("exp({t}·{label})"));
            }
            sum = sum.add(&term);
        }
        Err(Error::InvalidArgument(
            "exponential needs a nilpotent direction".into(),
        ))
    }

    /// Diagonal torus element; every entry must be nonzero.
    pub fn torus(diagonal: &[F]) -> Result<Self> {
        if diagonal.iter().any(|d| d.is_zero()) {
            return Err(Error::NotInvertible);
        }
        let n = diagonal.len();
        let mut m = Matrix::zeros(n, n);
        let mut inv = Matrix::zeros(n, n);
        for (i, d) in diagonal.iter().enumerate() {
            m[(i, i)] = d.clone();
            inv[(i, i)] = F::one() / d.clone();
        }
        let entries: Vec<String> = diagonal.iter().map(ToString::to_string).collect();
        Ok(GroupElement {
            matrix: m,
            inverse: inv,
            provenance: format!("diag({})", entries.join(",")),
        })
    }

    pub fn product(&self, other: &Self) -> Self {
        GroupElement {
            matrix: self.matrix.mul(&other.matrix),
            inverse: other.inverse.mul(&self.inverse),
            provenance: format!("{}·{}", self.provenance, other.provenance),
        }
    }

    pub fn inverse(&self) -> Self {
        GroupElement {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
            provenance: format!("({})⁻¹", self.provenance),
        }
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &Matrix<F> {
        &self.inverse
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.size())
    }
}

fn nonzero_label<F: Scalar>(algebra: &LieAlgebra<F>, x: &[F]) -> String {
    let terms: Vec<String> = x
        .iter()
        .zip(algebra.labels())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c}{l}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

impl<F: fmt::Debug> fmt::Debug for GroupElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({}) {:?}", self.provenance, self.matrix)
    }
}
