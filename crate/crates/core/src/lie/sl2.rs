use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Triple<F> {
    pub e: Vec<F>,
    pub h: Vec<F>,
    pub f: Vec<F>,
}

impl<F: Scalar> Sl2Triple<F> {
    /// `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
    pub fn satisfies_relations(&self, g: &LieAlgebra<F>) -> bool {
        let two = F::from_i64(2);
        g.br(&self.e, &self.f) == self.h
            && g.br(&self.h, &self.e) == scalar::scale_vec(&two, &self.e)
            && g.br(&self.h, &self.f) == scalar::scale_vec(&-two, &self.f)
    }

    /// Every element of the triple has a centralizer of dimension `rank`.
    pub fn is_regular(&self, g: &LieAlgebra<F>) -> Result<bool> {
        for x in [&self.e, &self.h, &self.f] {
            if g.centralizer(x)?.dim() != g.rank() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The principal triple: `e = Σ e_{α_i}`, `h` the Cartan element with
/// `α_i(h) = 2`, and `f` in the span of the `e_{-α_i}` with `[e, f] = h`.
pub fn principal_sl2<F: Scalar>(g: &LieAlgebra<F>) -> Result<Sl2Triple<F>> {
    let rd = g.root_data().ok_or(Error::NoRootData)?;
    let rank = g.rank();
    let n = g.dim();
    let simple_up: Vec<usize> = (0..rank).map(|i| rd.root_vectors[i]).collect();
    let simple_down: Vec<usize> = (0..rank).map(|i| rd.root_vectors[rd.negative(i)]).collect();

    let mut e = scalar::zero_vec::<F>(n);
    for &i in &simple_up {
        e[i] = F::one();
    }

    // α_j(Σ c_i h_i) = Σ_i c_i A[i][j] = 2
    let cartan_t = Matrix::from_rows(
        rank,
        &(0..rank)
            .map(|j| (0..rank).map(|i| F::from_i64(rd.cartan[i][j])).collect())
            .collect::<Vec<_>>(),
    );
    let c = cartan_t
        .solve(&vec![F::from_i64(2); rank])
        .ok_or_else(|| Error::SolveFailure("α_i(h) = 2".into()))?;
    let mut h = scalar::zero_vec::<F>(n);
    h[..rank].clone_from_slice(&c);

    let columns: Vec<Vec<F>> = simple_down
        .iter()
        .map(|&i| g.br(&e, &g.basis_vector(i)))
        .collect();
    let coeffs = Matrix::from_columns(n, &columns)
        .solve(&h)
        .ok_or_else(|| Error::SolveFailure("[e, f] = h".into()))?;
    let mut f = scalar::zero_vec::<F>(n);
    for (&i, c) in simple_down.iter().zip(coeffs) {
        f[i] = c;
    }

    let triple = Sl2Triple { e, h, f };
    if !triple.satisfies_relations(g) {
        return Err(Error::SolveFailure("principal triple relations".into()));
    }
    Ok(triple)
}
