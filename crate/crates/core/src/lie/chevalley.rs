//! Chevalley bases for the split simple algebras of small rank.
//!
//! Each type is realized by matrices: `sl(n+1)`, `so(2n+1)`, `sp(2n)`,
//! `so(8)`, and `G2` as the triality-fixed subalgebra of `so(8)`. From the
//! simple generators `e_i, f_i` every positive root vector is defined by
//! `e_{β+α_i} = [e_i, e_β] / (p+1)` and `e_{-(β+α_i)} = −[f_i, e_{-β}] / (p+1)`,
//! where `p` is the largest integer with `β − p α_i` a root. This fixes all
//! signs and makes `[e_α, e_{-α}] = h_α` the coroot.

use std::fmt;
use std::str::FromStr;

use super::roots::{self, Extension};
use super::{LieAlgebra, MatrixRealization, RootData};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    G2,
}

pub const SUPPORTED_TYPES: &[(CartanType, usize)] = &[
    (CartanType::A, 1),
    (CartanType::A, 2),
    (CartanType::A, 3),
    (CartanType::A, 4),
    (CartanType::B, 2),
    (CartanType::B, 3),
    (CartanType::B, 4),
    (CartanType::C, 2),
    (CartanType::C, 3),
    (CartanType::C, 4),
    (CartanType::D, 4),
    (CartanType::G2, 2),
];

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "G" | "G2" => Ok(CartanType::G2),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }
}

/// Expected Cartan matrix, `A[i][j] = α_j(h_i)`.
pub fn cartan_matrix(ty: CartanType, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        a[i][i] = 2;
        if i + 1 < rank {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    match ty {
        CartanType::A => {}
        CartanType::B => a[rank - 1][rank - 2] = -2,
        CartanType::C => a[rank - 2][rank - 1] = -2,
        CartanType::D => {
            // Branch node 1 joined to 0, 2, 3.
            a[2][3] = 0;
            a[3][2] = 0;
            a[1][3] = -1;
            a[3][1] = -1;
        }
        CartanType::G2 => {
            a[0][1] = -3;
        }
    }
    a
}

fn unit<F: Scalar>(n: usize, i: usize, j: usize) -> Matrix<F> {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = F::one();
    m
}

/// `E_{ab} − E_{cd}`.
fn diff<F: Scalar>(n: usize, a: (usize, usize), b: (usize, usize)) -> Matrix<F> {
    unit::<F>(n, a.0, a.1).sub(&unit(n, b.0, b.1))
}

/// Matrices of a simple root vector `e_i` and its partner `f_i`.
type EfPair<F> = (Matrix<F>, Matrix<F>);

/// Simple generators `(e_i, f_i)` and the matrix size.
fn generators<F: Scalar>(ty: CartanType, rank: usize) -> (usize, Vec<EfPair<F>>) {
    match ty {
        CartanType::A => {
            let n = rank + 1;
            let gens = (0..rank)
                .map(|i| (unit(n, i, i + 1), unit(n, i + 1, i)))
                .collect();
            (n, gens)
        }
        CartanType::B => {
            // so(2n+1) preserving the antidiagonal form.
            let n = 2 * rank + 1;
            let last = n - 1;
            let gens = (0..rank)
                .map(|i| {
                    let e = diff::<F>(n, (i, i + 1), (last - i - 1, last - i));
                    let f = e.transpose();
                    if i + 1 == rank {
                        let two = F::from_i64(2);
                        (e, f.scale(&two))
                    } else {
                        (e, f)
                    }
                })
                .collect();
            (n, gens)
        }
        CartanType::C => {
            // sp(2n) for J = [[0, I], [−I, 0]].
            let n = 2 * rank;
            let gens = (0..rank)
                .map(|i| {
                    let e = if i + 1 == rank {
                        unit::<F>(n, rank - 1, n - 1)
                    } else {
                        diff::<F>(n, (i, i + 1), (rank + i + 1, rank + i))
                    };
                    let f = e.transpose();
                    (e, f)
                })
                .collect();
            (n, gens)
        }
        CartanType::D => {
            let n = 2 * rank;
            let last = n - 1;
            let mut gens: Vec<EfPair<F>> = (0..rank - 1)
                .map(|i| {
                    let e = diff::<F>(n, (i, i + 1), (last - i - 1, last - i));
                    let f = e.transpose();
                    (e, f)
                })
                .collect();
            let e = diff::<F>(n, (rank - 2, rank), (rank - 1, rank + 1));
            let f = e.transpose();
            gens.push((e, f));
            (n, gens)
        }
        CartanType::G2 => {
            let (n, d4) = generators::<F>(CartanType::D, 4);
            let fold = |k: fn(&EfPair<F>) -> &Matrix<F>| {
                k(&d4[0]).add(k(&d4[2])).add(k(&d4[3]))
            };
            let short = (fold(|p| &p.0), fold(|p| &p.1));
            (n, vec![short, d4[1].clone()])
        }
    }
}

fn supported(ty: CartanType, rank: usize) -> bool {
    SUPPORTED_TYPES.contains(&(ty, rank))
}

/// Builds the Chevalley basis `h_1, …, h_ℓ, e_α (α > 0), e_{-α} (α > 0)`.
///
/// Labels are `h{i}`, `e{coeffs}` and `f{coeffs}` with the root written by
/// its simple-root coefficients, e.g. `e11` for `α_1 + α_2`.
pub fn build_chevalley<F: Scalar>(ty: CartanType, rank: usize) -> Result<LieAlgebra<F>> {
    if !supported(ty, rank) {
        return Err(Error::UnsupportedType(format!("{ty}{rank}")));
    }
    let (size, gens) = generators::<F>(ty, rank);
    let hs: Vec<Matrix<F>> = gens.iter().map(|(e, f)| e.commutator(f)).collect();

    let cartan = measured_cartan(&hs, &gens)?;
    if cartan != cartan_matrix(ty, rank) {
        return Err(Error::InvalidStructureConstants(format!(
            "realization of {ty}{rank} has Cartan matrix {cartan:?}"
        )));
    }

    let pos = roots::positive_roots(&cartan);
    let mut up: Vec<Matrix<F>> = Vec::with_capacity(pos.roots.len());
    let mut down: Vec<Matrix<F>> = Vec::with_capacity(pos.roots.len());
    for ext in &pos.extensions {
        match ext {
            None => {
                let i = up.len();
                up.push(gens[i].0.clone());
                down.push(gens[i].1.clone());
            }
            Some(Extension { simple, beta, p }) => {
                let s = F::one() / F::from_i64(p + 1);
                up.push(gens[*simple].0.commutator(&up[*beta]).scale(&s));
                down.push(gens[*simple].1.commutator(&down[*beta]).scale(&-s));
            }
        }
    }

    let mut labels: Vec<String> = (1..=rank).map(|i| format!("h{i}")).collect();
    let name = |r: &[i64]| r.iter().map(ToString::to_string).collect::<String>();
    labels.extend(pos.roots.iter().map(|r| format!("e{}", name(r))));
    labels.extend(pos.roots.iter().map(|r| format!("f{}", name(r))));

    let mut matrices = hs;
    matrices.extend(up);
    matrices.extend(down);
    let rep = MatrixRealization::new(size, matrices)?;
    let dim = labels.len();

    let mut constants = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in i + 1..dim {
            let c = rep.coordinates(&rep.matrices()[i].commutator(&rep.matrices()[j]))?;
            let entries: Vec<(usize, F)> = c
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            constants[j * dim + i] = entries.iter().map(|(k, v)| (*k, -v.clone())).collect();
            constants[i * dim + j] = entries;
        }
    }

    let npos = pos.roots.len();
    let mut all_roots = pos.roots.clone();
    all_roots.extend(pos.roots.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
    let root_vectors: Vec<usize> = (rank..dim).collect();
    let coroots = (0..2 * npos)
        .map(|a| {
            let (x, y) = if a < npos {
                (rank + a, rank + npos + a)
            } else {
                (rank + a, rank + a - npos)
            };
            rep.coordinates(&rep.matrices()[x].commutator(&rep.matrices()[y]))
        })
        .collect::<Result<Vec<_>>>()?;
    let root_data = RootData {
        cartan_type: ty,
        cartan,
        roots: all_roots,
        root_vectors,
        coroots,
    };
    LieAlgebra::from_sparse(labels, rank, constants, Some(root_data), Some(rep))
}

/// Reads `A[i][j]` off `[h_i, e_j] = A[i][j] e_j`.
fn measured_cartan<F: Scalar>(
    hs: &[Matrix<F>],
    gens: &[EfPair<F>],
) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::InvalidStructureConstants("generators are not a Chevalley system".into());
    hs.iter()
        .map(|h| {
            gens.iter()
                .map(|(e, _)| {
                    let c = h.commutator(e);
                    let (r, s) = (0..e.rows())
                        .flat_map(|r| (0..e.cols()).map(move |s| (r, s)))
                        .find(|&(r, s)| !e[(r, s)].is_zero())
                        .ok_or_else(bad)?;
                    let ratio = c[(r, s)].clone() / e[(r, s)].clone();
                    if c != e.scale(&ratio) {
                        return Err(bad());
                    }
                    let q = ratio.to_big_rational();
                    if !q.is_integer() {
                        return Err(bad());
                    }
                    i64::try_from(q.to_integer()).map_err(|_| bad())
                })
                .collect()
        })
        .collect()
}
