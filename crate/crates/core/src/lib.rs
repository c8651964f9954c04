pub mod error;
pub mod groupoid;
pub mod lie;
pub mod linalg;
pub mod poisson;
pub mod poly;
pub mod reduction;
pub mod report;
pub mod scalar;
pub mod scenarios;
pub mod shifted;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;

pub type LieAlgebraQ = lie::LieAlgebra<Rational>;
pub type MatrixQ = linalg::Matrix<Rational>;
pub type SubspaceQ = linalg::Subspace<Rational>;
pub type PoissonPointModelQ = poisson::PoissonPointModel<Rational>;
pub type PointedSubmanifoldModelQ = poisson::PointedSubmanifoldModel<Rational>;
