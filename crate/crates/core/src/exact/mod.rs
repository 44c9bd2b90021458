//! Exact linear algebra over the Gaussian rationals Q(i).

mod gauss_int;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use matrix::{rref, MatrixGR, VectorGR};
pub use poly::{char_poly, gaussian_roots, GaussianRoots, PolyGR};
pub use scalar::GaussianRational;
pub use subspace::{intersect, kernel, SubspaceGR};
