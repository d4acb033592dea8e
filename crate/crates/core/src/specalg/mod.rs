//! Dense complex linear algebra for walk Hamiltonians.
//!
//! Everything here is binary64 and dense. The largest matrices we build in
//! practice are a few hundred vertices wide, so no sparse storage is needed.

mod eigen;
mod fourier;
mod matrix;

pub use eigen::{evolve_spectral, hermitian_eigendecomposition, SpectralDecomposition};
pub use fourier::{circulant_decomposition, circulant_eigenvalues, dft_matrix, kronecker};
pub use matrix::{ComplexMatrix, ComplexVector, HERMITIAN_TOL};
