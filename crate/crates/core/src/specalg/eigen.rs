use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::{ComplexMatrix, ComplexVector};
use crate::{Error, Result};

/// States handed to [`evolve_spectral`] must have unit norm within this.
const STATE_NORM_TOL: f64 = 1e-10;

/// Eigenvalues (ascending) and an orthonormal eigenvector basis of a Hermitian matrix.
///
/// Column `j` of `eigenvectors` belongs to `eigenvalues[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl SpectralDecomposition {
    /// Sorts the pairs ascending by eigenvalue; equal values keep their input order.
    pub fn new(eigenvalues: Vec<f64>, eigenvectors: ComplexMatrix) -> Result<Self> {
        let n = eigenvalues.len();
        if !eigenvectors.is_square() || eigenvectors.rows() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: eigenvectors.cols(),
            });
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| eigenvalues[i].total_cmp(&eigenvalues[j]));
        let sorted_values = order.iter().map(|&i| eigenvalues[i]).collect();
        let sorted_vectors = ComplexMatrix::from_fn(n, n, |r, c| eigenvectors[(r, order[c])]);
        Ok(SpectralDecomposition {
            eigenvalues: sorted_values,
            eigenvectors: sorted_vectors,
        })
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    /// `alpha_j = <z_j|psi0>`.
    pub fn overlaps(&self, psi0: &ComplexVector) -> Result<Vec<Complex64>> {
        if psi0.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: psi0.len(),
            });
        }
        let n = self.dim();
        Ok((0..n)
            .map(|j| {
                (0..n)
                    .map(|k| self.eigenvectors[(k, j)].conj() * psi0[k])
                    .sum()
            })
            .collect())
    }

    /// `Z diag(lambda) Z^dagger`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.dim();
        let z = &self.eigenvectors;
        ComplexMatrix::from_fn(n, n, |r, c| {
            (0..n)
                .map(|j| z[(r, j)] * self.eigenvalues[j] * z[(c, j)].conj())
                .sum()
        })
    }

    /// Max entrywise deviation of `Z^dagger Z` from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        let n = self.dim();
        let gram = self
            .eigenvectors
            .adjoint()
            .matmul(&self.eigenvectors)
            .expect("square eigenvector matrix");
        gram.max_abs_diff(&ComplexMatrix::identity(n))
    }
}

/// Dense eigendecomposition of a matrix flagged Hermitian.
pub fn hermitian_eigendecomposition(h: &ComplexMatrix) -> Result<SpectralDecomposition> {
    if !h.is_hermitian() {
        return Err(Error::ContractViolation(
            "eigendecomposition requires a matrix flagged Hermitian".into(),
        ));
    }
    let n = h.rows();
    if n == 0 {
        return Err(Error::InvalidDimension("empty matrix".into()));
    }
    let dense = DMatrix::from_fn(n, n, |r, c| h[(r, c)]);
    let eig = SymmetricEigen::new(dense);
    let values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, c)]);
    SpectralDecomposition::new(values, vectors)
}

/// `|psi_t> = sum_j alpha_j exp(-i lambda_j t) |z_j>` with `alpha_j = <z_j|psi0>`.
pub fn evolve_spectral(
    decomp: &SpectralDecomposition,
    t: f64,
    psi0: &ComplexVector,
) -> Result<ComplexVector> {
    if !psi0.is_normalized(STATE_NORM_TOL) {
        return Err(Error::ContractViolation(format!(
            "initial state has squared norm {}",
            psi0.norm_sqr()
        )));
    }
    let alphas = decomp.overlaps(psi0)?;
    let n = decomp.dim();
    let z = decomp.eigenvectors();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (j, (&alpha, &lambda)) in alphas.iter().zip(decomp.eigenvalues()).enumerate() {
        if alpha == Complex64::new(0.0, 0.0) {
            continue;
        }
        let coeff = alpha * Complex64::from_polar(1.0, -lambda * t);
        for (k, slot) in out.iter_mut().enumerate() {
            *slot += coeff * z[(k, j)];
        }
    }
    Ok(ComplexVector::new(out))
}
