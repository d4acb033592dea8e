use std::f64::consts::PI;

use num_complex::Complex64;

use super::{ComplexMatrix, ComplexVector, SpectralDecomposition};
use crate::{Error, Result};

/// Imaginary parts of symmetric-circulant eigenvalues above this are a contract violation.
const REAL_SPECTRUM_TOL: f64 = 1e-10;

/// `omega^(p)` for `omega = exp(2 pi i / n)`, with the exponent reduced mod `n` first.
fn root_of_unity(n: usize, p: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * (p % n) as f64 / n as f64)
}

/// The unitary Fourier matrix `F = V(omega) / sqrt(n)`, entry `(j, k) = omega^(jk) / sqrt(n)`.
pub fn dft_matrix(n: usize) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(Error::InvalidDimension("Fourier matrix needs n >= 1".into()));
    }
    let scale = 1.0 / (n as f64).sqrt();
    Ok(ComplexMatrix::from_fn(n, n, |j, k| root_of_unity(n, j * k) * scale))
}

/// Eigenvalues of the circulant matrix whose 0th column is `first_column`.
///
/// Returns `V(omega) f`, i.e. the diagonal of `F C F^dagger`. Entry `j` is the
/// eigenvalue belonging to column `j` of `F^dagger`; for symmetric circulants
/// that column spans the same eigenspace as `|omega_j>`.
pub fn circulant_eigenvalues(first_column: &ComplexVector) -> Result<ComplexVector> {
    let n = first_column.len();
    if n == 0 {
        return Err(Error::InvalidDimension("circulant needs at least one entry".into()));
    }
    let values = (0..n)
        .map(|j| {
            first_column
                .iter()
                .enumerate()
                .map(|(k, f)| root_of_unity(n, j * k) * f)
                .sum()
        })
        .collect::<Vec<Complex64>>();
    Ok(ComplexVector::new(values))
}

/// Full spectral decomposition of a real symmetric circulant via the Fourier basis.
pub fn circulant_decomposition(first_column: &[f64]) -> Result<SpectralDecomposition> {
    let n = first_column.len();
    if n == 0 {
        return Err(Error::InvalidDimension("circulant needs at least one entry".into()));
    }
    for m in 1..n {
        if first_column[m] != first_column[n - m] {
            return Err(Error::ContractViolation(format!(
                "circulant first column is not symmetric at offset {m}"
            )));
        }
    }
    let eigenvalues = circulant_eigenvalues(&ComplexVector::from_real(first_column))?;
    let mut real = Vec::with_capacity(n);
    for (j, z) in eigenvalues.iter().enumerate() {
        if z.im.abs() >= REAL_SPECTRUM_TOL {
            return Err(Error::ContractViolation(format!(
                "symmetric circulant eigenvalue {j} has imaginary part {:e}",
                z.im
            )));
        }
        real.push(z.re);
    }
    let basis = dft_matrix(n)?.adjoint();
    SpectralDecomposition::new(real, basis)
}

/// Kronecker product `A (x) B`; row and column counts multiply.
pub fn kronecker(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.rows() == 0 || a.cols() == 0 || b.rows() == 0 || b.cols() == 0 {
        return Err(Error::InvalidDimension("Kronecker operands must be nonempty".into()));
    }
    let (br, bc) = (b.rows(), b.cols());
    let out = ComplexMatrix::from_fn(a.rows() * br, a.cols() * bc, |r, c| {
        a[(r / br, c / bc)] * b[(r % br, c % bc)]
    });
    if a.is_hermitian() && b.is_hermitian() {
        out.into_hermitian()
    } else {
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn dft_of_one_is_identity() {
        let f = dft_matrix(1).unwrap();
        assert_eq!(f.as_slice(), &[Complex64::new(1.0, 0.0)]);
    }

    #[test]
    fn dft_of_two_is_hadamard() {
        let f = dft_matrix(2).unwrap();
        let h = ComplexMatrix::from_real(
            2,
            2,
            &[FRAC_1_SQRT_2, FRAC_1_SQRT_2, FRAC_1_SQRT_2, -FRAC_1_SQRT_2],
        )
        .unwrap();
        assert!(f.max_abs_diff(&h) < 1e-15);
    }

    #[test]
    fn dft_rejects_zero() {
        assert!(matches!(dft_matrix(0), Err(Error::InvalidDimension(_))));
    }

    #[test]
    fn identity_circulant_has_unit_spectrum() {
        let mut f = vec![0.0; 7];
        f[0] = 1.0;
        let ev = circulant_eigenvalues(&ComplexVector::from_real(&f)).unwrap();
        for z in ev.iter() {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn complete_graph_circulant_spectrum() {
        let n = 6;
        let mut f = vec![1.0; n];
        f[0] = 0.0;
        let ev = circulant_eigenvalues(&ComplexVector::from_real(&f)).unwrap();
        assert!((ev[0] - Complex64::new((n - 1) as f64, 0.0)).norm() < 1e-12);
        for j in 1..n {
            assert!((ev[j] + 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn cycle_circulant_spectrum() {
        let n = 9;
        let mut f = vec![0.0; n];
        f[1] = 1.0;
        f[n - 1] = 1.0;
        let ev = circulant_eigenvalues(&ComplexVector::from_real(&f)).unwrap();
        for j in 0..n {
            let expected = 2.0 * (2.0 * PI * j as f64 / n as f64).cos();
            assert!((ev[j] - expected).norm() < 1e-12);
        }
    }

    #[test]
    fn asymmetric_column_is_rejected_by_decomposition() {
        assert!(matches!(
            circulant_decomposition(&[0.0, 1.0, 0.0]),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn kronecker_of_identities() {
        let k = kronecker(&ComplexMatrix::identity(2), &ComplexMatrix::identity(2)).unwrap();
        assert!(k.is_hermitian());
        assert_eq!(k.max_abs_diff(&ComplexMatrix::identity(4)), 0.0);
    }

    #[test]
    fn kronecker_gives_four_cycle() {
        // (J2 - I2) (x) J2, block order: {0,1} and {2,3}
        let x = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let j = ComplexMatrix::from_real(2, 2, &[1.0; 4]).unwrap();
        let k = kronecker(&x, &j).unwrap();
        #[rustfmt::skip]
        let expected = ComplexMatrix::from_real(4, 4, &[
            0.0, 0.0, 1.0, 1.0,
            0.0, 0.0, 1.0, 1.0,
            1.0, 1.0, 0.0, 0.0,
            1.0, 1.0, 0.0, 0.0,
        ]).unwrap();
        assert_eq!(k.max_abs_diff(&expected), 0.0);
    }

    #[test]
    fn kronecker_rejects_empty() {
        let e = ComplexMatrix::zeros(0, 0);
        assert!(kronecker(&e, &ComplexMatrix::identity(1)).is_err());
    }
}
