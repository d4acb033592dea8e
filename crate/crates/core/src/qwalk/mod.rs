//! Continuous-time quantum walk evolution.
//!
//! Walks use `H = A/d` and start from `|start>` (vertex 0 by default). The
//! generic engine picks a spectral route by family: Fourier diagonalization
//! for circulant graphs, Kronecker-structured eigenbases for multipartite
//! graphs and hypercubes, and a dense Hermitian eigensolver otherwise.

mod bessel;
mod closed_form;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::graphs::{hamiltonian, Family, Graph, Hamiltonian, Normalization};
use crate::specalg::{
    circulant_decomposition, dft_matrix, evolve_spectral, hermitian_eigendecomposition, kronecker,
    ComplexMatrix, ComplexVector, SpectralDecomposition,
};
use crate::{Error, Result};

pub use bessel::{amplitudes_cycle_bessel, bessel_j_sequence, bessel_j_series, default_bessel_truncation};
pub use closed_form::{
    amplitudes_complete, amplitudes_cycle, amplitudes_hypercube, amplitudes_multipartite,
};

/// Amplitude vectors handed to [`collapse`] must have unit norm within this.
pub const COLLAPSE_NORM_TOL: f64 = 1e-9;

/// Eigenvalues closer than this are merged into one eigenspace by [`Walk`].
const EIGENSPACE_MERGE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Circulant,
    Kronecker,
    Dense,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Circulant => "circulant",
            Route::Kronecker => "kronecker",
            Route::Dense => "dense",
        }
    }
}

/// Eigendecomposition of `A/d`, using the cheapest structure the family offers.
pub fn spectral_route(g: &Graph) -> Result<(SpectralDecomposition, Route)> {
    let d = g.degree() as f64;
    match g.family() {
        Family::Complete { .. } | Family::Cycle { .. } => {
            let column = g
                .circulant_first_column()
                .expect("complete graphs and cycles are circulant");
            let column: Vec<f64> = column.iter().map(|x| x / d).collect();
            Ok((circulant_decomposition(&column)?, Route::Circulant))
        }
        Family::Multipartite { a, b } => {
            // (1/(a-1)) K_a (x) (1/b) J_b
            let mut ka = vec![1.0 / (a - 1) as f64; a];
            ka[0] = 0.0;
            let outer = circulant_decomposition(&ka)?;
            let inner = circulant_decomposition(&vec![1.0 / b as f64; b])?;
            let vectors = kronecker(outer.eigenvectors(), inner.eigenvectors())?;
            let values = outer
                .eigenvalues()
                .iter()
                .flat_map(|x| inner.eigenvalues().iter().map(move |y| x * y))
                .collect();
            Ok((SpectralDecomposition::new(values, vectors)?, Route::Kronecker))
        }
        Family::Hypercube { d: dim } => {
            // Walsh-Hadamard basis: column k has eigenvalue (d - 2 popcount k) / d
            let hadamard = dft_matrix(2)?;
            let mut vectors = hadamard.clone();
            for _ in 1..dim {
                vectors = kronecker(&vectors, &hadamard)?;
            }
            let values = (0..g.n())
                .map(|k: usize| (dim as f64 - 2.0 * k.count_ones() as f64) / dim as f64)
                .collect();
            Ok((SpectralDecomposition::new(values, vectors)?, Route::Kronecker))
        }
        Family::CayleySym { .. } | Family::Custom => {
            let h = hamiltonian(g, Normalization::AdjacencyOverDegree);
            Ok((hermitian_eigendecomposition(&h.matrix)?, Route::Dense))
        }
    }
}

/// Walk state at one time: amplitudes and their collapsed distribution.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkState {
    pub t: f64,
    pub amplitudes: ComplexVector,
    pub probabilities: Vec<f64>,
}

/// `exp(-iHt)|start>` with `H = A/d`, through [`spectral_route`] and [`evolve_spectral`].
pub fn evolve(g: &Graph, t: f64, start: usize) -> Result<WalkState> {
    let psi0 = ComplexVector::basis(g.n(), start)?;
    let (decomp, _) = spectral_route(g)?;
    let amplitudes = evolve_spectral(&decomp, t, &psi0)?;
    let probabilities = collapse(&amplitudes)?;
    Ok(WalkState {
        t,
        amplitudes,
        probabilities,
    })
}

/// Evolution under an explicit Hamiltonian (any normalization) via the dense eigensolver.
pub fn evolve_hamiltonian(h: &Hamiltonian, t: f64, start: usize) -> Result<WalkState> {
    let psi0 = ComplexVector::basis(h.matrix.rows(), start)?;
    let decomp = hermitian_eigendecomposition(&h.matrix)?;
    let amplitudes = evolve_spectral(&decomp, t, &psi0)?;
    let probabilities = collapse(&amplitudes)?;
    Ok(WalkState {
        t,
        amplitudes,
        probabilities,
    })
}

/// `P(j) = |<j|psi>|^2`.
pub fn collapse(amps: &ComplexVector) -> Result<Vec<f64>> {
    if !amps.is_normalized(COLLAPSE_NORM_TOL) {
        return Err(Error::ContractViolation(format!(
            "amplitudes have squared norm {}",
            amps.norm_sqr()
        )));
    }
    Ok(amps.iter().map(|z| z.norm_sqr()).collect())
}

/// Max entrywise distance between `a` and `b` after removing one global phase.
///
/// The phase is fixed on the largest-magnitude entry of `b`.
pub fn distance_mod_global_phase(a: &ComplexVector, b: &ComplexVector) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let Some(k) = (0..b.len()).max_by(|&i, &j| b[i].norm().total_cmp(&b[j].norm())) else {
        return 0.0;
    };
    if a[k].norm() == 0.0 {
        return if b[k].norm() == 0.0 { 0.0 } else { f64::INFINITY };
    }
    let ratio = b[k] / a[k];
    let phase = ratio / ratio.norm();
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x * phase - y).norm())
        .fold(0.0, f64::max)
}

/// A walk with its eigenspace projections precomputed, for evaluating many times.
///
/// `psi_t = sum_lambda exp(-i lambda t) P_lambda psi_0`, one term per distinct eigenvalue.
/// Read-only after construction, so it can be shared across threads.
#[derive(Clone, Debug)]
pub struct Walk {
    n: usize,
    start: usize,
    route: Route,
    components: Vec<(f64, Vec<Complex64>)>,
}

impl Walk {
    pub fn new(g: &Graph, start: usize) -> Result<Walk> {
        let (decomp, route) = spectral_route(g)?;
        Self::from_decomposition(&decomp, route, start)
    }

    pub fn from_hamiltonian(h: &Hamiltonian, start: usize) -> Result<Walk> {
        let decomp = hermitian_eigendecomposition(&h.matrix)?;
        Self::from_decomposition(&decomp, Route::Dense, start)
    }

    pub fn from_decomposition(
        decomp: &SpectralDecomposition,
        route: Route,
        start: usize,
    ) -> Result<Walk> {
        let n = decomp.dim();
        let psi0 = ComplexVector::basis(n, start)?;
        let alphas = decomp.overlaps(&psi0)?;
        let z: &ComplexMatrix = decomp.eigenvectors();
        let mut components: Vec<(f64, Vec<Complex64>)> = Vec::new();
        let mut anchor = f64::NEG_INFINITY;
        for (j, (&lambda, &alpha)) in decomp.eigenvalues().iter().zip(&alphas).enumerate() {
            // eigenvalues arrive sorted, so a group is a run of close neighbours
            if components.is_empty() || lambda - anchor > EIGENSPACE_MERGE_TOL {
                anchor = lambda;
                components.push((lambda, vec![Complex64::new(0.0, 0.0); n]));
            }
            let (_, proj) = components.last_mut().expect("just pushed");
            for (k, slot) in proj.iter_mut().enumerate() {
                *slot += alpha * z[(k, j)];
            }
        }
        components.retain(|(_, proj)| proj.iter().any(|z| z.norm() > 1e-15));
        Ok(Walk {
            n,
            start,
            route,
            components,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn route(&self) -> Route {
        self.route
    }

    /// Distinct eigenvalues that actually contribute to the walk from `start`.
    pub fn active_eigenvalues(&self) -> Vec<f64> {
        self.components.iter().map(|(l, _)| *l).collect()
    }

    pub fn amplitudes(&self, t: f64) -> ComplexVector {
        let mut out = vec![Complex64::new(0.0, 0.0); self.n];
        for (lambda, proj) in &self.components {
            let phase = Complex64::from_polar(1.0, -lambda * t);
            for (slot, p) in out.iter_mut().zip(proj) {
                *slot += phase * p;
            }
        }
        ComplexVector::new(out)
    }

    pub fn probabilities(&self, t: f64) -> Vec<f64> {
        self.amplitudes(t).iter().map(|z| z.norm_sqr()).collect()
    }

    pub fn state(&self, t: f64) -> WalkState {
        let amplitudes = self.amplitudes(t);
        let probabilities = amplitudes.iter().map(|z| z.norm_sqr()).collect();
        WalkState {
            t,
            amplitudes,
            probabilities,
        }
    }
}
