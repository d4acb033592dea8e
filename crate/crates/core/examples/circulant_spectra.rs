//! Spectra of circulant graphs from the Fourier route, checked against the dense solver.

use qwalk::graphs::{complete_graph, cycle_graph, hamiltonian, Normalization};
use qwalk::qwalk::{spectral_route, Route};
use qwalk::specalg::hermitian_eigendecomposition;

fn main() -> qwalk::Result<()> {
    for g in [cycle_graph(4)?, cycle_graph(7)?, complete_graph(5)?] {
        let (fourier, route) = spectral_route(&g)?;
        assert_eq!(route, Route::Circulant);
        let dense = hermitian_eigendecomposition(&hamiltonian(&g, Normalization::AdjacencyOverDegree).matrix)?;
        let gap = fourier
            .eigenvalues()
            .iter()
            .zip(dense.eigenvalues())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let values: Vec<String> = fourier
            .eigenvalues()
            .iter()
            .rev()
            .map(|v| format!("{:.4}", v + 0.0))
            .collect();
        println!("{:<5} [{}]  max gap to dense {:.1e}", g.family().label(), values.join(", "), gap);
    }
    Ok(())
}
