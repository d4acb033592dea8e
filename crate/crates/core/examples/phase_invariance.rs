//! Laplacian and lazy Hamiltonians give the same probabilities after rescaling time.

use qwalk::graphs::{balanced_multipartite, complete_graph, cycle_graph, hamiltonian, Normalization};
use qwalk::qwalk::{evolve, evolve_hamiltonian};

fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn main() -> qwalk::Result<()> {
    for g in [complete_graph(4)?, cycle_graph(5)?, balanced_multipartite(2, 3)?] {
        let d = g.degree() as f64;
        let lap = hamiltonian(&g, Normalization::Laplacian);
        let lazy = hamiltonian(&g, Normalization::Lazy);
        let (mut lap_gap, mut lazy_gap) = (0.0f64, 0.0f64);
        for i in 0..=100 {
            let t = 0.2 * i as f64;
            let simple = evolve(&g, t, 0)?.probabilities;
            lap_gap = lap_gap.max(max_gap(&simple, &evolve_hamiltonian(&lap, t / d, 0)?.probabilities));
            lazy_gap = lazy_gap.max(max_gap(&simple, &evolve_hamiltonian(&lazy, 2.0 * t, 0)?.probabilities));
        }
        println!(
            "{:<8} Laplacian at t/d: {:.1e}   lazy at 2t: {:.1e}",
            g.family().label(),
            lap_gap,
            lazy_gap
        );
    }
    Ok(())
}
