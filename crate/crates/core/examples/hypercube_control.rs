//! Hypercubes mix at t = d pi / 4, one K_2 factor per coordinate.

use std::f64::consts::PI;

use qwalk::graphs::hypercube_graph;
use qwalk::mixing::tv_to_uniform;
use qwalk::qwalk::{amplitudes_hypercube, Walk};

fn main() -> qwalk::Result<()> {
    for d in 1..=8 {
        let g = hypercube_graph(d)?;
        let t = d as f64 * PI / 4.0;
        let engine = tv_to_uniform(&Walk::new(&g, 0)?.probabilities(t));
        let closed: Vec<f64> = amplitudes_hypercube(d, t)?.iter().map(|a| a.norm_sqr()).collect();
        println!(
            "Q_{d} ({:>3} vertices) at t = {:.4}: TV engine {:.1e}, closed form {:.1e}",
            g.n(),
            t,
            engine,
            tv_to_uniform(&closed)
        );
    }
    Ok(())
}
