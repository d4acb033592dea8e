//! The two-vertex walk: amplitudes, probabilities and the classical walks next to it.

use std::f64::consts::PI;

use qwalk::cwalk::{discrete_step, two_state_ct};
use qwalk::graphs::complete_graph;
use qwalk::mixing::tv_to_uniform;
use qwalk::qwalk::{amplitudes_complete, Walk};

fn main() -> qwalk::Result<()> {
    let g = complete_graph(2)?;
    let walk = Walk::new(&g, 0)?;

    println!("{:>8} {:>24} {:>24} {:>10}", "t", "amp_0", "amp_1", "TV");
    for k in 0..=8 {
        let t = k as f64 * PI / 8.0;
        let a = amplitudes_complete(2, t)?;
        let p = walk.probabilities(t);
        println!(
            "{:>8.4} {:>24} {:>24} {:>10.2e}",
            t,
            format!("{:.4}", a[0]),
            format!("{:.4}", a[1]),
            tv_to_uniform(&p)
        );
    }

    // classical: the simple walk flips, the lazy walk is uniform after one step
    let mut simple = vec![1.0, 0.0];
    for step in 1..=3 {
        simple = discrete_step(&g, &simple, false)?;
        println!("simple step {step}: {simple:?}");
    }
    println!("lazy step 1: {:?}", discrete_step(&g, &[1.0, 0.0], true)?);

    let p = two_state_ct(1.0, 1.0, PI / 4.0)?;
    println!(
        "two-state chain at pi/4 from state 0: ({:.6}, {:.6})",
        p.get(0, 0),
        p.get(1, 0)
    );
    Ok(())
}
