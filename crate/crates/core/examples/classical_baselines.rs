//! Classical random walks: discrete convergence and the two-state continuous chain.

use qwalk::cwalk::{converge, ct_limit, two_state_ct};
use qwalk::graphs::{complete_graph, cycle_graph, hypercube_graph};

fn main() -> qwalk::Result<()> {
    for g in [complete_graph(2)?, cycle_graph(6)?, cycle_graph(7)?, hypercube_graph(4)?] {
        let mut start = vec![0.0; g.n()];
        start[0] = 1.0;
        for lazy in [false, true] {
            let run = converge(&g, &start, lazy, 1e-3, 10_000)?;
            let steps = run
                .steps
                .map_or_else(|| "no convergence".to_string(), |s| format!("{s} steps"));
            println!(
                "{:<5} {:<6} TV <= 1e-3: {steps}",
                g.family().label(),
                if lazy { "lazy" } else { "simple" }
            );
        }
    }

    let (alpha, beta) = (0.5, 2.0);
    println!("two-state chain, alpha = {alpha}, beta = {beta}, limit {:?}", ct_limit(alpha, beta)?);
    for t in [0.0, 0.5, 1.0, 2.0, 5.0] {
        let p = two_state_ct(alpha, beta, t)?;
        println!("  t = {t:<4} from state 0: ({:.6}, {:.6})", p.get(0, 0), p.get(1, 0));
    }
    Ok(())
}
