//! Numeric search for uniform mixing on cycles, with the Bessel form as a check.
//!
//! Pass a window length to override the default `100 n`.

use qwalk::mixing::{conjecture_evidence, ConjectureFamily};
use qwalk::qwalk::{amplitudes_cycle, amplitudes_cycle_bessel};

fn main() -> qwalk::Result<()> {
    let window = std::env::args().nth(1).and_then(|s| s.parse::<f64>().ok());
    let sizes: Vec<usize> = (5..=10).collect();
    let reports = conjecture_evidence(ConjectureFamily::Cycle, &sizes, window, Some(1e-3))?;
    for (n, r) in sizes.iter().zip(&reports) {
        let t = r.min_time.unwrap_or(0.0);
        let gap = amplitudes_cycle_bessel(*n, t, None)?.max_abs_diff(&amplitudes_cycle(*n, t)?);
        println!(
            "C_{n:<3} {}  min TV {:.6e} at t = {:.6}  (Bessel vs Fourier {:.1e})",
            r.verdict.as_str(),
            r.min_distance,
            t,
            gap
        );
    }
    Ok(())
}
