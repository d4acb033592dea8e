//! Transposition Cayley graphs of S_3 and S_4.

use qwalk::graphs::{balanced_multipartite, cayley_symmetric, find_isomorphism};
use qwalk::mixing::{conjecture_evidence, default_step, scan_mixing, ConjectureFamily, SCAN_EPS};

fn main() -> qwalk::Result<()> {
    let x3 = cayley_symmetric(3)?;
    let k33 = balanced_multipartite(2, 3)?;
    println!("X_3 -> K_{{2x3}} isomorphism: {:?}", find_isomorphism(&x3, &k33));
    for r in conjecture_evidence(ConjectureFamily::CayleySym, &[3], None, None)? {
        println!("X_3 verdict: {}", r.verdict.as_str());
        for note in &r.notes {
            println!("  {note}");
        }
    }

    let x4 = cayley_symmetric(4)?;
    let r = scan_mixing(&x4, 100.0, default_step(100.0), SCAN_EPS)?;
    println!(
        "X_4 ({} vertices, degree {}) over [0, 100]: {}, min TV {:.6} at t = {:.6}",
        x4.n(),
        x4.degree(),
        r.verdict.as_str(),
        r.min_distance,
        r.min_time.unwrap_or(f64::NAN)
    );
    Ok(())
}
