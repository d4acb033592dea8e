//! Balanced complete multipartite graphs: closed-form verdicts and a numeric cross-check.

use qwalk::graphs::balanced_multipartite;
use qwalk::mixing::{certify_multipartite, default_step, scan_mixing, SCAN_EPS};

fn main() -> qwalk::Result<()> {
    println!("{:<9} {:<24} {:>12} {:>12}", "graph", "verdict", "bound", "scanned");
    for (a, b) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 3), (6, 2)] {
        let report = certify_multipartite(a, b)?;
        let g = balanced_multipartite(a, b)?;
        let window = report.scan_window[1];
        let scan = scan_mixing(&g, window, default_step(window), SCAN_EPS)?;
        println!(
            "{:<9} {:<24} {:>12.6} {:>12.6}",
            g.family().label(),
            report.verdict.as_str(),
            report.min_distance,
            scan.min_distance
        );
    }
    Ok(())
}
