//! Instantaneous uniform mixing: distance to uniform, closed-form certification
//! for complete and balanced multipartite graphs, and numeric scans for the rest.
//!
//! Exact uniformity is replaced by total variation `<= eps`: `1e-9` when
//! cross-checking closed forms, `1e-6` for generic scans.

mod certify;
mod report;
mod scan;

pub use certify::{certify_complete, certify_multipartite, CERTIFY_EPS};
pub use report::{CertificationRoute, MixingReport, Verdict};
pub use scan::{
    conjecture_evidence, default_step, default_window, golden_section, isomorphic_certified_family,
    probability_period, scan_mixing, scan_walk, ConjectureFamily, MAX_GRID_POINTS, SCAN_EPS,
};

/// `(1/2) sum_j |p_j - 1/n|`.
pub fn tv_to_uniform(dist: &[f64]) -> f64 {
    let u = 1.0 / dist.len() as f64;
    0.5 * dist.iter().map(|p| (p - u).abs()).sum::<f64>()
}

/// `max_j |p_j - 1/n|`.
pub fn max_deviation(dist: &[f64]) -> f64 {
    let u = 1.0 / dist.len() as f64;
    dist.iter().map(|p| (p - u).abs()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn tv_examples() {
        assert_eq!(tv_to_uniform(&[0.25; 4]), 0.0);
        assert_eq!(tv_to_uniform(&[1.0, 0.0, 0.0, 0.0]), 0.75);
        let t = PI / 6.0;
        let d = [t.cos().powi(2), t.sin().powi(2)];
        assert!((tv_to_uniform(&d) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn max_deviation_examples() {
        assert_eq!(max_deviation(&[0.5, 0.5]), 0.0);
        assert_eq!(max_deviation(&[1.0, 0.0, 0.0, 0.0]), 0.75);
    }
}
