use std::f64::consts::PI;

use super::{tv_to_uniform, CertificationRoute, MixingReport, Verdict};
use crate::graphs::Family;
use crate::qwalk::{amplitudes_complete, amplitudes_multipartite, collapse};
use crate::{Error, Result};

/// TV threshold for accepting a closed-form witness time.
pub const CERTIFY_EPS: f64 = 1e-9;

/// `K_n` mixes iff `(4/n) sin^2(tn / (2(n-1))) = 1` has a solution, i.e. iff `n <= 4`.
///
/// For `n >= 5` every non-start vertex stays at or below `4/n^2`, a per-vertex gap
/// of `(n-4)/n^2` below uniform.
pub fn certify_complete(n: usize) -> Result<MixingReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("complete graph needs n >= 2, got {n}")));
    }
    let nf = n as f64;
    let period = 2.0 * PI * (nf - 1.0) / nf;
    // sin argument theta = t n / (2(n-1)); t = theta * to_time
    let to_time = 2.0 * (nf - 1.0) / nf;
    let graph = Family::Complete { n };

    if n <= 4 {
        let theta = (nf.sqrt() / 2.0).asin();
        let mut witness_times = vec![theta * to_time];
        let mirrored = (PI - theta) * to_time;
        if (mirrored - witness_times[0]).abs() > 1e-12 {
            witness_times.push(mirrored);
        }
        for &t in &witness_times {
            let tv = tv_to_uniform(&collapse(&amplitudes_complete(n, t)?)?);
            debug_assert!(tv <= CERTIFY_EPS, "K_{n} witness {t} has TV {tv}");
        }
        return Ok(MixingReport {
            graph,
            verdict: Verdict::Mixes,
            min_time: Some(witness_times[0]),
            witness_times,
            min_distance: 0.0,
            deficit: None,
            scan_window: [0.0, period],
            grid_step: None,
            tolerance: CERTIFY_EPS,
            route: CertificationRoute::ClosedForm,
            notes: vec![format!(
                "solutions of (4/n) sin^2(tn/(2(n-1))) = 1 in one probability period {period}"
            )],
        });
    }

    let deficit = (nf - 4.0) / (nf * nf);
    Ok(MixingReport {
        graph,
        verdict: Verdict::DoesNotMixCertified,
        witness_times: vec![],
        // TV = (n-1)(1/n - s) is smallest when s = (4/n^2) sin^2 peaks at 4/n^2
        min_distance: (nf - 1.0) * deficit,
        min_time: Some(PI * (nf - 1.0) / nf),
        deficit: Some(deficit),
        scan_window: [0.0, period],
        grid_step: None,
        tolerance: CERTIFY_EPS,
        route: CertificationRoute::ClosedForm,
        notes: vec![format!(
            "non-start vertices never exceed 4/n^2, leaving each at least (n-4)/n^2 = {deficit} below 1/n"
        )],
    })
}

/// Balanced complete `a`-partite graph with blocks of `b`: the other-block vertices reach
/// `1/(ab)` only if `sin^2(ta / (2(a-1))) = ab/4`, feasible only for `ab <= 4`.
///
/// `b = 1` is delegated to [`certify_complete`].
pub fn certify_multipartite(a: usize, b: usize) -> Result<MixingReport> {
    if a <= 1 {
        return Err(Error::DegenerateGraph(format!(
            "balanced multipartite graph needs a >= 2 blocks, got {a}"
        )));
    }
    if b == 0 {
        return Err(Error::InvalidParameter("blocks must be nonempty".into()));
    }
    if b == 1 {
        return certify_complete(a);
    }
    let (af, bf) = (a as f64, b as f64);
    let size = af * bf;
    // phases e^{-it} and e^{it/(a-1)} both return to 1 after 2 pi (a - 1)
    let period = 2.0 * PI * (af - 1.0);
    let graph = Family::Multipartite { a, b };

    if a * b <= 4 {
        // sin^2(theta) = ab/4 with theta = t a / (2(a-1))
        let theta = (size.sqrt() / 2.0).asin();
        let to_time = 2.0 * (af - 1.0) / af;
        let mut candidates = Vec::new();
        let mut k = 0.0;
        loop {
            let base = k * PI;
            let lo = (base + theta) * to_time;
            if lo >= period {
                break;
            }
            candidates.push(lo);
            let hi = (base + PI - theta) * to_time;
            if hi < period && (hi - lo).abs() > 1e-12 {
                candidates.push(hi);
            }
            k += 1.0;
        }
        let mut witness_times = Vec::new();
        for t in candidates {
            let tv = tv_to_uniform(&collapse(&amplitudes_multipartite(a, b, t)?)?);
            if tv <= CERTIFY_EPS {
                witness_times.push(t);
            }
        }
        if !witness_times.is_empty() {
            return Ok(MixingReport {
                graph,
                verdict: Verdict::Mixes,
                min_time: Some(witness_times[0]),
                witness_times,
                min_distance: 0.0,
                deficit: None,
                scan_window: [0.0, period],
                grid_step: None,
                tolerance: CERTIFY_EPS,
                route: CertificationRoute::ClosedForm,
                notes: vec!["all three vertex classes are uniform at the witness times".into()],
            });
        }
    }

    let deficit = (size - 4.0) / (size * size);
    let other_block = (af - 1.0) * bf;
    Ok(MixingReport {
        graph,
        verdict: Verdict::DoesNotMixCertified,
        witness_times: vec![],
        min_distance: other_block * deficit,
        min_time: None,
        deficit: Some(deficit),
        scan_window: [0.0, period],
        grid_step: None,
        tolerance: CERTIFY_EPS,
        route: CertificationRoute::ClosedForm,
        notes: vec![format!(
            "the {other_block} other-block vertices never exceed 4/(ab)^2, each at least \
             (ab-4)/(ab)^2 = {deficit} below 1/(ab); min_distance is a lower bound on TV"
        )],
    })
}
