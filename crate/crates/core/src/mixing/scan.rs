use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{certify_complete, certify_multipartite, tv_to_uniform};
use super::{CertificationRoute, MixingReport, Verdict};
use crate::graphs::{
    balanced_multipartite, cayley_symmetric, complete_graph, cycle_graph, find_isomorphism, Family,
    Graph,
};
use crate::qwalk::Walk;
use crate::{Error, Result};

/// Default TV threshold for numeric scans.
pub const SCAN_EPS: f64 = 1e-6;

/// Upper bound on grid evaluations for one scan.
pub const MAX_GRID_POINTS: usize = 10_000_000;

/// Width at which golden-section refinement stops.
const REFINE_WIDTH: f64 = 1e-12;

/// Witness times closer than this are reported once.
const WITNESS_MERGE: f64 = 1e-6;

/// Graphs up to this size are checked for an isomorphic certifiable family.
const ISOMORPHISM_SEARCH_LIMIT: usize = 8;

/// Exact period of the probability trajectory, when the family has one we know.
pub fn probability_period(family: Family) -> Option<f64> {
    match family {
        Family::Complete { n } => Some(2.0 * PI * (n as f64 - 1.0) / n as f64),
        Family::Multipartite { a, .. } => Some(2.0 * PI * (a as f64 - 1.0)),
        // eigenvalues (d - 2k)/d are spaced by 2/d
        Family::Hypercube { d } => Some(PI * d as f64),
        _ => None,
    }
}

/// One probability period for periodic families, `100 n` otherwise.
pub fn default_window(g: &Graph) -> f64 {
    probability_period(g.family()).unwrap_or(100.0 * g.n() as f64)
}

/// `1e-3 * window / (2 pi)`, coarsened if needed to stay within [`MAX_GRID_POINTS`].
pub fn default_step(window: f64) -> f64 {
    (1e-3 * window / (2.0 * PI)).max(window / (MAX_GRID_POINTS - 1) as f64)
}

/// Golden-section search for a minimum of `f` on `[lo, hi]`.
///
/// Returns the best point evaluated, so the result is never worse than `f` at
/// the bracket ends.
pub fn golden_section(f: impl Fn(f64) -> f64, lo: f64, hi: f64, width: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut best = (a, f(a));
    let fb = f(b);
    if fb < best.1 {
        best = (b, fb);
    }
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..200 {
        if b - a <= width {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        for (t, v) in [(c, fc), (d, fd)] {
            if v < best.1 {
                best = (t, v);
            }
        }
    }
    best
}

fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = std::env::var("QWALK_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)
    {
        builder = builder.num_threads(k);
    }
    builder.build().expect("thread pool")
}

fn validate_window(window: f64, step: f64, eps: f64) -> Result<usize> {
    if !(window.is_finite() && window > 0.0) {
        return Err(Error::InvalidWindow(format!("window must be positive, got {window}")));
    }
    if !(step.is_finite() && step > 0.0 && step <= window) {
        return Err(Error::InvalidWindow(format!(
            "step must lie in (0, window], got {step} for window {window}"
        )));
    }
    if !(eps.is_finite() && eps > 0.0) {
        return Err(Error::InvalidWindow(format!("tolerance must be positive, got {eps}")));
    }
    let intervals = (window / step + 1e-9).floor() as usize;
    if intervals + 1 > MAX_GRID_POINTS {
        return Err(Error::InvalidWindow(format!(
            "{} grid points exceed the cap of {MAX_GRID_POINTS}",
            intervals + 1
        )));
    }
    Ok(intervals)
}

/// Numeric search for a time with TV to uniform `<= eps` on `[0, window]`.
///
/// TV is evaluated on the grid `0, step, 2 step, ...`; every grid local minimum is
/// refined by golden-section search inside its neighbouring grid cells.
pub fn scan_mixing(g: &Graph, window: f64, step: f64, eps: f64) -> Result<MixingReport> {
    let walk = Walk::new(g, 0)?;
    let mut report = scan_walk(&walk, g.family(), window, step, eps)?;
    if let Some((family, _)) = isomorphic_certified_family(g) {
        let certified = certify_family(family)?;
        report.notes.push(format!(
            "isomorphic to {} whose closed-form verdict is {}",
            family.label(),
            certified.verdict.as_str()
        ));
    }
    Ok(report)
}

/// [`scan_mixing`] on a prepared walk; `family` only labels the report.
pub fn scan_walk(
    walk: &Walk,
    family: Family,
    window: f64,
    step: f64,
    eps: f64,
) -> Result<MixingReport> {
    let intervals = validate_window(window, step, eps)?;
    let tv_at = |t: f64| tv_to_uniform(&walk.probabilities(t));
    let time = |i: usize| i as f64 * step;

    let pool = thread_pool();
    let (grid, minima) = pool.install(|| {
        let grid: Vec<f64> = (0..=intervals).into_par_iter().map(|i| tv_at(time(i))).collect();
        let candidates: Vec<usize> = (0..=intervals)
            .filter(|&i| {
                (i == 0 || grid[i] < grid[i - 1]) && (i == intervals || grid[i] <= grid[i + 1])
            })
            .collect();
        let minima: Vec<(f64, f64)> = candidates
            .par_iter()
            .map(|&i| {
                let lo = time(i.saturating_sub(1));
                let hi = time((i + 1).min(intervals));
                let refined = golden_section(tv_at, lo, hi, REFINE_WIDTH);
                if refined.1 <= grid[i] {
                    refined
                } else {
                    (time(i), grid[i])
                }
            })
            .collect();
        (grid, minima)
    });

    let (mut min_time, mut min_distance) = (0.0, grid[0]);
    for (i, &v) in grid.iter().enumerate() {
        if v < min_distance {
            min_distance = v;
            min_time = time(i);
        }
    }
    for &(t, v) in &minima {
        if v < min_distance || (v == min_distance && t < min_time) {
            min_distance = v;
            min_time = t;
        }
    }

    let mut witness_times: Vec<f64> = Vec::new();
    for &(t, v) in &minima {
        if v <= eps && witness_times.last().is_none_or(|&w| t - w > WITNESS_MERGE) {
            witness_times.push(t);
        }
    }
    let periodic = probability_period(family).is_some();
    if !periodic {
        witness_times.truncate(1);
    }

    let verdict = if witness_times.is_empty() {
        Verdict::NoMixingFoundEvidence
    } else {
        Verdict::Mixes
    };
    let mut notes = vec![format!(
        "grid of {} points, {} local minima refined to width {REFINE_WIDTH:e}",
        intervals + 1,
        minima.len()
    )];
    if verdict == Verdict::NoMixingFoundEvidence {
        notes.push("finite-window numeric evidence, not a proof of non-mixing".into());
    }
    Ok(MixingReport {
        graph: family,
        verdict,
        witness_times,
        min_distance: min_distance.clamp(0.0, 1.0),
        min_time: Some(min_time),
        deficit: None,
        scan_window: [0.0, window],
        grid_step: Some(step),
        tolerance: eps,
        route: CertificationRoute::Numeric,
        notes,
    })
}

fn certify_family(family: Family) -> Result<MixingReport> {
    match family {
        Family::Complete { n } => certify_complete(n),
        Family::Multipartite { a, b } => certify_multipartite(a, b),
        other => Err(Error::InvalidParameter(format!(
            "no closed-form certificate for {}",
            other.label()
        ))),
    }
}

/// For small graphs outside the certifiable families, a complete or balanced
/// multipartite graph isomorphic to `g` together with the vertex map.
pub fn isomorphic_certified_family(g: &Graph) -> Option<(Family, Vec<usize>)> {
    if matches!(g.family(), Family::Complete { .. } | Family::Multipartite { .. })
        || g.n() > ISOMORPHISM_SEARCH_LIMIT
    {
        return None;
    }
    let n = g.n();
    if g.degree() == n - 1 {
        let k = complete_graph(n).ok()?;
        return find_isomorphism(g, &k).map(|m| (k.family(), m));
    }
    for a in 2..=n {
        if !n.is_multiple_of(a) {
            continue;
        }
        let b = n / a;
        if b < 2 || (a - 1) * b != g.degree() {
            continue;
        }
        let h = balanced_multipartite(a, b).ok()?;
        if let Some(m) = find_isomorphism(g, &h) {
            return Some((h.family(), m));
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjectureFamily {
    Cycle,
    CayleySym,
}

/// Batch of scans over cycles or transposition Cayley graphs.
///
/// `window` defaults to `100 n` (vertex count) and `step` to [`default_step`].
/// A graph with no numeric witness that is isomorphic to a certified non-mixing
/// family inherits that certificate.
pub fn conjecture_evidence(
    family: ConjectureFamily,
    params: &[usize],
    window: Option<f64>,
    step: Option<f64>,
) -> Result<Vec<MixingReport>> {
    params
        .iter()
        .map(|&p| {
            let g = match family {
                ConjectureFamily::Cycle => cycle_graph(p)?,
                ConjectureFamily::CayleySym => cayley_symmetric(p)?,
            };
            let window = window.unwrap_or(100.0 * g.n() as f64);
            let step = step.unwrap_or_else(|| default_step(window));
            let scan = scan_mixing(&g, window, step, SCAN_EPS)?;
            let mut report = scan.clone();
            if let Some((equivalent, _)) = isomorphic_certified_family(&g) {
                let certified = certify_family(equivalent)?;
                if scan.verdict == Verdict::NoMixingFoundEvidence
                    && certified.verdict == Verdict::DoesNotMixCertified
                {
                    report = MixingReport {
                        graph: g.family(),
                        notes: certified
                            .notes
                            .iter()
                            .cloned()
                            .chain(scan.notes.iter().cloned())
                            .chain([format!(
                                "verdict inherited from {} via graph isomorphism; numeric scan minimum {}",
                                equivalent.label(),
                                scan.min_distance
                            )])
                            .collect(),
                        ..certified
                    };
                }
            }
            if family == ConjectureFamily::CayleySym && p == 3 {
                report.notes.push(
                    "X_3 is isomorphic to K_{3,3} and does not mix, so no exception is made for it"
                        .into(),
                );
            }
            Ok(report)
        })
        .collect()
}
