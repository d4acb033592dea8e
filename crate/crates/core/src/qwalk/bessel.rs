//! Bessel functions `J_nu` of integer order and the Bessel-series form of cycle amplitudes.
//!
//! On `C_n` the amplitude is a folded sum of the line walk:
//! `<k|psi_t> = sum_{nu = k mod n} (-i)^nu J_nu(t)`, over all integers `nu`.

use num_complex::Complex64;

use crate::specalg::ComplexVector;
use crate::{Error, Result};

/// Agreement the Bessel-series amplitudes must reach before they are returned.
const SERIES_TOL: f64 = 1e-8;

/// Default order cutoff `max(60, ceil(t) + 20 ceil(t^(1/3)))`.
///
/// `J_nu(t)` decays super-exponentially once `nu - t` exceeds a few multiples of `t^(1/3)`.
pub fn default_bessel_truncation(t: f64) -> usize {
    let t = t.abs();
    let wide = t.ceil() as usize + 20 * t.cbrt().ceil() as usize;
    wide.max(60)
}

/// `J_nu(x)` from the ascending power series.
///
/// Accurate for moderate `|x|` (cancellation grows like `e^|x|`); used for
/// small arguments and as an independent check of [`bessel_j_sequence`].
pub fn bessel_j_series(nu: i32, x: f64) -> f64 {
    let order = nu.unsigned_abs();
    let sign = if nu < 0 && order % 2 == 1 { -1.0 } else { 1.0 };
    let half = x / 2.0;
    // first term (x/2)^order / order!
    let mut term = 1.0;
    for k in 1..=order {
        term *= half / k as f64;
    }
    let mut sum = term;
    let q = -half * half;
    let mut k = 1u32;
    loop {
        term *= q / (k as f64 * (k + order) as f64);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) && k as f64 > half.abs() {
            break;
        }
        k += 1;
        if k > 10_000 {
            break;
        }
    }
    sign * sum
}

/// `[J_0(x), J_1(x), ..., J_max_order(x)]` by Miller's backward recurrence,
/// normalized with `J_0 + 2 sum_k J_2k = 1`.
pub fn bessel_j_sequence(max_order: usize, x: f64) -> Vec<f64> {
    let mut out = vec![0.0; max_order + 1];
    if x == 0.0 {
        out[0] = 1.0;
        return out;
    }
    let ax = x.abs();
    let base = max_order.max(ax.ceil() as usize);
    let mut top = base + 30 + (50.0 * base as f64).sqrt() as usize;
    top += top % 2;

    let mut next = 0.0_f64; // J_{k+1}
    let mut current = 1e-300_f64; // J_k
    let mut norm = 0.0_f64;
    for k in (1..=top).rev() {
        if k <= max_order {
            out[k] = current;
        }
        if k % 2 == 0 {
            norm += 2.0 * current;
        }
        let prev = 2.0 * k as f64 / ax * current - next;
        next = current;
        current = prev;
        if current.abs() > 1e250 {
            let s = 1e-250;
            current *= s;
            next *= s;
            norm *= s;
            for v in out.iter_mut() {
                *v *= s;
            }
        }
    }
    out[0] = current;
    norm += current;
    for (k, v) in out.iter_mut().enumerate() {
        *v /= norm;
        // J_k(-x) = (-1)^k J_k(x)
        if x < 0.0 && k % 2 == 1 {
            *v = -*v;
        }
    }
    out
}

/// Cycle amplitudes from the folded Bessel series, summing orders `|nu| <= truncation`.
///
/// `truncation = None` uses [`default_bessel_truncation`]. Fails with
/// [`Error::ToleranceUnmet`] when the cutoff is below `ceil(|t|) + 40`, when the
/// last retained orders are still above `1e-12`, or when the result misses unit
/// norm by more than `1e-8`.
pub fn amplitudes_cycle_bessel(n: usize, t: f64, truncation: Option<usize>) -> Result<ComplexVector> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let cutoff = truncation.unwrap_or_else(|| default_bessel_truncation(t));
    let minimum = t.abs().ceil() as usize + 40;
    if cutoff < minimum {
        return Err(Error::ToleranceUnmet(format!(
            "Bessel truncation {cutoff} is below ceil(|t|) + 40 = {minimum}"
        )));
    }
    let j = bessel_j_sequence(cutoff, t);
    let tail = j[cutoff].abs().max(j[cutoff - 1].abs());
    if tail > 1e-12 {
        return Err(Error::ToleranceUnmet(format!(
            "Bessel tail |J_{cutoff}({t})| = {tail:e} is not negligible"
        )));
    }
    // (-i)^nu J_nu(t) depends only on |nu|
    let minus_i_pow = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, -1.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 1.0),
    ];
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    let c = cutoff as i64;
    for nu in -c..=c {
        let order = nu.unsigned_abs() as usize;
        let k = nu.rem_euclid(n as i64) as usize;
        out[k] += minus_i_pow[order % 4] * j[order];
    }
    let amps = ComplexVector::new(out);
    let defect = (amps.norm_sqr() - 1.0).abs();
    if defect > SERIES_TOL {
        return Err(Error::ToleranceUnmet(format!(
            "Bessel-series amplitudes miss unit norm by {defect:e}"
        )));
    }
    Ok(amps)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values from scipy.special.jv
    const REFERENCE: &[(usize, f64, f64)] = &[
        (0, 1.0, 0.765_197_686_557_966_6),
        (1, 1.0, 0.440_050_585_744_933_55),
        (0, 5.0, -0.177_596_771_314_338_35),
        (3, 5.0, 0.364_831_230_613_667),
        (0, 10.0, -0.245_935_764_451_348_32),
        (10, 10.0, 0.207_486_106_633_358_9),
        (20, 10.0, 1.151_336_924_781_339_1e-5),
    ];

    #[test]
    fn sequence_matches_reference_values() {
        for &(nu, x, expected) in REFERENCE {
            let j = bessel_j_sequence(nu.max(1), x);
            let tol = 1e-14 * expected.abs().max(1e-3);
            assert!((j[nu] - expected).abs() < tol, "J_{nu}({x}) = {} vs {expected}", j[nu]);
        }
    }

    #[test]
    fn series_matches_reference_values() {
        for &(nu, x, expected) in REFERENCE {
            let v = bessel_j_series(nu as i32, x);
            assert!((v - expected).abs() < 1e-12, "J_{nu}({x}) = {v} vs {expected}");
        }
    }

    #[test]
    fn negative_orders_and_arguments() {
        assert!((bessel_j_series(-3, 2.0) + bessel_j_series(3, 2.0)).abs() < 1e-16);
        assert!((bessel_j_series(-2, 2.0) - bessel_j_series(2, 2.0)).abs() < 1e-16);
        let pos = bessel_j_sequence(5, 3.0);
        let neg = bessel_j_sequence(5, -3.0);
        for k in 0..=5 {
            let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
            assert!((neg[k] - sign * pos[k]).abs() < 1e-15);
        }
    }

    #[test]
    fn bessel_at_zero() {
        let j = bessel_j_sequence(4, 0.0);
        assert_eq!(j, vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        let amps = amplitudes_cycle_bessel(5, 0.0, None).unwrap();
        assert_eq!(amps[0], Complex64::new(1.0, 0.0));
        assert!(amps.iter().skip(1).all(|z| z.norm() == 0.0));
    }

    #[test]
    fn large_arguments_stay_normalized() {
        let j = bessel_j_sequence(1300, 1000.0);
        let norm: f64 = j[0] * j[0] + 2.0 * j[1..].iter().map(|v| v * v).sum::<f64>();
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn default_truncation() {
        assert_eq!(default_bessel_truncation(0.0), 60);
        assert_eq!(default_bessel_truncation(10.0), 70);
        assert_eq!(default_bessel_truncation(1000.0), 1200);
        for t in [0.0, 1.0, 7.5, 20.0, 64.0, 500.0] {
            assert!(default_bessel_truncation(t) >= t.ceil() as usize + 40);
        }
    }

    #[test]
    fn short_truncation_is_an_error() {
        assert!(matches!(
            amplitudes_cycle_bessel(5, 10.0, Some(30)),
            Err(Error::ToleranceUnmet(_))
        ));
        // meets ceil(t) + 40 but not the tail bound at large t
        assert!(matches!(
            amplitudes_cycle_bessel(5, 1000.0, Some(1040)),
            Err(Error::ToleranceUnmet(_))
        ));
    }
}
