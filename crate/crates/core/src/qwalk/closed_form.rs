//! Closed-form amplitudes `<j|psi_t>` for walks started at vertex 0.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::graphs::MAX_HYPERCUBE_D;
use crate::specalg::ComplexVector;
use crate::{Error, Result};

fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// `K_n`: the start vertex carries `(e^{-it} + (n-1) e^{it/(n-1)}) / n`, every other
/// vertex `-(2i/n) e^{-it(n-2)/(2(n-1))} sin(tn / (2(n-1)))`.
pub fn amplitudes_complete(n: usize, t: f64) -> Result<ComplexVector> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("complete graph needs n >= 2, got {n}")));
    }
    let nf = n as f64;
    let m = nf - 1.0;
    let start = (cis(-t) + m * cis(t / m)) / nf;
    let other = Complex64::new(0.0, -2.0 / nf)
        * cis(-t * (nf - 2.0) / (2.0 * m))
        * (t * nf / (2.0 * m)).sin();
    let mut out = vec![other; n];
    out[0] = start;
    Ok(ComplexVector::new(out))
}

/// Balanced complete multipartite graph, `a` blocks of `b` vertices, block-contiguous order.
///
/// Three vertex classes: the start vertex, the rest of its block, and all other blocks.
pub fn amplitudes_multipartite(a: usize, b: usize, t: f64) -> Result<ComplexVector> {
    if a < 2 {
        return Err(Error::DegenerateGraph(format!("need a >= 2 blocks, got {a}")));
    }
    if b < 2 {
        return Err(Error::InvalidParameter(format!(
            "need b >= 2 vertices per block, got {b} (b = 1 is the complete graph)"
        )));
    }
    let (af, bf) = (a as f64, b as f64);
    let scale = 1.0 / (af * bf);
    let fast = cis(-t);
    let slow = cis(t / (af - 1.0));
    let start = (fast + slow * (af - 1.0) + af * (bf - 1.0)) * scale;
    let same_block = (fast + slow * (af - 1.0) - af) * scale;
    let other_block = (fast - slow) * scale;
    let out = (0..a * b)
        .map(|v| match v {
            0 => start,
            v if v < b => same_block,
            _ => other_block,
        })
        .collect();
    Ok(ComplexVector::new(out))
}

/// `C_n`: `<k|psi_t> = (1/n) sum_j exp(-it cos(2 pi j / n)) omega^{jk}`.
pub fn amplitudes_cycle(n: usize, t: f64) -> Result<ComplexVector> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let nf = n as f64;
    let phases: Vec<Complex64> = (0..n)
        .map(|j| cis(-t * (2.0 * PI * j as f64 / nf).cos()))
        .collect();
    let out = (0..n)
        .map(|k| {
            phases
                .iter()
                .enumerate()
                .map(|(j, p)| p * cis(2.0 * PI * ((j * k) % n) as f64 / nf))
                .sum::<Complex64>()
                / nf
        })
        .collect();
    Ok(ComplexVector::new(out))
}

/// `Q_d`: the walk factors into `d` copies of the `K_2` walk at time `t/d`, so vertex `v`
/// gets `cos(t/d)^(d - |v|) (-i sin(t/d))^|v|` where `|v|` is the Hamming weight.
pub fn amplitudes_hypercube(d: usize, t: f64) -> Result<ComplexVector> {
    if d == 0 {
        return Err(Error::InvalidParameter("hypercube needs d >= 1".into()));
    }
    if d > MAX_HYPERCUBE_D {
        return Err(Error::SizeLimit(format!("hypercube dimension {d} > {MAX_HYPERCUBE_D}")));
    }
    let s = t / d as f64;
    let stay = Complex64::new(s.cos(), 0.0);
    let flip = Complex64::new(0.0, -s.sin());
    let out = (0..1usize << d)
        .map(|v| {
            let w = v.count_ones() as i32;
            stay.powi(d as i32 - w) * flip.powi(w)
        })
        .collect();
    Ok(ComplexVector::new(out))
}
