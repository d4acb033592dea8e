//! Reference computations that share no code with the library.
#![allow(dead_code)]

use std::f64::consts::PI;

use qwalk::graphs::Graph;
use qwalk::Complex64;

pub type Dense = Vec<Vec<Complex64>>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn identity(n: usize) -> Dense {
    (0..n)
        .map(|r| (0..n).map(|k| if r == k { c(1.0, 0.0) } else { c(0.0, 0.0) }).collect())
        .collect()
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let m = b[0].len();
    let mut out = vec![vec![c(0.0, 0.0); m]; n];
    for i in 0..n {
        for k in 0..b.len() {
            let aik = a[i][k];
            if aik == c(0.0, 0.0) {
                continue;
            }
            for j in 0..m {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn one_norm(a: &Dense) -> f64 {
    (0..a.len())
        .map(|j| a.iter().map(|row| row[j].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `exp(m)` by scaling and squaring with a 30-term Taylor series.
pub fn expm(m: &Dense) -> Dense {
    let n = m.len();
    let norm = one_norm(m);
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scale = 0.5f64.powi(squarings as i32);
    let scaled: Dense = m
        .iter()
        .map(|row| row.iter().map(|x| x * scale).collect())
        .collect();
    let mut sum = identity(n);
    let mut term = identity(n);
    for k in 1..=30 {
        term = matmul(&term, &scaled);
        for row in term.iter_mut() {
            for x in row.iter_mut() {
                *x /= k as f64;
            }
        }
        for i in 0..n {
            for j in 0..n {
                sum[i][j] += term[i][j];
            }
        }
    }
    for _ in 0..squarings {
        sum = matmul(&sum, &sum);
    }
    sum
}

/// Adjacency matrix read off `has_edge`.
pub fn adjacency(g: &Graph) -> Dense {
    let n = g.n();
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| if g.has_edge(u, v) { c(1.0, 0.0) } else { c(0.0, 0.0) })
                .collect()
        })
        .collect()
}

/// Amplitudes of `exp(-i t A/d) e_start` via [`expm`].
pub fn walk_amplitudes(g: &Graph, t: f64, start: usize) -> Vec<Complex64> {
    let d = g.degree() as f64;
    let m: Dense = adjacency(g)
        .into_iter()
        .map(|row| row.into_iter().map(|x| x * c(0.0, -t / d)).collect())
        .collect();
    let u = expm(&m);
    (0..g.n()).map(|r| u[r][start]).collect()
}

pub fn walk_probabilities(g: &Graph, t: f64, start: usize) -> Vec<f64> {
    walk_amplitudes(g, t, start).iter().map(|a| a.norm_sqr()).collect()
}

/// Real 2x2 matrix exponential by scaling and squaring.
pub fn expm2(m: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    let dense: Dense = m.iter().map(|r| r.iter().map(|&x| c(x, 0.0)).collect()).collect();
    let e = expm(&dense);
    [[e[0][0].re, e[0][1].re], [e[1][0].re, e[1][1].re]]
}

/// Bessel `J_n(x)` from the integral `(1/pi) int_0^pi cos(n s - x sin s) ds`.
///
/// The integrand extends to a smooth periodic function, so the trapezoid rule
/// converges geometrically.
pub fn bessel_j_integral(order: i32, x: f64) -> f64 {
    let m = 4000;
    let h = PI / m as f64;
    let f = |s: f64| (order as f64 * s - x * s.sin()).cos();
    let mut sum = 0.5 * (f(0.0) + f(PI));
    for k in 1..m {
        sum += f(k as f64 * h);
    }
    sum * h / PI
}

/// All permutations of `0..n` by Heap's algorithm.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, p, out);
            if k.is_multiple_of(2) {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
        heap(k - 1, p, out);
    }
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut p, &mut out);
    out
}

/// Exhaustive isomorphism test.
pub fn brute_force_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let n = g.n();
    all_permutations(n).into_iter().find(|p| {
        (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(p[u], p[v])))
    })
}

pub fn tv_uniform(p: &[f64]) -> f64 {
    let u = 1.0 / p.len() as f64;
    0.5 * p.iter().map(|x| (x - u).abs()).sum::<f64>()
}

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn max_diff_c(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `min over phases |a - e^{i phi} b|`, using the phase of the largest entry of `b`.
pub fn max_diff_mod_phase(a: &[Complex64], b: &[Complex64]) -> f64 {
    let k = (0..b.len())
        .max_by(|&i, &j| b[i].norm().total_cmp(&b[j].norm()))
        .unwrap();
    let phase = a[k] / b[k];
    let phase = phase / phase.norm();
    let rotated: Vec<Complex64> = b.iter().map(|x| x * phase).collect();
    max_diff_c(a, &rotated)
}
