//! Classical baselines: discrete simple/lazy random walks and the two-state
//! continuous-time Markov chain.
//!
//! Distributions are column vectors and transition matrices act on them from
//! the left, so every column of a stochastic matrix sums to one.

use crate::graphs::Graph;
use crate::mixing::tv_to_uniform;
use crate::{Error, Result};

const DISTRIBUTION_TOL: f64 = 1e-9;

/// Column-stochastic matrix, entry `(k, j)` is the probability of moving `j -> k`.
#[derive(Clone, Debug, PartialEq)]
pub struct StochasticMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl StochasticMatrix {
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        if entries.iter().any(|&p| p < -1e-15) {
            return Err(Error::ContractViolation("negative transition probability".into()));
        }
        for c in 0..n {
            let s: f64 = (0..n).map(|r| entries[r * n + c]).sum();
            if (s - 1.0).abs() > 1e-12 {
                return Err(Error::ContractViolation(format!("column {c} sums to {s}")));
            }
        }
        Ok(StochasticMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.entries[r * self.n + c]
    }

    pub fn apply(&self, dist: &[f64]) -> Result<Vec<f64>> {
        if dist.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: dist.len(),
            });
        }
        Ok((0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * dist[c]).sum())
            .collect())
    }

    pub fn compose(&self, other: &StochasticMatrix) -> Result<StochasticMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut entries = vec![0.0; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[r * n + c] = (0..n).map(|k| self.get(r, k) * other.get(k, c)).sum();
            }
        }
        Ok(StochasticMatrix { n, entries })
    }

    pub fn max_abs_diff(&self, other: &StochasticMatrix) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Generator `Q = [[-alpha, beta], [alpha, -beta]]` of the two-state chain; `dP/dt = QP`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorMatrix {
    pub alpha: f64,
    pub beta: f64,
}

impl GeneratorMatrix {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha >= 0.0 && beta >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "rates must be non-negative, got alpha = {alpha}, beta = {beta}"
            )));
        }
        if alpha + beta == 0.0 {
            return Err(Error::DegenerateChain("alpha = beta = 0 never moves".into()));
        }
        Ok(GeneratorMatrix { alpha, beta })
    }

    /// Row-major entries.
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [[-self.alpha, self.beta], [self.alpha, -self.beta]]
    }
}

/// Transition matrix of one discrete step: `A/d`, or `(I + A/d)/2` when lazy.
pub fn transition_matrix(g: &Graph, lazy: bool) -> StochasticMatrix {
    let n = g.n();
    let d = g.degree() as f64;
    let move_weight = if lazy { 0.5 } else { 1.0 };
    let mut entries = vec![0.0; n * n];
    for r in 0..n {
        for c in 0..n {
            let mut p = if g.has_edge(r, c) { move_weight / d } else { 0.0 };
            if lazy && r == c {
                p += 0.5;
            }
            entries[r * n + c] = p;
        }
    }
    StochasticMatrix { n, entries }
}

fn check_distribution(dist: &[f64]) -> Result<()> {
    let s: f64 = dist.iter().sum();
    if dist.iter().any(|&p| p < -DISTRIBUTION_TOL) || (s - 1.0).abs() > DISTRIBUTION_TOL {
        return Err(Error::ContractViolation(format!(
            "input is not a probability distribution (sum = {s})"
        )));
    }
    Ok(())
}

pub fn discrete_step(g: &Graph, dist: &[f64], lazy: bool) -> Result<Vec<f64>> {
    check_distribution(dist)?;
    transition_matrix(g, lazy).apply(dist)
}

/// Closed-form `P(t) = e^{tQ}` of the two-state chain.
pub fn two_state_ct(alpha: f64, beta: f64, t: f64) -> Result<StochasticMatrix> {
    let q = GeneratorMatrix::new(alpha, beta)?;
    let s = q.alpha + q.beta;
    let decay = (-t * s).exp();
    let entries = vec![
        (q.alpha * decay + q.beta) / s,
        q.beta * (1.0 - decay) / s,
        q.alpha * (1.0 - decay) / s,
        (q.beta * decay + q.alpha) / s,
    ];
    Ok(StochasticMatrix { n: 2, entries })
}

/// Stationary limit `(beta, alpha) / (alpha + beta)` of the two-state chain.
pub fn ct_limit(alpha: f64, beta: f64) -> Result<Vec<f64>> {
    let q = GeneratorMatrix::new(alpha, beta)?;
    let s = q.alpha + q.beta;
    Ok(vec![q.beta / s, q.alpha / s])
}

#[derive(Clone, Debug, PartialEq)]
pub struct Convergence {
    /// Steps taken until TV to uniform dropped to the threshold, or `None` at the cap.
    pub steps: Option<usize>,
    /// TV distance after each step, starting with the input distribution.
    pub tv_history: Vec<f64>,
}

/// Iterates discrete steps until TV to uniform is at most `threshold`, or `cap` steps.
pub fn converge(
    g: &Graph,
    dist: &[f64],
    lazy: bool,
    threshold: f64,
    cap: usize,
) -> Result<Convergence> {
    check_distribution(dist)?;
    let p = transition_matrix(g, lazy);
    let mut current = dist.to_vec();
    let mut tv_history = vec![tv_to_uniform(&current)];
    for step in 1..=cap {
        if tv_history[step - 1] <= threshold {
            return Ok(Convergence {
                steps: Some(step - 1),
                tv_history,
            });
        }
        current = p.apply(&current)?;
        tv_history.push(tv_to_uniform(&current));
    }
    let steps = (tv_history[cap] <= threshold).then_some(cap);
    Ok(Convergence { steps, tv_history })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, cycle_graph};

    #[test]
    fn k2_simple_oscillates_lazy_mixes() {
        let k2 = complete_graph(2).unwrap();
        assert_eq!(discrete_step(&k2, &[1.0, 0.0], false).unwrap(), vec![0.0, 1.0]);
        assert_eq!(discrete_step(&k2, &[1.0, 0.0], true).unwrap(), vec![0.5, 0.5]);
    }

    #[test]
    fn k3_simple_step() {
        let k3 = complete_graph(3).unwrap();
        assert_eq!(
            discrete_step(&k3, &[1.0, 0.0, 0.0], false).unwrap(),
            vec![0.0, 0.5, 0.5]
        );
    }

    #[test]
    fn non_distribution_rejected() {
        let k3 = complete_graph(3).unwrap();
        assert!(discrete_step(&k3, &[0.5, 0.0, 0.0], false).is_err());
        assert!(discrete_step(&k3, &[1.5, -0.5, 0.0], false).is_err());
    }

    #[test]
    fn two_state_at_zero_is_identity() {
        let p = two_state_ct(1.0, 2.0, 0.0).unwrap();
        assert_eq!((p.get(0, 0), p.get(0, 1), p.get(1, 0), p.get(1, 1)), (1.0, 0.0, 0.0, 1.0));
    }

    #[test]
    fn degenerate_rates() {
        assert!(matches!(two_state_ct(0.0, 0.0, 1.0), Err(Error::DegenerateChain(_))));
        assert!(matches!(ct_limit(0.0, 0.0), Err(Error::DegenerateChain(_))));
        assert!(two_state_ct(-1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn limits() {
        assert_eq!(ct_limit(2.5, 2.5).unwrap(), vec![0.5, 0.5]);
        assert_eq!(ct_limit(1.0, 3.0).unwrap(), vec![0.75, 0.25]);
        assert_eq!(ct_limit(0.0, 1.0).unwrap(), vec![1.0, 0.0]);
        let late = two_state_ct(1.0, 3.0, 50.0).unwrap();
        assert!((late.get(0, 0) - 0.75).abs() < 1e-15);
        assert!((late.get(1, 0) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn lazy_cycle_converges() {
        let c5 = cycle_graph(5).unwrap();
        let conv = converge(&c5, &[1.0, 0.0, 0.0, 0.0, 0.0], true, 1e-9, 10_000).unwrap();
        let steps = conv.steps.expect("lazy walk converges");
        assert!(steps > 10 && steps < 10_000);
        assert!(conv.tv_history.windows(2).all(|w| w[1] <= w[0] + 1e-15));
    }
}
