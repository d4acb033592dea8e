//! Regular graph families and their walk Hamiltonians.
//!
//! Vertex numbering is part of the contract:
//!
//! * balanced multipartite graphs are block-contiguous, vertex `v` lives in
//!   block `v / b`;
//! * Cayley graphs of `S_n` number permutations in lexicographic order of
//!   their one-line notation;
//! * hypercube vertices are bit strings read as integers.

mod edge_list;
mod isomorphism;
mod perm;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::specalg::ComplexMatrix;
use crate::{Error, Result};

pub use isomorphism::find_isomorphism;
pub use perm::{lexicographic_permutations, permutation_sign};

pub const MAX_CAYLEY_N: usize = 5;
pub const MAX_HYPERCUBE_D: usize = 12;

/// Graph family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Complete { n: usize },
    Multipartite { a: usize, b: usize },
    Cycle { n: usize },
    CayleySym { n: usize },
    Hypercube { d: usize },
    Custom,
}

impl Family {
    /// Builds the graph this tag describes. `Custom` has no canonical graph.
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete { n } => complete_graph(n),
            Family::Multipartite { a, b } => balanced_multipartite(a, b),
            Family::Cycle { n } => cycle_graph(n),
            Family::CayleySym { n } => cayley_symmetric(n),
            Family::Hypercube { d } => hypercube_graph(d),
            Family::Custom => Err(Error::InvalidParameter(
                "a custom family has no canonical construction".into(),
            )),
        }
    }

    /// Short human label, e.g. `K_5`, `K_{2x3}`, `C_7`.
    pub fn label(&self) -> String {
        match *self {
            Family::Complete { n } => format!("K_{n}"),
            Family::Multipartite { a, b } => format!("K_{{{a}x{b}}}"),
            Family::Cycle { n } => format!("C_{n}"),
            Family::CayleySym { n } => format!("X_{n}"),
            Family::Hypercube { d } => format!("Q_{d}"),
            Family::Custom => "custom".into(),
        }
    }
}

/// Token form used in edge-list headers: `complete:5`, `multipartite:2x3`, `cycle:7`,
/// `cayley-sym:4`, `hypercube:3`, `custom`.
impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Complete { n } => write!(f, "complete:{n}"),
            Family::Multipartite { a, b } => write!(f, "multipartite:{a}x{b}"),
            Family::Cycle { n } => write!(f, "cycle:{n}"),
            Family::CayleySym { n } => write!(f, "cayley-sym:{n}"),
            Family::Hypercube { d } => write!(f, "hypercube:{d}"),
            Family::Custom => write!(f, "custom"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unrecognised family token `{s}`"));
        if s == "custom" {
            return Ok(Family::Custom);
        }
        let (name, params) = s.split_once(':').ok_or_else(bad)?;
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        Ok(match name {
            "complete" => Family::Complete { n: num(params)? },
            "multipartite" => {
                let (a, b) = params.split_once('x').ok_or_else(bad)?;
                Family::Multipartite {
                    a: num(a)?,
                    b: num(b)?,
                }
            }
            "cycle" => Family::Cycle { n: num(params)? },
            "cayley-sym" => Family::CayleySym { n: num(params)? },
            "hypercube" => Family::Hypercube { d: num(params)? },
            _ => return Err(bad()),
        })
    }
}

/// A simple, undirected, connected, regular graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<bool>,
    degree: usize,
    family: Family,
}

impl Graph {
    /// Validates symmetry, zero diagonal, regularity and connectivity.
    pub fn from_adjacency(n: usize, adjacency: Vec<bool>, family: Family) -> Result<Self> {
        if n == 0 {
            return Err(Error::DegenerateGraph("graph has no vertices".into()));
        }
        if adjacency.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: adjacency.len(),
            });
        }
        for u in 0..n {
            if adjacency[u * n + u] {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            for v in (u + 1)..n {
                if adjacency[u * n + v] != adjacency[v * n + u] {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency is not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        let degree = adjacency[..n].iter().filter(|&&e| e).count();
        for u in 1..n {
            let d = adjacency[u * n..(u + 1) * n].iter().filter(|&&e| e).count();
            if d != degree {
                return Err(Error::InvalidParameter(format!(
                    "graph is not regular: vertex 0 has degree {degree}, vertex {u} has {d}"
                )));
            }
        }
        if degree == 0 {
            return Err(Error::DegenerateGraph("graph has no edges".into()));
        }
        let graph = Graph {
            n,
            adjacency,
            degree,
            family,
        };
        if !graph.is_connected() {
            return Err(Error::DegenerateGraph("graph is not connected".into()));
        }
        Ok(graph)
    }

    fn from_edge_fn(n: usize, family: Family, mut edge: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut adjacency = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                adjacency[u * n + v] = u != v && edge(u, v);
            }
        }
        Self::from_adjacency(n, adjacency, family)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.n * self.degree / 2
    }

    pub fn adjacency_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.n, self.n, |u, v| {
            Complex64::new(if self.has_edge(u, v) { 1.0 } else { 0.0 }, 0.0)
        })
        .into_hermitian()
        .expect("adjacency is symmetric by construction")
    }

    /// Row 0 of the adjacency when the graph is circulant in its vertex order.
    pub fn circulant_first_column(&self) -> Option<Vec<f64>> {
        let n = self.n;
        for u in 0..n {
            for v in 0..n {
                if self.has_edge(u, v) != self.has_edge(0, (v + n - u) % n) {
                    return None;
                }
            }
        }
        Some(
            (0..n)
                .map(|v| if self.has_edge(v, 0) { 1.0 } else { 0.0 })
                .collect(),
        )
    }

    /// Whether `color` is a proper two-coloring.
    pub fn is_proper_two_coloring(&self, color: &[bool]) -> bool {
        color.len() == self.n && self.edges().iter().all(|&(u, v)| color[u] != color[v])
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }
}

/// `K_n`: adjacency `J_n - I_n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("complete graph needs n >= 2, got {n}")));
    }
    Graph::from_edge_fn(n, Family::Complete { n }, |_, _| true)
}

/// Complete `a`-partite graph with `b` vertices per block, adjacency `(J_a - I_a) (x) J_b`.
///
/// `b = 1` is the complete graph `K_a`. `a = 1` is the empty graph and is rejected.
pub fn balanced_multipartite(a: usize, b: usize) -> Result<Graph> {
    if a <= 1 {
        return Err(Error::DegenerateGraph(format!(
            "balanced multipartite graph needs a >= 2 blocks, got {a}"
        )));
    }
    if b == 0 {
        return Err(Error::InvalidParameter("blocks must be nonempty".into()));
    }
    if b == 1 {
        return complete_graph(a);
    }
    Graph::from_edge_fn(a * b, Family::Multipartite { a, b }, |u, v| u / b != v / b)
}

/// `C_n`: circulant with first column `[0, 1, 0, ..., 0, 1]`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edge_fn(n, Family::Cycle { n }, |u, v| (u + 1) % n == v || (v + 1) % n == u)
}

/// Cayley graph of `S_n` generated by all transpositions, edges `(pi, tau pi)`.
pub fn cayley_symmetric(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("Cayley graph needs n >= 2, got {n}")));
    }
    if n > MAX_CAYLEY_N {
        return Err(Error::SizeLimit(format!(
            "Cayley graph of S_{n} exceeds the supported n <= {MAX_CAYLEY_N}"
        )));
    }
    let perms = lexicographic_permutations(n);
    let index = |p: &[usize]| -> usize {
        perms
            .binary_search_by(|q| q.as_slice().cmp(p))
            .expect("permutation is in the table")
    };
    let size = perms.len();
    let mut adjacency = vec![false; size * size];
    for (u, p) in perms.iter().enumerate() {
        for i in 0..n {
            for j in (i + 1)..n {
                // tau . pi swaps the values i and j in pi's one-line notation
                let q: Vec<usize> = p
                    .iter()
                    .map(|&x| if x == i { j } else if x == j { i } else { x })
                    .collect();
                let v = index(&q);
                adjacency[u * size + v] = true;
            }
        }
    }
    Graph::from_adjacency(size, adjacency, Family::CayleySym { n })
}

/// `Q_d`: bit strings of length `d`, adjacent at Hamming distance one.
pub fn hypercube_graph(d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidParameter("hypercube needs d >= 1".into()));
    }
    if d > MAX_HYPERCUBE_D {
        return Err(Error::SizeLimit(format!(
            "hypercube of dimension {d} exceeds the supported d <= {MAX_HYPERCUBE_D}"
        )));
    }
    Graph::from_edge_fn(1 << d, Family::Hypercube { d }, |u, v| (u ^ v).count_ones() == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// `H = A / d`.
    AdjacencyOverDegree,
    /// `L = A - D` with `D = diag(deg)`.
    Laplacian,
    /// `(I + A/d) / 2`.
    Lazy,
}

#[derive(Clone, Debug)]
pub struct Hamiltonian {
    pub matrix: ComplexMatrix,
    pub normalization: Normalization,
}

pub fn hamiltonian(g: &Graph, normalization: Normalization) -> Hamiltonian {
    let a = g.adjacency_matrix();
    let d = g.degree() as f64;
    let identity = ComplexMatrix::identity(g.n());
    let matrix = match normalization {
        Normalization::AdjacencyOverDegree => a.scale(Complex64::new(1.0 / d, 0.0)),
        Normalization::Laplacian => a
            .add_scaled(&identity, Complex64::new(-d, 0.0))
            .expect("same shape"),
        Normalization::Lazy => identity
            .scale(Complex64::new(0.5, 0.0))
            .add_scaled(&a, Complex64::new(0.5 / d, 0.0))
            .expect("same shape"),
    };
    Hamiltonian {
        matrix,
        normalization,
    }
}
