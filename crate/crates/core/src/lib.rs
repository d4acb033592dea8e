//! Continuous-time quantum walks on regular graphs.
//!
//! The crate evolves `|psi_t> = exp(-iHt)|0>` for the normalized adjacency
//! Hamiltonian `H = A/d` of a `d`-regular graph and decides whether the walk
//! ever collapses to the exact uniform distribution.
//!
//! * [`specalg`] holds the dense complex linear algebra: Fourier matrices,
//!   circulant spectra, Kronecker products and spectral evolution.
//! * [`graphs`] builds the graph families (complete, balanced complete
//!   multipartite, cycles, transposition Cayley graphs of `S_n`, hypercubes).
//! * [`qwalk`] evolves walks through the generic spectral engine and through
//!   closed-form amplitude formulas, including the Bessel-series form for cycles.
//! * [`cwalk`] has the classical baselines: simple and lazy discrete walks and
//!   the two-state continuous-time chain.
//! * [`mixing`] certifies mixing for complete and multipartite graphs and scans
//!   numerically for everything else.
//! * [`cli`] is the command-line front end used by the `qwalk` binary.

pub mod cli;
pub mod cwalk;
mod error;
pub mod graphs;
pub mod mixing;
pub mod qwalk;
pub mod specalg;

pub use error::{Error, Result};
pub use num_complex::Complex64;
