//! Numerical laboratory for the quantized damped harmonic oscillator.
//!
//! Two closed quantum descriptions of `q̈ + 2αq̇ + ω²q = 0` are implemented
//! side by side:
//!
//! * the Bateman–Caldirola–Kanai (BCK) model, with the explicitly
//!   time-dependent Hamiltonian `½[e^{-2αt}p² + ω²e^{2αt}q²]` and its
//!   pseudostationary solutions, and
//! * the first-order model, with the time-independent Weyl-ordered
//!   Hamiltonian `½[p² + α(qp+pq) + ω²q²]` obtained from the system
//!   `ẋ = y, ẏ = -ω²x - 2αy`.
//!
//! The crate provides the states, operators (both as truncated Fock-basis
//! matrices and as grid differential actions), semiclassical closed forms,
//! time evolution in both pictures, and a verifier that measures every
//! equivalence and invariant connecting the two models: the dilation map
//! `D̂ψ(q) = e^{αt/2}ψ(qe^{αt})` between solution families, norm and
//! observable equivalence, uncertainty decay with its critical time, and
//! the large-`n` behaviour of the pseudostationary family.
//!
//! Everything is deterministic: no randomness, no global state. The crate
//! is `no_std` (alloc only); IO and the command-line front end live in the
//! companion `dho-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod dynamics;
pub mod equivalence;
mod error;
pub mod fd;
pub mod grid;
pub mod hermite;
pub mod operators;
pub mod params;
pub mod report;
pub mod states;
pub mod wave;

pub use error::{Error, Result};
pub use grid::SpatialGrid;
pub use params::OscillatorParams;
pub use report::CheckReport;
pub use wave::{inner_product, WaveFunction};

/// Complex scalar used throughout.
pub type Complex64 = num_complex::Complex<f64>;
