//! Physical constants of the damped oscillator (ħ = 1, m = 1).

// backs the no_std build; whenever some dependency links std (tests,
// benches), the inherent float methods win and this import goes quiet
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Frequency `ω`, friction `α` and the derived reduced frequency
/// `ω̃ = √(ω² − α²)`. Only the underdamped regime `0 ≤ α < ω` is admitted,
/// so `ω̃` is always real and positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    omega: f64,
    alpha: f64,
    omega_tilde: f64,
}

impl OscillatorParams {
    /// Validates `(ω, α)` and derives `ω̃`.
    pub fn new(omega: f64, alpha: f64) -> Result<Self> {
        if !(omega > 0.0) {
            return Err(Error::NonPositiveFrequency { omega });
        }
        if !(alpha >= 0.0) {
            return Err(Error::NegativeFriction { alpha });
        }
        if alpha >= omega {
            return Err(Error::Overdamped { omega, alpha });
        }
        Ok(Self {
            omega,
            alpha,
            omega_tilde: (omega * omega - alpha * alpha).sqrt(),
        })
    }

    /// Reference configuration used across checks: ω = 1, α = 0.6, ω̃ = 0.8.
    pub fn reference() -> Self {
        Self::new(1.0, 0.6).expect("reference configuration is valid")
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn omega_tilde(&self) -> f64 {
        self.omega_tilde
    }

    /// Energy of level `n` in the first-order model, `Eₙ = ω̃(n + ½)`.
    pub fn level_energy(&self, n: usize) -> f64 {
        self.omega_tilde * (n as f64 + 0.5)
    }
}
