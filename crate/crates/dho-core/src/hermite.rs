//! Orthonormal Hermite functions and the large-`n` asymptotic form of the
//! pseudostationary states.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

// backs the no_std build; whenever some dependency links std (tests,
// benches), the inherent float methods win and this import goes quiet
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Complex64, Error, OscillatorParams, Result};

/// Orthonormal Hermite function `hₙ(u) = (2ⁿ n! √π)^{-1/2} e^{-u²/2} Hₙ(u)`.
///
/// Evaluated with the normalized three-term recurrence
/// `h_{k+1} = u√(2/(k+1))·h_k − √(k/(k+1))·h_{k−1}` seeded by
/// `h₀ = π^{-1/4}e^{-u²/2}`, which keeps every intermediate `O(1)`; the raw
/// polynomials `Hₙ` overflow doubles near n ≈ 150.
pub fn hermite_function(n: usize, u: f64) -> f64 {
    let mut prev = 0.0f64;
    let mut cur = PI.powf(-0.25) * (-0.5 * u * u).exp();
    for k in 0..n {
        let kf = k as f64;
        let next = u * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// All orders `h₀(u) … h_{n_max}(u)` in one sweep of the recurrence.
pub fn hermite_functions(n_max: usize, u: f64) -> Vec<f64> {
    let mut out = vec![0.0; n_max + 1];
    out[0] = PI.powf(-0.25) * (-0.5 * u * u).exp();
    if n_max >= 1 {
        out[1] = u * 2.0f64.sqrt() * out[0];
    }
    for k in 1..n_max {
        let kf = k as f64;
        out[k + 1] = u * (2.0 / (kf + 1.0)).sqrt() * out[k] - (kf / (kf + 1.0)).sqrt() * out[k - 1];
    }
    out
}

/// `ln[(2m−1)!!/(2m)!!]`, accumulated in log space. The ratio equals the
/// normalized central binomial and decays like `(πm)^{-1/2}`.
pub fn log_double_factorial_ratio(m: usize) -> f64 {
    let mut acc = 0.0;
    for j in 1..=m {
        acc += ((2 * j - 1) as f64).ln() - ((2 * j) as f64).ln();
    }
    acc
}

/// Large-`n` asymptotic form of the pseudostationary state `ψₙ^{asym}(q, t)`:
/// a plane cosine (even `n`) or sine (odd `n`) of wavenumber
/// `√((4⌊n/2⌋+1)ω̃)·e^{αt}` resp. `√((4⌊n/2⌋+3)ω̃)·e^{αt}`, carrying the
/// gauge phase `e^{-iαq²e^{2αt}/2}` and the exact `q = 0` amplitude
/// `(ω̃/π)^{1/4}(−1)^⌊n/2⌋ √((2⌊n/2⌋−1)!!/(2⌊n/2⌋)!!)`.
///
/// Unlike the true states this form has no Gaussian envelope, so it is not
/// square-integrable; it is meaningful on compact windows only.
pub fn asymptotic_pseudostationary(
    n: usize,
    q: f64,
    t: f64,
    params: OscillatorParams,
) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::AsymptoticOrderZero);
    }
    let wt = params.omega_tilde();
    let m = n / 2;
    let stretch = (params.alpha() * t).exp();
    let amp = (wt / PI).powf(0.25)
        * if m % 2 == 0 { 1.0 } else { -1.0 }
        * (0.5 * log_double_factorial_ratio(m)).exp();
    let order_term = if n % 2 == 0 {
        (4 * m + 1) as f64
    } else {
        (4 * m + 3) as f64
    };
    let wavenumber = (order_term * wt).sqrt() * stretch;
    let oscillation = if n % 2 == 0 {
        (wavenumber * q).cos()
    } else {
        (wavenumber * q).sin()
    };
    let gauge = Complex64::new(0.0, -0.5 * params.alpha() * q * q * stretch * stretch).exp();
    Ok(gauge * (amp * oscillation))
}
