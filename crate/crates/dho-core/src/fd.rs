//! Eighth-order central finite differences on uniform samples.
//!
//! Used only for cross-checks of the Fock-side operator algebra; the four
//! samples nearest each boundary carry no stencil and are returned as zero,
//! so callers must restrict comparisons to interior points (or use states
//! whose tails have decayed at the edges).

use alloc::vec;
use alloc::vec::Vec;

use crate::Complex64;

const STENCIL_RADIUS: usize = 4;

/// d/dq, 8th order: antisymmetric stencil over ±4 points.
const D1: [f64; 4] = [4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];

/// d²/dq², 8th order.
const D2_CENTER: f64 = -205.0 / 72.0;
const D2: [f64; 4] = [8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0];

/// First derivative of the samples; valid on the interior, zero on the
/// outermost 4 points of each side.
pub fn first_derivative(samples: &[Complex64], spacing: f64) -> Vec<Complex64> {
    let n = samples.len();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    if n < 2 * STENCIL_RADIUS + 1 {
        return out;
    }
    for i in STENCIL_RADIUS..n - STENCIL_RADIUS {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in D1.iter().enumerate() {
            acc += (samples[i + k + 1] - samples[i - k - 1]) * *c;
        }
        out[i] = acc / spacing;
    }
    out
}

/// Second derivative of the samples; valid on the interior, zero on the
/// outermost 4 points of each side.
pub fn second_derivative(samples: &[Complex64], spacing: f64) -> Vec<Complex64> {
    let n = samples.len();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    if n < 2 * STENCIL_RADIUS + 1 {
        return out;
    }
    let h2 = spacing * spacing;
    for i in STENCIL_RADIUS..n - STENCIL_RADIUS {
        let mut acc = samples[i] * D2_CENTER;
        for (k, c) in D2.iter().enumerate() {
            acc += (samples[i + k + 1] + samples[i - k - 1]) * *c;
        }
        out[i] = acc / h2;
    }
    out
}

/// Number of points skipped at each boundary.
pub fn stencil_radius() -> usize {
    STENCIL_RADIUS
}
