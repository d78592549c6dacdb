//! Wavefunctions sampled on a grid, trapezoid quadrature, and band-limited
//! interpolation.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

// backs the no_std build; whenever some dependency links std (tests,
// benches), the inherent float methods win and this import goes quiet
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Complex64, Error, Result, SpatialGrid};

/// Complex samples of `ψ(q)` on a [`SpatialGrid`], taken at time `time_label`.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveFunction {
    pub grid: SpatialGrid,
    pub samples: Vec<Complex64>,
    pub time_label: f64,
}

impl WaveFunction {
    pub fn new(grid: SpatialGrid, samples: Vec<Complex64>, time_label: f64) -> Self {
        assert_eq!(
            samples.len(),
            grid.n_points(),
            "sample count must match the grid"
        );
        Self {
            grid,
            samples,
            time_label,
        }
    }

    /// Samples `f(q)` on every grid point.
    pub fn from_fn(
        grid: SpatialGrid,
        time_label: f64,
        mut f: impl FnMut(f64) -> Complex64,
    ) -> Self {
        let samples = grid.points().map(&mut f).collect();
        Self::new(grid, samples, time_label)
    }

    pub fn zero(grid: SpatialGrid, time_label: f64) -> Self {
        Self::new(grid, vec![Complex64::new(0.0, 0.0); grid.n_points()], time_label)
    }

    /// `∫|ψ|²dq` by the composite trapezoid rule.
    pub fn norm_squared(&self) -> f64 {
        let h = self.grid.spacing();
        let n = self.samples.len();
        let mut acc = 0.0;
        for (i, s) in self.samples.iter().enumerate() {
            let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
            acc += w * s.norm_sqr();
        }
        acc * h
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|s| s.norm()).fold(0.0, f64::max)
    }

    /// Largest pointwise modulus of the difference.
    pub fn max_abs_diff(&self, other: &WaveFunction) -> Result<f64> {
        check_compatible(self, other)?;
        Ok(self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Evaluates the wavefunction at an arbitrary position by Whittaker
    /// (sinc) interpolation over all samples; samples beyond the grid are
    /// treated as zero.
    ///
    /// The sum is evaluated as `sin(πs)/π · Σ_j (-1)^j f_j/(s - j)` with
    /// `s = (q - q_0)/h`, so only one sine is needed per target point.
    pub fn sample_at(&self, q: f64) -> Complex64 {
        let h = self.grid.spacing();
        let s = (q - self.grid.point(0)) / h;
        let round = s.round();
        if (s - round).abs() < 1e-9 {
            let j = round as isize;
            if j < 0 || j as usize >= self.samples.len() {
                return Complex64::new(0.0, 0.0);
            }
            return self.samples[j as usize];
        }
        let sin_pi_s = (PI * s).sin();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut sign = 1.0;
        for (j, f) in self.samples.iter().enumerate() {
            acc += f * (sign / (s - j as f64));
            sign = -sign;
        }
        acc * (sin_pi_s / PI)
    }

    /// Largest sample modulus within `edge_points` of either grid boundary.
    pub fn edge_amplitude(&self, edge_points: usize) -> f64 {
        let n = self.samples.len();
        let k = edge_points.min(n);
        self.samples[..k]
            .iter()
            .chain(&self.samples[n - k..])
            .map(|s| s.norm())
            .fold(0.0, f64::max)
    }
}

fn check_compatible(a: &WaveFunction, b: &WaveFunction) -> Result<()> {
    if a.grid != b.grid {
        return Err(Error::GridMismatch);
    }
    if a.time_label != b.time_label {
        return Err(Error::TimeMismatch {
            a: a.time_label,
            b: b.time_label,
        });
    }
    Ok(())
}

/// `∫ ā(q) b(q) dq` by the composite trapezoid rule. Both functions must
/// share the same grid and time label.
pub fn inner_product(a: &WaveFunction, b: &WaveFunction) -> Result<Complex64> {
    check_compatible(a, b)?;
    let h = a.grid.spacing();
    let n = a.samples.len();
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, (x, y)) in a.samples.iter().zip(&b.samples).enumerate() {
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        acc += x.conj() * y * w;
    }
    Ok(acc * h)
}

/// Global phase `e^{iφ} = ⟨b|a⟩/|⟨b|a⟩|` aligning `b` with `a`, and the
/// remaining max-abs difference `max|a - e^{iφ}b|`. Wavefunction families
/// defined only up to a phase are compared through this.
pub fn phase_aligned_max_diff(a: &WaveFunction, b: &WaveFunction) -> Result<(Complex64, f64)> {
    let ovl = inner_product(b, a)?;
    let phase = if ovl.norm() > 0.0 {
        ovl / ovl.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    let diff = a
        .samples
        .iter()
        .zip(&b.samples)
        .map(|(x, y)| (x - y * phase).norm())
        .fold(0.0, f64::max);
    Ok((phase, diff))
}
