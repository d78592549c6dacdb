//! Uniform symmetric position grids.

// backs the no_std build; whenever some dependency links std (tests,
// benches), the inherent float methods win and this import goes quiet
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, OscillatorParams, Result};

/// Safety factor applied to the classical turning point when auto-sizing.
const TURNING_SAFETY: f64 = 1.5;
/// Extra width (in units of the oscillator length 1/√ω̃) keeping Gaussian
/// tails below ~1e-14 at the boundary even for the ground state.
const TAIL_PAD: f64 = 6.5;
/// Default sampling density relative to the shortest local wavelength.
const POINTS_PER_WAVELENGTH: f64 = 16.0;
/// Cap on the spacing in units of the narrowest Gaussian width, so that
/// trapezoid sums of low-order states stay spectrally converged.
const SIGMA_SPACING: f64 = 0.7;

/// Uniform grid on `[-half_width, half_width]` with an odd number of points,
/// so `q = 0` is always a sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialGrid {
    half_width: f64,
    n_points: usize,
}

impl SpatialGrid {
    /// A grid with the given half width `Q` and point count `N` (odd, ≥ 16).
    pub fn new(half_width: f64, n_points: usize) -> Result<Self> {
        if !(half_width > 0.0) || !half_width.is_finite() {
            return Err(Error::BadGrid {
                reason: "half width must be positive and finite",
            });
        }
        if n_points < 16 {
            return Err(Error::BadGrid {
                reason: "need at least 16 points",
            });
        }
        if n_points % 2 == 0 {
            return Err(Error::BadGrid {
                reason: "point count must be odd so q = 0 is sampled",
            });
        }
        Ok(Self {
            half_width,
            n_points,
        })
    }

    /// Auto-sizes a grid that holds state `n_max` for every `|t| ≤ t_max`.
    ///
    /// The half width is the classical turning point `√((2n+1)/ω̃)` scaled by
    /// 1.5, padded so Gaussian tails fall below ~1e-14 at the edge, and
    /// stretched by `e^{α t_max}` to cover the time-rescaled family. The
    /// spacing resolves the shortest local wavelength with at least 16
    /// points per oscillation.
    pub fn auto(params: OscillatorParams, n_max: usize, t_max: f64) -> Self {
        Self::auto_refined(params, n_max, t_max, 1.0)
    }

    /// Same as [`SpatialGrid::auto`] with the sampling density multiplied by
    /// `refine` (> 1 for finite-difference work that needs extra accuracy).
    pub fn auto_refined(
        params: OscillatorParams,
        n_max: usize,
        t_max: f64,
        refine: f64,
    ) -> Self {
        let wt = params.omega_tilde();
        let stretch = (params.alpha() * t_max.abs()).exp();
        let turning = ((2.0 * n_max as f64 + 1.0) / wt).sqrt();
        let half_width = (TURNING_SAFETY * turning + TAIL_PAD / wt.sqrt()) * stretch;

        let k_max = ((2.0 * n_max as f64 + 1.0) * wt).sqrt() * stretch;
        let by_wavelength =
            2.0 * core::f64::consts::PI / (POINTS_PER_WAVELENGTH * refine * k_max);
        let by_sigma = SIGMA_SPACING / (wt.sqrt() * stretch * refine);
        let spacing = by_wavelength.min(by_sigma);

        let mut n_points = (2.0 * half_width / spacing).ceil() as usize + 1;
        if n_points % 2 == 0 {
            n_points += 1;
        }
        Self {
            half_width,
            n_points: n_points.max(17),
        }
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.n_points - 1) as f64
    }

    /// Position of sample `i`.
    pub fn point(&self, i: usize) -> f64 {
        -self.half_width + self.spacing() * i as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(move |i| self.point(i))
    }

    pub fn contains(&self, q: f64) -> bool {
        q.abs() <= self.half_width * (1.0 + 1e-12)
    }
}
