//! Every named state family: ω̃-oscillator stationary states, first-order
//! eigenstates, BCK pseudostationary states, coherent states, and squeezed
//! states.

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};
// backs the no_std build; whenever some dependency links std (tests,
// benches), the inherent float methods win and this import goes quiet
#[allow(unused_imports)]
use num_traits::Float;

use crate::hermite::{hermite_function, hermite_functions};
use crate::operators::{apply_antihermitian_exp, ladder_pair};
use crate::{Complex64, Error, OscillatorParams, Result, SpatialGrid, WaveFunction};

/// Stationary state of the reduced oscillator,
/// `ψₙ^ω̃(q) = ω̃^{1/4} hₙ(√ω̃ q)`, sampled on the grid.
pub fn stationary_state(n: usize, params: OscillatorParams, grid: &SpatialGrid) -> WaveFunction {
    let wt = params.omega_tilde();
    let scale = wt.powf(0.25);
    WaveFunction::from_fn(*grid, 0.0, |q| {
        Complex64::new(scale * hermite_function(n, wt.sqrt() * q), 0.0)
    })
}

/// Eigenstate of the first-order Hamiltonian,
/// `ψₙ(q) = e^{-iαq²/2} ψₙ^ω̃(q)`, i.e. the Ŝ-image of the stationary state.
pub fn first_order_eigenstate(
    n: usize,
    params: OscillatorParams,
    grid: &SpatialGrid,
) -> WaveFunction {
    pseudostationary_state(n, 0.0, params, grid)
}

/// Pseudostationary solution of the BCK Schrödinger equation,
/// `ψₙ^{BCK}(q,t) = ω̃^{1/4} e^{αt/2} hₙ(√ω̃ q e^{αt}) e^{-i(Eₙt + αq²e^{2αt}/2)}`,
/// with time-independent unit norm. At `t = 0` it reduces exactly to the
/// first-order eigenstate.
pub fn pseudostationary_state(
    n: usize,
    t: f64,
    params: OscillatorParams,
    grid: &SpatialGrid,
) -> WaveFunction {
    let wt = params.omega_tilde();
    let alpha = params.alpha();
    let stretch = (alpha * t).exp();
    let amp = wt.powf(0.25) * stretch.sqrt();
    let energy_phase = params.level_energy(n) * t;
    WaveFunction::from_fn(*grid, t, |q| {
        let envelope = amp * hermite_function(n, wt.sqrt() * q * stretch);
        let phase = -(energy_phase + 0.5 * alpha * q * q * stretch * stretch);
        Complex64::new(0.0, phase).exp() * envelope
    })
}

/// State in the truncated ω̃-oscillator number basis.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    basis_params: OscillatorParams,
    coeffs: DVector<Complex64>,
}

impl FockVector {
    pub fn from_coefficients(basis_params: OscillatorParams, coeffs: DVector<Complex64>) -> Self {
        Self {
            basis_params,
            coeffs,
        }
    }

    /// Basis vector `|n⟩`.
    pub fn basis_state(basis_params: OscillatorParams, dim: usize, n: usize) -> Self {
        assert!(n < dim);
        let mut coeffs = DVector::zeros(dim);
        coeffs[n] = Complex64::new(1.0, 0.0);
        Self {
            basis_params,
            coeffs,
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn basis_params(&self) -> OscillatorParams {
        self.basis_params
    }

    pub fn coefficients(&self) -> &DVector<Complex64> {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs[n]
    }

    /// `Σ|cₙ|²`.
    pub fn norm_squared(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &FockVector) -> Result<Complex64> {
        if self.basis_params != other.basis_params || self.dim() != other.dim() {
            return Err(Error::BasisMismatch);
        }
        Ok(self.coeffs.dotc(&other.coeffs))
    }
}

/// Complex label `z` and real squeeze parameter `ξ` selecting a
/// semiclassical state; `ξ = 0` is a plain coherent state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentSpec {
    pub z: Complex64,
    pub xi: f64,
}

/// Tail mass a coherent truncation may leave outside the basis.
const COHERENT_TAIL_THRESHOLD: f64 = 1e-12;
/// Norm defect a squeezed-state truncation may exhibit.
const SQUEEZED_NORM_THRESHOLD: f64 = 1e-10;

/// Coherent state `|z⟩ = D(z)|0⟩` with `cₙ = e^{-|z|²/2} zⁿ/√(n!)`.
///
/// Fails when the truncated Poisson tail `Σ_{n≥M}|cₙ|²` exceeds `1e-12`.
/// The position-space state of the first-order model is `Ŝ|z⟩`; apply the
/// S-transform to the synthesized wavefunction to obtain it.
pub fn coherent_state(
    z: Complex64,
    params: OscillatorParams,
    dim: usize,
) -> Result<FockVector> {
    let mut coeffs = DVector::zeros(dim);
    let weight = (-0.5 * z.norm_sqr()).exp();
    let mut term = Complex64::new(weight, 0.0);
    let mut kept = 0.0;
    for n in 0..dim {
        coeffs[n] = term;
        kept += term.norm_sqr();
        term = term * z / ((n + 1) as f64).sqrt();
    }
    let tail = (1.0 - kept).max(0.0);
    if tail > COHERENT_TAIL_THRESHOLD {
        return Err(Error::TruncationTail {
            tail,
            threshold: COHERENT_TAIL_THRESHOLD,
        });
    }
    Ok(FockVector::from_coefficients(params, coeffs))
}

/// Squeezed coherent state `|z,ξ⟩ = exp(z b̂†(t) − z̄ b̂(t)) |0_b⟩` built from
/// the conserved pair `b̂(t) = cosh ξ e^{iω̃t} â + sinh ξ e^{-iω̃t} â†`.
///
/// `|0_b⟩` is the vacuum annihilated by `b̂(t)` (an even-sector squeezed
/// Gaussian over the â-basis); applying the displacement to the plain
/// â-vacuum instead would collapse the generator to `exp(μâ†−μ̄â)` and lose
/// every ξ-dependence of the variances. The generator exponential is the
/// matrix exponential of the truncated anti-Hermitian matrix; a norm defect
/// above `1e-10` signals the truncation is too small for the requested ξ.
pub fn squeezed_state(
    spec: &CoherentSpec,
    t: f64,
    params: OscillatorParams,
    dim: usize,
) -> Result<FockVector> {
    let wt = params.omega_tilde();
    let (cosh, sinh) = (spec.xi.cosh(), spec.xi.sinh());
    let rot = Complex64::new(0.0, wt * t).exp();

    // kernel state of b(t): even-sector two-step recurrence
    let tau = rot.conj() * rot.conj() * (sinh / cosh);
    let mut vac = DVector::<Complex64>::zeros(dim);
    vac[0] = Complex64::new(1.0, 0.0);
    let mut m = 0;
    while m + 2 < dim {
        let step = -tau * ((m + 1) as f64 / (m + 2) as f64).sqrt();
        vac[m + 2] = vac[m] * step;
        m += 2;
    }
    let vac_norm2: f64 = vac.iter().map(|c| c.norm_sqr()).sum();
    // the untruncated kernel recurrence sums to cosh(xi); the missing tail
    // is caught here before the displacement hides it
    let defect = (cosh - vac_norm2).abs() / cosh;
    if defect > SQUEEZED_NORM_THRESHOLD {
        return Err(Error::TruncationTail {
            tail: defect,
            threshold: SQUEEZED_NORM_THRESHOLD,
        });
    }
    vac /= Complex64::new(vac_norm2.sqrt(), 0.0);

    let (a, adag) = ladder_pair(dim);
    let b: DMatrix<Complex64> = &a * (rot * cosh) + &adag * (rot.conj() * sinh);
    let bdag = b.adjoint();
    let gen = bdag * spec.z - b * spec.z.conj();
    let coeffs = apply_antihermitian_exp(&gen, &vac);

    let out = FockVector::from_coefficients(params, coeffs);
    let norm_defect = (out.norm_squared() - 1.0).abs();
    if norm_defect > SQUEEZED_NORM_THRESHOLD {
        return Err(Error::TruncationTail {
            tail: norm_defect,
            threshold: SQUEEZED_NORM_THRESHOLD,
        });
    }
    Ok(out)
}

/// The first `dim` basis functions `ψₖ^ω̃` sampled on a grid, with the
/// trapezoid weights folded in: projects wavefunctions onto the Fock basis
/// and synthesizes them back. Build once per (grid, dim) and reuse.
pub struct GridBasis {
    params: OscillatorParams,
    grid: SpatialGrid,
    /// `dim × n_points` real samples of the basis functions.
    values: DMatrix<f64>,
}

impl GridBasis {
    pub fn new(params: OscillatorParams, grid: SpatialGrid, dim: usize) -> Self {
        let wt = params.omega_tilde();
        let scale = wt.powf(0.25);
        let n = grid.n_points();
        let mut values = DMatrix::zeros(dim, n);
        for (i, q) in grid.points().enumerate() {
            let h = hermite_functions(dim - 1, wt.sqrt() * q);
            for k in 0..dim {
                values[(k, i)] = scale * h[k];
            }
        }
        Self {
            params,
            grid,
            values,
        }
    }

    pub fn dim(&self) -> usize {
        self.values.nrows()
    }

    pub fn grid(&self) -> SpatialGrid {
        self.grid
    }

    pub fn params(&self) -> OscillatorParams {
        self.params
    }

    /// Quadrature projection `cₖ = ⟨ψₖ^ω̃|f⟩`.
    pub fn project(&self, f: &WaveFunction) -> Result<FockVector> {
        if f.grid != self.grid {
            return Err(Error::GridMismatch);
        }
        let h = self.grid.spacing();
        let n = self.grid.n_points();
        let mut coeffs = DVector::zeros(self.dim());
        for k in 0..self.dim() {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..n {
                let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
                acc += f.samples[i] * (self.values[(k, i)] * w);
            }
            coeffs[k] = acc * h;
        }
        Ok(FockVector::from_coefficients(self.params, coeffs))
    }

    /// Synthesis `f(qᵢ) = Σₖ cₖ ψₖ^ω̃(qᵢ)`.
    pub fn synthesize(&self, v: &FockVector, time_label: f64) -> Result<WaveFunction> {
        if v.basis_params() != self.params || v.dim() != self.dim() {
            return Err(Error::BasisMismatch);
        }
        let n = self.grid.n_points();
        let mut samples = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..self.dim() {
                acc += v.coeff(k) * self.values[(k, i)];
            }
            samples.push(acc);
        }
        Ok(WaveFunction::new(self.grid, samples, time_label))
    }
}
