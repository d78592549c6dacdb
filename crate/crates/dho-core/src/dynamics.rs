//! Classical trajectories, quantum time evolution in both pictures, and the
//! closed-form semiclassical quantities (means, variances, uncertainty
//! product, trajectory radius, critical time).

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};
// backs the no_std build; whenever some dependency links std (tests,
// benches), the inherent float methods win and this import goes quiet
#[allow(unused_imports)]
use num_traits::Float;

use crate::operators::{eigendecompose_hermitian, hamiltonian_first_order, ladder_pair};
use crate::states::{CoherentSpec, FockVector, GridBasis};
use crate::{fd, Complex64, Error, OscillatorParams, Result, WaveFunction};

/// Point of the first-order phase flow `ẋ = y, ẏ = -ω²x - 2αy`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub x: f64,
    pub y: f64,
    pub t: f64,
}

/// One row of a semiclassical table: means and spreads of `x̌, y̌` at `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    pub t: f64,
    pub mean_x: f64,
    pub mean_y: f64,
    pub var_x: f64,
    pub var_y: f64,
    pub uncertainty_product: f64,
}

/// Exact solution of the first-order system started from `p0` (taken at its
/// own `p0.t`), evaluated a lapse `t − p0.t` later:
/// `x(τ) = e^{-ατ}[x₀cos ω̃τ + ((y₀+αx₀)/ω̃) sin ω̃τ]`, `y = ẋ`.
pub fn classical_closed_form(p0: PhasePoint, t: f64, params: OscillatorParams) -> PhasePoint {
    let tau = t - p0.t;
    let wt = params.omega_tilde();
    let alpha = params.alpha();
    let (c, s) = ((wt * tau).cos(), (wt * tau).sin());
    let damp = (-alpha * tau).exp();
    let mix = (p0.y + alpha * p0.x) / wt;
    let x = damp * (p0.x * c + mix * s);
    let y = damp * (-alpha * (p0.x * c + mix * s) - p0.x * wt * s + (p0.y + alpha * p0.x) * c);
    PhasePoint { x, y, t }
}

fn rhs(p: &PhasePoint, params: OscillatorParams) -> (f64, f64) {
    (
        p.y,
        -params.omega() * params.omega() * p.x - 2.0 * params.alpha() * p.y,
    )
}

fn rk4_step(p: PhasePoint, dt: f64, params: OscillatorParams) -> PhasePoint {
    let (k1x, k1y) = rhs(&p, params);
    let mid1 = PhasePoint {
        x: p.x + 0.5 * dt * k1x,
        y: p.y + 0.5 * dt * k1y,
        t: p.t + 0.5 * dt,
    };
    let (k2x, k2y) = rhs(&mid1, params);
    let mid2 = PhasePoint {
        x: p.x + 0.5 * dt * k2x,
        y: p.y + 0.5 * dt * k2y,
        t: p.t + 0.5 * dt,
    };
    let (k3x, k3y) = rhs(&mid2, params);
    let end = PhasePoint {
        x: p.x + dt * k3x,
        y: p.y + dt * k3y,
        t: p.t + dt,
    };
    let (k4x, k4y) = rhs(&end, params);
    PhasePoint {
        x: p.x + dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
        y: p.y + dt / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
        t: p.t + dt,
    }
}

/// Classic fixed-step RK4 integration from `p0` to time `t`.
pub fn classical_rk4(p0: PhasePoint, t: f64, dt: f64, params: OscillatorParams) -> PhasePoint {
    assert!(dt > 0.0, "step must be positive");
    let span = t - p0.t;
    let steps = (span.abs() / dt).ceil().max(1.0) as usize;
    let h = span / steps as f64;
    let mut p = p0;
    for _ in 0..steps {
        p = rk4_step(p, h, params);
    }
    p.t = t;
    p
}

/// Full RK4 trajectory sampled at every step (including `p0` itself).
pub fn rk4_trajectory(
    p0: PhasePoint,
    t_end: f64,
    dt: f64,
    params: OscillatorParams,
) -> Vec<PhasePoint> {
    assert!(dt > 0.0, "step must be positive");
    let steps = ((t_end - p0.t) / dt).ceil().max(1.0) as usize;
    let h = (t_end - p0.t) / steps as f64;
    let mut out = Vec::with_capacity(steps + 1);
    out.push(p0);
    let mut p = p0;
    for _ in 0..steps {
        p = rk4_step(p, h, params);
        out.push(p);
    }
    out
}

/// Residual of the multiplier-equivalent equation
/// `e^{2αt}(ẍ + 2αẋ + ω²x)` along a stored trajectory, with the
/// derivatives taken by finite differences from the samples (so the check
/// is not algebraically vacuous). Boundary samples without a stencil are
/// skipped; returns `(t, residual)` pairs.
pub fn multiplier_residuals(
    trajectory: &[PhasePoint],
    params: OscillatorParams,
) -> Vec<(f64, f64)> {
    let n = trajectory.len();
    if n < 2 * fd::stencil_radius() + 1 {
        return Vec::new();
    }
    let h = trajectory[1].t - trajectory[0].t;
    let xs: Vec<Complex64> = trajectory
        .iter()
        .map(|p| Complex64::new(p.x, 0.0))
        .collect();
    let d1 = fd::first_derivative(&xs, h);
    let d2 = fd::second_derivative(&xs, h);
    let w2 = params.omega() * params.omega();
    let margin = fd::stencil_radius();
    (margin..n - margin)
        .map(|i| {
            let p = &trajectory[i];
            let resid = (2.0 * params.alpha() * p.t).exp()
                * (d2[i].re + 2.0 * params.alpha() * d1[i].re + w2 * p.x);
            (p.t, resid)
        })
        .collect()
}

/// Mechanical energy `½(y² + ω²x²)` of a phase point.
pub fn mechanical_energy(p: &PhasePoint, params: OscillatorParams) -> f64 {
    0.5 * (p.y * p.y + params.omega() * params.omega() * p.x * p.x)
}

/// Closed-form coherent-state means and spreads at time `t`:
/// `⟨x⟩ = e^{-αt}(ze^{-iω̃t} + z̄e^{iω̃t})/√(2ω̃)`,
/// `⟨y⟩ = i√(ω̃/2)e^{-αt}(z̄e^{iω̃t} − ze^{-iω̃t}) − α⟨x⟩`,
/// `Δx² = e^{-2αt}/(2ω̃)`, `Δy² = e^{-2αt}ω²/(2ω̃)`,
/// `ΔxΔy = ½ e^{-2αt} ω/ω̃`.
pub fn coherent_means(z: Complex64, t: f64, params: OscillatorParams) -> TrajectorySample {
    let wt = params.omega_tilde();
    let damp = (-params.alpha() * t).exp();
    let rot = Complex64::new(0.0, -wt * t).exp();
    let mean_x = damp / (2.0 * wt).sqrt() * (z * rot + (z * rot).conj()).re;
    let osc = (z * rot).conj() - z * rot;
    let mean_y = (Complex64::new(0.0, (wt / 2.0).sqrt() * damp) * osc).re - params.alpha() * mean_x;
    let var_x = damp * damp / (2.0 * wt);
    let var_y = damp * damp * params.omega() * params.omega() / (2.0 * wt);
    TrajectorySample {
        t,
        mean_x,
        mean_y,
        var_x,
        var_y,
        uncertainty_product: (var_x * var_y).sqrt(),
    }
}

/// `ΔxΔy(t) = ½ e^{-2αt} ω/ω̃` for coherent states.
pub fn uncertainty_product(t: f64, params: OscillatorParams) -> f64 {
    0.5 * (-2.0 * params.alpha() * t).exp() * params.omega() / params.omega_tilde()
}

/// Radius `ρ = √(⟨x⟩² + ⟨y⟩²)` of the mean-value trajectory, computed from
/// the closed-form means (the ground truth).
pub fn trajectory_radius(z: Complex64, t: f64, params: OscillatorParams) -> f64 {
    let m = coherent_means(z, t, params);
    (m.mean_x * m.mean_x + m.mean_y * m.mean_y).sqrt()
}

/// The explicit radius formula as printed in the literature,
/// `√(2/ω̃)·e^{-αt}·r·√(1 + α²cos(ω̃t−θ) + α sin 2(ω̃t−θ))`, evaluated
/// literally (radicand clamped at zero). It disagrees with the means-derived
/// radius away from α = 0; the deviation is reported as data, not asserted.
pub fn trajectory_radius_printed_form(z: Complex64, t: f64, params: OscillatorParams) -> f64 {
    let wt = params.omega_tilde();
    let alpha = params.alpha();
    let r = z.norm();
    let theta = z.arg();
    let phase = wt * t - theta;
    let radicand = 1.0 + alpha * alpha * phase.cos() + alpha * (2.0 * phase).sin();
    (2.0 / wt).sqrt() * (-alpha * t).exp() * r * radicand.max(0.0).sqrt()
}

/// Critical time `t* = (1/2α) ln(ω/ω̃)` at which the coherent uncertainty
/// product reaches the Heisenberg bound ½; `None` in the undamped case.
pub fn critical_time(params: OscillatorParams) -> Option<f64> {
    if params.alpha() == 0.0 {
        return None;
    }
    Some((params.omega() / params.omega_tilde()).ln() / (2.0 * params.alpha()))
}

/// Squeezed-state position variance
/// `Δx² = (1/2ω̃) e^{-2αt}[(cosh ξ + sinh ξ)² − 4 cosh ξ sinh ξ cos²ω̃t]`.
pub fn squeezed_variance_x(xi: f64, t: f64, params: OscillatorParams) -> f64 {
    let wt = params.omega_tilde();
    let (c, s) = (xi.cosh(), xi.sinh());
    let cos = (wt * t).cos();
    (1.0 / (2.0 * wt)) * (-2.0 * params.alpha() * t).exp() * ((c + s) * (c + s) - 4.0 * c * s * cos * cos)
}

/// Closed-form squeezed-state means `(⟨x̂⟩, ⟨ŷ⟩)` at time `t`.
pub fn squeezed_mean_xy(spec: &CoherentSpec, t: f64, params: OscillatorParams) -> (f64, f64) {
    let wt = params.omega_tilde();
    let (ch, sh) = (spec.xi.cosh(), spec.xi.sinh());
    let damp = (-params.alpha() * t).exp();
    let ep = Complex64::new(0.0, wt * t).exp();
    let em = ep.conj();
    let z = spec.z;
    let mean_x =
        damp / (2.0 * wt).sqrt() * ((em * z + ep * z.conj()) * ch - (ep * z + em * z.conj()) * sh).re;
    let mean_y = (Complex64::new(0.0, (wt / 2.0).sqrt() * damp)
        * ((ep * z.conj() - em * z) * ch - (ep * z - em * z.conj()) * sh))
        .re
        - params.alpha() * mean_x;
    (mean_x, mean_y)
}

/// Means and spreads of `x̂(t) = e^{-αt}q̂`, `ŷ(t) = e^{-αt}p̂` evaluated on a
/// Fock-basis state of the first-order model (the Ŝ conjugation folds into
/// the operators as `p̂ ↦ p̂ − αq̂`, so the state stays in the plain basis).
pub fn fock_moments(v: &FockVector, t: f64) -> TrajectorySample {
    let params = v.basis_params();
    let dim = v.dim();
    let (a, adag) = ladder_pair(dim);
    let wt = params.omega_tilde();
    let q = (&a + &adag) * Complex64::new(1.0 / (2.0 * wt).sqrt(), 0.0);
    let p = (&adag - &a) * Complex64::new(0.0, (wt / 2.0).sqrt());
    let ps = &p - &q * Complex64::new(params.alpha(), 0.0);

    let ev = |m: &DMatrix<Complex64>| -> f64 { v.coefficients().dotc(&(m * v.coefficients())).re };
    let damp = (-params.alpha() * t).exp();
    let mean_q = ev(&q);
    let mean_ps = ev(&ps);
    let var_q = ev(&(&q * &q)) - mean_q * mean_q;
    let var_ps = ev(&(&ps * &ps)) - mean_ps * mean_ps;
    let var_x = damp * damp * var_q;
    let var_y = damp * damp * var_ps;
    TrajectorySample {
        t,
        mean_x: damp * mean_q,
        mean_y: damp * mean_ps,
        var_x,
        var_y,
        uncertainty_product: (var_x * var_y).sqrt(),
    }
}

/// Cached eigendecomposition of the truncated first-order Hamiltonian,
/// driving `e^{-iĤt}` exactly (the only error is the truncation itself).
/// Build once per `(dim, params)` and reuse; the struct is immutable and
/// safe to share across threads.
pub struct Propagator {
    params: OscillatorParams,
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<Complex64>,
}

impl Propagator {
    pub fn new(dim: usize, params: OscillatorParams) -> Self {
        let h = hamiltonian_first_order(dim, params);
        let (eigenvalues, eigenvectors) = eigendecompose_hermitian(&h.entries);
        Self {
            params,
            eigenvalues,
            eigenvectors,
        }
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn params(&self) -> OscillatorParams {
        self.params
    }

    /// `e^{-iĤt}|v⟩`: unitary up to rounding, so the norm is preserved.
    pub fn evolve(&self, state: &FockVector, t: f64) -> Result<FockVector> {
        if state.basis_params() != self.params || state.dim() != self.dim() {
            return Err(Error::BasisMismatch);
        }
        let mut modal = self.eigenvectors.adjoint() * state.coefficients();
        for (c, lam) in modal.iter_mut().zip(self.eigenvalues.iter()) {
            *c *= Complex64::new(0.0, -lam * t).exp();
        }
        Ok(FockVector::from_coefficients(
            self.params,
            &self.eigenvectors * modal,
        ))
    }
}

/// BCK evolution `U(t) = D̂(t) e^{-iĤt}` applied to a position-space state
/// given at `t = 0`: the state is projected on the Fock basis, rotated by
/// the propagator, synthesized back on the grid, and dilated.
pub fn evolve_bck(
    psi0: &WaveFunction,
    t: f64,
    propagator: &Propagator,
    basis: &GridBasis,
) -> Result<WaveFunction> {
    if basis.dim() != propagator.dim() || basis.params() != propagator.params() {
        return Err(Error::BasisMismatch);
    }
    let coeffs = basis.project(psi0)?;
    let rotated = propagator.evolve(&coeffs, t)?;
    let evolved = basis.synthesize(&rotated, t)?;
    crate::operators::apply_dilation(
        &evolved,
        propagator.params(),
        t,
        crate::operators::Direction::Forward,
    )
}
