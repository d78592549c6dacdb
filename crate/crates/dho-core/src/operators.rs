//! Operators of both models, in two representations: truncated matrices in
//! the ω̃-oscillator number basis, and differential actions on grid samples.
//!
//! The matrix side is exact ladder algebra; the grid side uses 8th-order
//! finite differences and exists to cross-check the matrices. Truncation
//! corrupts the last rows of operator products, so matrix identities are
//! asserted on a leading block only (the guard band is recorded in the
//! reports).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};
// backs the no_std build; whenever some dependency links std (tests,
// benches), the inherent float methods win and this import goes quiet
#[allow(unused_imports)]
use num_traits::Float;

use crate::states::FockVector;
use crate::{fd, CheckReport, Complex64, Error, OscillatorParams, Result, WaveFunction};

/// Truncated operator matrix in the ω̃-oscillator number basis.
#[derive(Debug, Clone, PartialEq)]
pub struct FockMatrix {
    pub label: String,
    pub basis_params: OscillatorParams,
    pub entries: DMatrix<Complex64>,
}

impl FockMatrix {
    fn new(label: impl Into<String>, params: OscillatorParams, entries: DMatrix<Complex64>) -> Self {
        Self {
            label: label.into(),
            basis_params: params,
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// `max |X − X†|` over all entries.
    pub fn hermiticity_defect(&self) -> f64 {
        let adj = self.entries.adjoint();
        (&self.entries - adj)
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// `⟨v|X|v⟩`.
    pub fn expectation(&self, v: &FockVector) -> Result<Complex64> {
        if v.basis_params() != self.basis_params || v.dim() != self.dim() {
            return Err(Error::BasisMismatch);
        }
        let w = &self.entries * v.coefficients();
        Ok(v.coefficients().dotc(&w))
    }

    /// `X|v⟩`.
    pub fn apply(&self, v: &FockVector) -> Result<FockVector> {
        if v.basis_params() != self.basis_params || v.dim() != self.dim() {
            return Err(Error::BasisMismatch);
        }
        Ok(FockVector::from_coefficients(
            self.basis_params,
            &self.entries * v.coefficients(),
        ))
    }

    /// Eigenvalues of the (Hermitian) matrix, ascending.
    pub fn eigenvalues_ascending(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self
            .entries
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(|a, b| a.partial_cmp(b).expect("Hermitian eigenvalues are finite"));
        ev
    }
}

/// Hermitian eigendecomposition `(λ, V)` with `X = V diag(λ) V†` (unsorted).
pub(crate) fn eigendecompose_hermitian(
    m: &DMatrix<Complex64>,
) -> (DVector<f64>, DMatrix<Complex64>) {
    let se = m.clone().symmetric_eigen();
    (se.eigenvalues, se.eigenvectors)
}

/// `exp(G)·v` for anti-Hermitian `G`, through the eigendecomposition of
/// the Hermitian matrix `iG`.
pub(crate) fn apply_antihermitian_exp(
    g: &DMatrix<Complex64>,
    v: &DVector<Complex64>,
) -> DVector<Complex64> {
    let herm = g.map(|c| c * Complex64::new(0.0, 1.0));
    let (vals, vecs) = eigendecompose_hermitian(&herm);
    // exp(G) = V exp(-i diag) V^dagger
    let mut coeffs = vecs.adjoint() * v;
    for (c, lam) in coeffs.iter_mut().zip(vals.iter()) {
        *c *= Complex64::new(0.0, -lam).exp();
    }
    vecs * coeffs
}

/// Lowering and raising matrices `(â, â†)` of dimension `dim`.
pub(crate) fn ladder_pair(dim: usize) -> (DMatrix<Complex64>, DMatrix<Complex64>) {
    let mut lower = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        lower[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    let raise = lower.adjoint();
    (lower, raise)
}

/// `q̂ = (â + â†)/√(2ω̃)`, exactly tridiagonal.
pub fn position_matrix(dim: usize, params: OscillatorParams) -> FockMatrix {
    assert!(dim >= 2, "need at least a 2-level truncation");
    let (a, adag) = ladder_pair(dim);
    let scale = Complex64::new(1.0 / (2.0 * params.omega_tilde()).sqrt(), 0.0);
    FockMatrix::new("position", params, (a + adag) * scale)
}

/// `p̂ = i√(ω̃/2)(â† − â)`, exactly tridiagonal.
pub fn momentum_matrix(dim: usize, params: OscillatorParams) -> FockMatrix {
    assert!(dim >= 2, "need at least a 2-level truncation");
    let (a, adag) = ladder_pair(dim);
    let scale = Complex64::new(0.0, (params.omega_tilde() / 2.0).sqrt());
    FockMatrix::new("momentum", params, (adag - a) * scale)
}

/// `Â = q̂p̂ + p̂q̂ = i(â†² − â²)`: the exact ladder identity, coupling only
/// `n → n±2`. Weyl ordering is realized through this identity, not through
/// a symmetrized numerical product.
pub fn symmetrized_product(dim: usize, params: OscillatorParams) -> FockMatrix {
    assert!(dim >= 4, "need at least a 4-level truncation");
    let mut m = DMatrix::zeros(dim, dim);
    for n in 0..dim - 2 {
        let s = (((n + 1) * (n + 2)) as f64).sqrt();
        m[(n + 2, n)] = Complex64::new(0.0, s);
        m[(n, n + 2)] = Complex64::new(0.0, -s);
    }
    FockMatrix::new("qp+pq", params, m)
}

fn squared_blocks(dim: usize, params: OscillatorParams) -> (DMatrix<Complex64>, DMatrix<Complex64>) {
    let q = position_matrix(dim, params).entries;
    let p = momentum_matrix(dim, params).entries;
    (&p * &p, &q * &q)
}

/// First-order Hamiltonian `Ĥ = ½[p̂² + α(q̂p̂+p̂q̂) + ω²q̂²]`, assembled from
/// ladder matrices. Its low-lying spectrum approximates `Eₙ = ω̃(n+½)`.
pub fn hamiltonian_first_order(dim: usize, params: OscillatorParams) -> FockMatrix {
    assert!(dim >= 4, "need at least a 4-level truncation");
    let (p2, q2) = squared_blocks(dim, params);
    let a = symmetrized_product(dim, params).entries;
    let w2 = params.omega() * params.omega();
    let m = (p2 + a * Complex64::new(params.alpha(), 0.0) + q2 * Complex64::new(w2, 0.0))
        * Complex64::new(0.5, 0.0);
    FockMatrix::new("H", params, m)
}

/// BCK Hamiltonian `Ĥ_BCK(t) = ½[e^{-2αt}p̂² + ω²e^{2αt}q̂²]`.
pub fn hamiltonian_bck(t: f64, dim: usize, params: OscillatorParams) -> FockMatrix {
    assert!(dim >= 4, "need at least a 4-level truncation");
    let (p2, q2) = squared_blocks(dim, params);
    let decay = (-2.0 * params.alpha() * t).exp();
    let w2 = params.omega() * params.omega();
    let m = (p2 * Complex64::new(decay, 0.0) + q2 * Complex64::new(w2 / decay, 0.0))
        * Complex64::new(0.5, 0.0);
    FockMatrix::new(format!("H_BCK(t={t})"), params, m)
}

/// The four energy observables at time `t`.
pub struct EnergyObservables {
    /// Lagrangian energy of the first-order model, `Ê_L = Ĥ` (conserved).
    pub lagrangian: FockMatrix,
    /// Conserved BCK energy `Ê = Ĥ_BCK(t) + (α/2)(q̂p̂+p̂q̂)`, with
    /// `Êψₙ^{BCK} = Eₙψₙ^{BCK}`.
    pub bck_conserved: FockMatrix,
    /// Mechanical energy of the first-order model,
    /// `Ê_M = e^{-2αt}Ĥ − e^{-2αt}(α/2)(q̂p̂+p̂q̂) = ½(p̂²+ω²q̂²)e^{-2αt}`.
    pub first_order_mechanical: FockMatrix,
    /// Mechanical energy of the BCK model, `Ê_mech = e^{-2αt}Ĥ_BCK(t)`.
    pub bck_mechanical: FockMatrix,
}

/// Builds all four energy observables from shared ladder blocks.
pub fn energy_observables(t: f64, dim: usize, params: OscillatorParams) -> EnergyObservables {
    assert!(dim >= 4, "need at least a 4-level truncation");
    let h = hamiltonian_first_order(dim, params);
    let h_bck = hamiltonian_bck(t, dim, params);
    let a = symmetrized_product(dim, params).entries;
    let decay = Complex64::new((-2.0 * params.alpha() * t).exp(), 0.0);
    let half_alpha = Complex64::new(0.5 * params.alpha(), 0.0);

    let conserved = &h_bck.entries + &a * half_alpha;
    let mech_first = (&h.entries - &a * half_alpha) * decay;
    let mech_bck = &h_bck.entries * decay;

    EnergyObservables {
        lagrangian: FockMatrix::new("E_L", params, h.entries),
        bck_conserved: FockMatrix::new(format!("E(t={t})"), params, conserved),
        first_order_mechanical: FockMatrix::new(format!("E_M(t={t})"), params, mech_first),
        bck_mechanical: FockMatrix::new(format!("E_mech(t={t})"), params, mech_bck),
    }
}

/// Verifies the Heisenberg-picture commutator `[x̌(t), y̌(t)] = i·e^{-2αt}`
/// on the truncation, excluding a 4-row guard band.
///
/// `x̌` and `y̌` are assembled from their closed forms in `q̂, p̂`:
/// `x̌ = e^{-αt}[(cos ω̃t + (α/ω̃) sin ω̃t)q̂ + (sin ω̃t/ω̃)p̂]`,
/// `y̌ = e^{-αt}[(cos ω̃t − (α/ω̃) sin ω̃t)p̂ − (ω²/ω̃) sin ω̃t·q̂]`.
pub fn heisenberg_commutator_check(t: f64, dim: usize, params: OscillatorParams) -> CheckReport {
    assert!(dim >= 8, "need at least an 8-level truncation");
    let wt = params.omega_tilde();
    let (c, s) = ((wt * t).cos(), (wt * t).sin());
    let damp = (-params.alpha() * t).exp();
    let q = position_matrix(dim, params).entries;
    let p = momentum_matrix(dim, params).entries;

    let x = (&q * Complex64::new(c + params.alpha() / wt * s, 0.0)
        + &p * Complex64::new(s / wt, 0.0))
        * Complex64::new(damp, 0.0);
    let y = (&p * Complex64::new(c - params.alpha() / wt * s, 0.0)
        - &q * Complex64::new(params.omega() * params.omega() / wt * s, 0.0))
        * Complex64::new(damp, 0.0);

    let comm = &x * &y - &y * &x;
    let target = Complex64::new(0.0, damp * damp);
    let guard = 4;
    let block = dim - guard;
    let mut deviation = 0.0f64;
    for i in 0..block {
        for j in 0..block {
            let expect = if i == j {
                target
            } else {
                Complex64::new(0.0, 0.0)
            };
            deviation = deviation.max((comm[(i, j)] - expect).norm());
        }
    }
    CheckReport::against(format!("commutator/t={t:.2}"), deviation, 0.0, 1e-10)
        .with_meta("guard_band", format!("{guard}"))
        .with_meta("expected_im", format!("{:.16e}", damp * damp))
}

/// Direction of a unitary map and its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// `Ŝ = e^{-iαq̂²/2}` as a pure multiplication phase on the samples
/// (forward), or its inverse. Norm is preserved exactly.
pub fn apply_s_transform(
    psi: &WaveFunction,
    params: OscillatorParams,
    direction: Direction,
) -> WaveFunction {
    let sign = match direction {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };
    let half_alpha = 0.5 * params.alpha();
    let samples = psi
        .grid
        .points()
        .zip(&psi.samples)
        .map(|(q, f)| f * Complex64::new(0.0, sign * half_alpha * q * q).exp())
        .collect();
    WaveFunction::new(psi.grid, samples, psi.time_label)
}

/// Relative amplitude at the grid edge above which a dilation refuses to
/// run: rescaled sample points would leave the grid while carrying weight.
const DILATION_EDGE_GATE: f64 = 1e-8;

/// Dilation `D̂(t)ψ(q) = e^{αt/2}ψ(qe^{αt})` (forward) or its inverse
/// `e^{-αt/2}ψ(qe^{-αt})`, evaluated by band-limited (sinc) interpolation
/// on the shared uniform grid.
///
/// When the rescaled sample points `q·e^{±αt}` leave the grid, the missing
/// samples are treated as zero; this is only admissible if the boundary
/// amplitude is negligible, so the call fails with
/// [`Error::GridTooNarrow`] when the source carries more than `1e-8` of
/// its peak modulus near the edge — the caller must widen the grid.
pub fn apply_dilation(
    psi: &WaveFunction,
    params: OscillatorParams,
    t: f64,
    direction: Direction,
) -> Result<WaveFunction> {
    let exponent = match direction {
        Direction::Forward => params.alpha() * t,
        Direction::Inverse => -params.alpha() * t,
    };
    if exponent == 0.0 {
        return Ok(psi.clone());
    }
    let scale = exponent.exp();
    if scale > 1.0 {
        let peak = psi.max_abs();
        let edge = psi.edge_amplitude(4);
        if peak > 0.0 && edge > DILATION_EDGE_GATE * peak {
            return Err(Error::GridTooNarrow {
                edge_amplitude: edge,
            });
        }
    }
    let prefactor = scale.sqrt();
    let samples = psi
        .grid
        .points()
        .map(|q| psi.sample_at(q * scale) * prefactor)
        .collect();
    Ok(WaveFunction::new(psi.grid, samples, psi.time_label))
}

/// Grid action of `Ĥ = -½∂² − iα(q∂ + ½) + ½ω²q²` by finite differences
/// (interior points only).
pub fn apply_first_order_hamiltonian_grid(
    psi: &WaveFunction,
    params: OscillatorParams,
) -> WaveFunction {
    let h = psi.grid.spacing();
    let d1 = fd::first_derivative(&psi.samples, h);
    let d2 = fd::second_derivative(&psi.samples, h);
    let w2 = params.omega() * params.omega();
    let alpha = params.alpha();
    let samples = psi
        .grid
        .points()
        .enumerate()
        .map(|(i, q)| {
            let kinetic = d2[i] * (-0.5);
            let mixed = (d1[i] * q + psi.samples[i] * 0.5) * Complex64::new(0.0, -alpha);
            let potential = psi.samples[i] * (0.5 * w2 * q * q);
            kinetic + mixed + potential
        })
        .collect();
    WaveFunction::new(psi.grid, samples, psi.time_label)
}

/// Grid action of `Ĥ_BCK(t) = ½[-e^{-2αt}∂² + ω²e^{2αt}q²]` by finite
/// differences (interior points only).
pub fn apply_bck_hamiltonian_grid(
    psi: &WaveFunction,
    params: OscillatorParams,
    t: f64,
) -> WaveFunction {
    let h = psi.grid.spacing();
    let d2 = fd::second_derivative(&psi.samples, h);
    let decay = (-2.0 * params.alpha() * t).exp();
    let w2 = params.omega() * params.omega();
    let samples = psi
        .grid
        .points()
        .enumerate()
        .map(|(i, q)| d2[i] * (-0.5 * decay) + psi.samples[i] * (0.5 * w2 / decay * q * q))
        .collect();
    WaveFunction::new(psi.grid, samples, psi.time_label)
}

/// Grid action of `Â = q̂p̂+p̂q̂ = -i(2q∂ + 1)` by finite differences
/// (interior points only).
pub fn apply_symmetrized_product_grid(psi: &WaveFunction) -> WaveFunction {
    let h = psi.grid.spacing();
    let d1 = fd::first_derivative(&psi.samples, h);
    let samples = psi
        .grid
        .points()
        .enumerate()
        .map(|(i, q)| (d1[i] * (2.0 * q) + psi.samples[i]) * Complex64::new(0.0, -1.0))
        .collect();
    WaveFunction::new(psi.grid, samples, psi.time_label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SpatialGrid;

    const REF_TOL: f64 = 1e-12;

    #[test]
    fn position_momentum_elements() {
        let p = OscillatorParams::reference();
        let q = position_matrix(2, p);
        assert!((q.entries[(0, 1)].re - 0.79056941504209483).abs() < 1e-15);
        assert_eq!(q.entries[(0, 1)].im, 0.0);
        let q8 = position_matrix(8, p);
        let p8 = momentum_matrix(8, p);
        assert!(q8.hermiticity_defect() < REF_TOL);
        assert!(p8.hermiticity_defect() < REF_TOL);
        // <0|q^2|0> = 1/(2 wt)
        let q2 = &q8.entries * &q8.entries;
        assert!((q2[(0, 0)].re - 0.625).abs() < 1e-14);
    }

    #[test]
    fn canonical_commutator_on_leading_block() {
        let p = OscillatorParams::reference();
        let m = 12;
        let q = position_matrix(m, p).entries;
        let pm = momentum_matrix(m, p).entries;
        let comm = &q * &pm - &pm * &q;
        for i in 0..m - 1 {
            for j in 0..m - 1 {
                let expect = if i == j {
                    Complex64::new(0.0, 1.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                assert!(
                    (comm[(i, j)] - expect).norm() < REF_TOL,
                    "[q,p] wrong at ({i},{j}): {:?}",
                    comm[(i, j)]
                );
            }
        }
    }

    #[test]
    fn symmetrized_product_is_a_pure_two_step_ladder() {
        let p = OscillatorParams::reference();
        let a = symmetrized_product(10, p);
        assert!(a.hermiticity_defect() < REF_TOL);
        for i in 0..10 {
            for j in 0..10 {
                let entry = a.entries[(i, j)];
                if i + 2 == j {
                    let s = (((j - 1) * j) as f64).sqrt();
                    assert!((entry - Complex64::new(0.0, -s)).norm() < REF_TOL);
                } else if j + 2 == i {
                    let s = (((i - 1) * i) as f64).sqrt();
                    assert!((entry - Complex64::new(0.0, s)).norm() < REF_TOL);
                } else {
                    assert_eq!(entry, Complex64::new(0.0, 0.0), "spurious entry at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn undamped_hamiltonian_is_diagonal() {
        let p = OscillatorParams::new(1.0, 0.0).unwrap();
        let h = hamiltonian_first_order(16, p);
        for i in 0..15 {
            for j in 0..15 {
                if i == j {
                    assert!((h.entries[(i, i)].re - (i as f64 + 0.5)).abs() < REF_TOL);
                } else {
                    assert!(h.entries[(i, j)].norm() < REF_TOL);
                }
            }
        }
        let hb = hamiltonian_bck(0.0, 16, p);
        let diff = (&h.entries - &hb.entries)
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        assert!(diff < REF_TOL);
    }

    #[test]
    fn truncated_spectrum_reproduces_reduced_frequency_levels() {
        let p = OscillatorParams::reference();
        let h = hamiltonian_first_order(128, p);
        assert!(h.hermiticity_defect() < REF_TOL);
        let ev = h.eigenvalues_ascending();
        for (n, &lam) in ev.iter().take(20).enumerate() {
            let exact = p.level_energy(n);
            assert!(
                (lam - exact).abs() < 1e-8,
                "eigenvalue {n}: {lam} vs {exact}"
            );
        }
    }

    #[test]
    fn energy_observables_collapse_when_undamped() {
        let p = OscillatorParams::new(1.0, 0.0).unwrap();
        let e = energy_observables(0.0, 12, p);
        let h = hamiltonian_first_order(12, p).entries;
        for m in [
            &e.lagrangian.entries,
            &e.bck_conserved.entries,
            &e.first_order_mechanical.entries,
            &e.bck_mechanical.entries,
        ] {
            let diff = (m - &h).iter().map(|c| c.norm()).fold(0.0, f64::max);
            assert!(diff < REF_TOL);
        }
    }

    #[test]
    fn energy_observables_are_hermitian_at_all_times() {
        let p = OscillatorParams::reference();
        for &t in &[0.0, 0.3, 0.8, 1.5] {
            let e = energy_observables(t, 24, p);
            assert!(e.lagrangian.hermiticity_defect() < REF_TOL);
            assert!(e.bck_conserved.hermiticity_defect() < REF_TOL);
            assert!(e.first_order_mechanical.hermiticity_defect() < REF_TOL);
            assert!(e.bck_mechanical.hermiticity_defect() < REF_TOL);
            assert!(hamiltonian_bck(t, 24, p).hermiticity_defect() < REF_TOL);
        }
    }

    #[test]
    fn commutator_check_matches_exponential_decay() {
        let p = OscillatorParams::reference();
        let r0 = heisenberg_commutator_check(0.0, 16, p);
        assert!(r0.passed, "t=0 deviation {}", r0.measured);
        assert!(r0.measured < 1e-12);
        let r = heisenberg_commutator_check(0.5, 16, p);
        assert!(r.passed, "t=0.5 deviation {}", r.measured);
        let undamped = OscillatorParams::new(1.0, 0.0).unwrap();
        let ru = heisenberg_commutator_check(2.0, 16, undamped);
        assert!(ru.passed && ru.measured < 1e-12);
    }

    #[test]
    fn s_transform_roundtrip_and_norm() {
        let p = OscillatorParams::reference();
        let grid = SpatialGrid::auto(p, 3, 0.0);
        let psi = crate::states::stationary_state(3, p, &grid);
        let fwd = apply_s_transform(&psi, p, Direction::Forward);
        assert!((fwd.norm_squared() - psi.norm_squared()).abs() < 1e-14);
        let back = apply_s_transform(&fwd, p, Direction::Inverse);
        assert!(back.max_abs_diff(&psi).unwrap() < 1e-15);
        // pointwise moduli untouched
        for (a, b) in fwd.samples.iter().zip(&psi.samples) {
            assert!((a.norm() - b.norm()).abs() < 1e-15);
        }
    }

    #[test]
    fn dilation_identity_and_norm_preservation() {
        let p = OscillatorParams::reference();
        let grid = SpatialGrid::auto(p, 2, 0.8);
        let psi = crate::states::first_order_eigenstate(2, p, &grid);
        let same = apply_dilation(&psi, p, 0.0, Direction::Forward).unwrap();
        assert_eq!(same, psi);
        let d = apply_dilation(&psi, p, 0.8, Direction::Forward).unwrap();
        assert!((d.norm_squared() - psi.norm_squared()).abs() < 1e-9);
        let back = apply_dilation(&d, p, 0.8, Direction::Inverse).unwrap();
        assert!(back.max_abs_diff(&psi).unwrap() < 1e-9);
    }

    #[test]
    fn dilation_rejects_states_with_boundary_weight() {
        let p = OscillatorParams::reference();
        let grid = SpatialGrid::new(6.0, 301).unwrap();
        // constant-modulus function: no decay at the edge
        let flat = WaveFunction::from_fn(grid, 0.0, |q| Complex64::new((2.1 * q).cos(), 0.0));
        assert!(matches!(
            apply_dilation(&flat, p, 0.5, Direction::Forward),
            Err(Error::GridTooNarrow { .. })
        ));
        // the shrinking direction stays on the grid
        assert!(apply_dilation(&flat, p, 0.5, Direction::Inverse).is_ok());
    }

    #[test]
    fn grid_symmetrized_product_matches_ladder_action_on_ground_state() {
        let p = OscillatorParams::reference();
        let grid = SpatialGrid::auto_refined(p, 4, 0.0, 4.0);
        let psi0 = crate::states::stationary_state(0, p, &grid);
        let lhs = apply_symmetrized_product_grid(&psi0);
        // A|0> = i sqrt(2) |2> in the number basis
        let psi2 = crate::states::stationary_state(2, p, &grid);
        let margin = fd::stencil_radius();
        let mut worst = 0.0f64;
        for i in margin..grid.n_points() - margin {
            let expect = psi2.samples[i] * Complex64::new(0.0, 2.0f64.sqrt());
            worst = worst.max((lhs.samples[i] - expect).norm());
        }
        assert!(worst < 1e-8, "grid/ladder mismatch {worst}");
    }
}
