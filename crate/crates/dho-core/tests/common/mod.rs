//! Shared test oracles, independent of the library's quadrature path.

use dho_core::hermite::hermite_functions;

/// Gauss–Hermite rule of the given order, returned as nodes `uᵢ` and total
/// weights `Wᵢ` such that `∫ g(u) du ≈ Σᵢ Wᵢ g(uᵢ)` is exact whenever
/// `g(u) = P(u)·e^{-u²}` with `deg P ≤ 2·order − 1`.
///
/// Nodes are the roots of the order-th Hermite function found by Newton
/// iteration on the normalized recurrence; the weights are the Christoffel
/// numbers `Wᵢ = 1/Σ_{k<order} hₖ(uᵢ)²`, which keeps everything in the
/// bounded function space (no factorials, no overflow).
pub fn gauss_hermite(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 2);
    let mut nodes = vec![0.0f64; order];
    let half = order / 2;
    // Largest-root initial guesses, then walk inward (classic scheme).
    let mut z = 0.0f64;
    for i in 0..half {
        z = match i {
            0 => {
                let anu = 2.0 * order as f64 + 1.0;
                anu.sqrt() - 1.85575 * anu.powf(-1.0 / 6.0)
            }
            1 => z - 1.14 * (order as f64).powf(0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[0],
            3 => 1.91 * z - 0.91 * nodes[1],
            _ => 2.0 * z - nodes[i - 2],
        };
        // Newton on h_order; h'_n(u) = sqrt(2n) h_{n-1}(u) - u h_n(u)
        for _ in 0..100 {
            let h = hermite_functions(order, z);
            let f = h[order];
            let df = (2.0 * order as f64).sqrt() * h[order - 1] - z * f;
            let step = f / df;
            z -= step;
            if step.abs() < 1e-15 * (1.0 + z.abs()) {
                break;
            }
        }
        nodes[i] = z;
    }
    // mirror to the negative axis; odd order keeps a node at zero
    for i in 0..half {
        nodes[order - 1 - i] = -nodes[i];
    }
    if order % 2 == 1 {
        nodes[half] = 0.0;
    }
    nodes.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let weights = nodes
        .iter()
        .map(|&u| {
            let h = hermite_functions(order - 1, u);
            1.0 / h.iter().map(|v| v * v).sum::<f64>()
        })
        .collect();
    (nodes, weights)
}

#[allow(dead_code)]
/// Self-check used by the quadrature tests: `∫ e^{-u²} du = √π`.
pub fn gauss_hermite_self_check(order: usize) -> f64 {
    let (nodes, weights) = gauss_hermite(order);
    nodes
        .iter()
        .zip(&weights)
        .map(|(&u, &w)| w * (-u * u).exp())
        .sum()
}
