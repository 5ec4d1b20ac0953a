//! Gaussian quadrature rules built by the Golub–Welsch method: eigenvalues of
//! the symmetric tridiagonal Jacobi matrix give the nodes, the squared first
//! eigenvector components (times the zeroth moment) give the weights.

use statrs::function::gamma::gamma;
use std::f64::consts::PI;

use crate::error::{Error, Result};

const MAX_ORDER: usize = 200;

/// Which weight function a rule integrates against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadratureKind {
    /// `s^alpha e^{-s}` on `(0, ∞)`, `alpha > -1`.
    GeneralizedLaguerre { alpha: f64 },
    /// `e^{-x^2}` on `(-∞, ∞)`.
    Hermite,
}

/// Nodes and weights of a Gaussian rule; exact for polynomials up to degree
/// `2 * order - 1` against the rule's weight function.
///
/// Weights are positive; past order ≈ 180 the largest Laguerre node exceeds
/// 744 and the outermost weights (~`e^{-node}`) underflow to zero, which is
/// harmless for integration.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    kind: QuadratureKind,
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kind(&self) -> QuadratureKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// `Σ w_i f(x_i)`, summed in node order.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Generalized Gauss–Laguerre rule for `∫_0^∞ s^alpha e^{-s} f(s) ds`.
pub fn gauss_laguerre(alpha: f64, order: usize) -> Result<QuadratureRule> {
    if !alpha.is_finite() || alpha <= -1.0 {
        return Err(Error::Domain(format!(
            "generalized Laguerre weight needs alpha > -1, got {alpha}"
        )));
    }
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(Error::Domain(format!(
            "quadrature order must be in 1..={MAX_ORDER}, got {order}"
        )));
    }
    // Jacobi matrix of the generalized Laguerre recurrence
    let mut diag: Vec<f64> = (0..order).map(|i| 2.0 * i as f64 + alpha + 1.0).collect();
    let mut sub: Vec<f64> = (1..order)
        .map(|i| (i as f64 * (i as f64 + alpha)).sqrt())
        .collect();
    let first_moment = gamma(alpha + 1.0);
    let (nodes, weights) = golub_welsch(&mut diag, &mut sub, first_moment)?;
    Ok(QuadratureRule {
        nodes,
        weights,
        kind: QuadratureKind::GeneralizedLaguerre { alpha },
    })
}

/// Gauss–Hermite rule for `∫_-∞^∞ e^{-x^2} f(x) dx`.
pub fn gauss_hermite(order: usize) -> Result<QuadratureRule> {
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(Error::Domain(format!(
            "quadrature order must be in 1..={MAX_ORDER}, got {order}"
        )));
    }
    let mut diag = vec![0.0; order];
    let mut sub: Vec<f64> = (1..order).map(|i| (i as f64 / 2.0).sqrt()).collect();
    let (nodes, weights) = golub_welsch(&mut diag, &mut sub, PI.sqrt())?;
    Ok(QuadratureRule {
        nodes,
        weights,
        kind: QuadratureKind::Hermite,
    })
}

fn golub_welsch(
    diag: &mut [f64],
    sub: &mut [f64],
    first_moment: f64,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let first_row = tridiag_eigen_first_row(diag, sub)?;
    let n = diag.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| diag[a].total_cmp(&diag[b]));
    let nodes: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let weights: Vec<f64> = order
        .iter()
        .map(|&i| first_moment * first_row[i] * first_row[i])
        .collect();
    Ok((nodes, weights))
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix.
///
/// `diag` is replaced by the (unsorted) eigenvalues; the return value holds
/// the first component of each eigenvector, which is all the weight formula
/// needs, so full eigenvector accumulation is skipped.
fn tridiag_eigen_first_row(diag: &mut [f64], sub: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    let mut z = vec![0.0; n];
    if n == 0 {
        return Ok(z);
    }
    z[0] = 1.0;
    if n == 1 {
        return Ok(z);
    }
    // off[i] couples rows i and i+1; off[n-1] is scratch
    let mut off = vec![0.0; n];
    off[..n - 1].copy_from_slice(sub);

    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 50 {
                return Err(Error::ConvergenceFailure(
                    "tridiagonal QL did not converge within 50 sweeps".into(),
                ));
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0f64;
            let mut underflowed = false;
            for i in (l..m).rev() {
                let mut f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    // rotation annihilated early; split and restart this block
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    underflowed = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflowed {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(z)
}
