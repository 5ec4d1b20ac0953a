//! Shared numeric machinery: roots of unity, the multisection filter,
//! adaptive series summation, and Gaussian quadrature rules.
//!
//! Everything here is a pure function of its inputs; values are immutable
//! after construction and safe to share across threads.

mod quadrature;
mod series;

pub use quadrature::{gauss_hermite, gauss_laguerre, QuadratureKind, QuadratureRule};
pub use series::{sum_series, SeriesControl, SeriesSum};

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// The j-th roots of unity `e^{i2πl/j}` for `l = 1..j`, in that order.
///
/// The last entry (`l = j`) is exactly `1 + 0i`, and the table is built so
/// that entry `l` is the bit-exact conjugate of entry `j − l`; conjugate
/// cancellations downstream then hold to the last ulp.
pub fn roots_of_unity(j: u32) -> Result<Vec<Complex64>> {
    if j == 0 {
        return Err(Error::Domain("roots_of_unity requires j >= 1".into()));
    }
    let n = j as usize;
    let mut roots = vec![Complex64::new(0.0, 0.0); n];
    roots[n - 1] = Complex64::new(1.0, 0.0);
    for l in 1..=(n / 2) {
        let w = if 2 * l == n {
            Complex64::new(-1.0, 0.0)
        } else if 4 * l == n {
            Complex64::new(0.0, 1.0)
        } else {
            let theta = 2.0 * PI * l as f64 / j as f64;
            Complex64::new(theta.cos(), theta.sin())
        };
        roots[l - 1] = w;
        if l < n - l {
            roots[n - l - 1] = w.conj();
        }
    }
    Ok(roots)
}

/// Precomputed table of the j-th roots of unity with modular power lookup.
///
/// `phase(e)` returns `e^{i2πe/j}` by reducing the exponent mod `j` and
/// indexing the table, so powers and inverse powers of the roots stay exactly
/// consistent with [`roots_of_unity`] instead of accumulating rounding from
/// repeated multiplication.
#[derive(Debug, Clone)]
pub(crate) struct RootsTable {
    roots: Vec<Complex64>,
}

impl RootsTable {
    pub fn new(j: u32) -> Result<Self> {
        Ok(Self {
            roots: roots_of_unity(j)?,
        })
    }

    /// `e^{i2πe/j}`; negative exponents reduce via `rem_euclid`.
    pub fn phase(&self, e: i128) -> Complex64 {
        let j = self.roots.len() as i128;
        let r = e.rem_euclid(j) as usize;
        // exponent 0 maps to the l = j entry, which is exactly 1
        let idx = if r == 0 { self.roots.len() - 1 } else { r - 1 };
        self.roots[idx]
    }

    /// The root `e^{i2πl/j}` itself (`l` taken mod `j`).
    pub fn root(&self, l: u32) -> Complex64 {
        self.phase(l as i128)
    }
}

/// Residue-class filter weight `(1/j) Σ_{l=1..j} e^{i2πlm/j}`, collapsed to
/// its real value.
///
/// Exactly `1.0` when `j` divides `m`; otherwise the geometric series cancels
/// and the magnitude is at rounding level (≤ 1e-13).
pub fn filter_weight(j: u32, m: u64) -> Result<f64> {
    let table = RootsTable::new(j)?;
    let m_red = m % j as u64;
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 1..=j as u64 {
        acc += table.phase((l * m_red) as i128);
    }
    Ok(acc.re / j as f64)
}

/// Outcome of a closed-form-vs-series sweep over a parameter grid.
///
/// `rel_err` here and everywhere in the crate means `abs_err / (1 + |closed|)`,
/// which stays meaningful when the closed value passes through zero.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub family: String,
    pub grid_size: usize,
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    pub argmax_params: PointParams,
    pub terms_used_max: usize,
}

/// The parameters of one grid point, flat so it serializes the same way in
/// JSON and CSV. For the operator family the `z_re` slot carries the real
/// scale `a`.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct PointParams {
    pub j: u32,
    pub k: u32,
    pub z_re: f64,
    pub z_im: f64,
    pub x: f64,
}
