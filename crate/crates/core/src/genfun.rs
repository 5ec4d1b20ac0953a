//! Stride-offset Hermite generating functions
//! `G(j,k) = Σ_n z^{jn+k} H_{jn+k}(x) / (jn+k)!`: phase-averaged closed form,
//! scaled-series oracle, and a shifted-Gaussian consistency route.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exp_sums::MultisectIndex;
use crate::hermite::ScaledTermIter;
use crate::numerics::{sum_series, RootsTable, SeriesControl, SeriesSum};

/// Magnitude guard keeping `exp(-z^2 ω^2 + 2xz ω)` inside double range.
const ARG_BOUND: f64 = 10.0;

/// One evaluation point of a generating function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenFunPoint {
    pub idx: MultisectIndex,
    pub z: Complex64,
    pub x: f64,
}

impl GenFunPoint {
    pub fn new(j: u32, k: u32, z: Complex64, x: f64) -> Self {
        Self {
            idx: MultisectIndex::new(j, k),
            z,
            x,
        }
    }

    fn validate(&self) -> Result<()> {
        self.idx.validate()?;
        if !self.z.re.is_finite() || !self.z.im.is_finite() || !self.x.is_finite() {
            return Err(Error::Domain("generating function needs finite z and x".into()));
        }
        if self.z.norm() > ARG_BOUND || self.x.abs() > ARG_BOUND {
            return Err(Error::Domain(format!(
                "|z| and |x| must stay <= {ARG_BOUND} (got |z|={}, |x|={})",
                self.z.norm(),
                self.x.abs()
            )));
        }
        Ok(())
    }
}

/// Finite head `Σ z^m H_m(x)/m!` over `m ≡ k (mod j)`, `0 <= m < k`,
/// subtracted from the phase average so the closed form equals the defining
/// series when `k >= j`.
fn head_sum(point: &GenFunPoint) -> Complex64 {
    let (j, k) = (point.idx.j, point.idx.k);
    let mut acc = Complex64::new(0.0, 0.0);
    if k == 0 {
        return acc;
    }
    for (m, p) in ScaledTermIter::new(point.x, point.z)
        .take(k as usize)
        .enumerate()
    {
        if m as u32 % j == k % j {
            acc += p;
        }
    }
    acc
}

fn finite_or_overflow(v: Complex64, what: &str) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("{what} overflowed")))
    }
}

/// Closed form `(1/j) Σ_l exp(-z^2 ω_l^2) exp(2xz ω_l) / ω_l^k`, with the
/// residue-class head subtracted for `k >= j`.
pub fn g_closed(point: &GenFunPoint) -> Result<Complex64> {
    point.validate()?;
    let (j, k) = (point.idx.j, point.idx.k);
    let table = RootsTable::new(j)?;
    let z2 = point.z * point.z;
    let two_xz = 2.0 * point.x * point.z;
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 1..=j {
        let omega = table.root(l);
        let omega_sq = table.phase(2 * l as i128);
        let inv_phase = table.phase(-(l as i128 * k as i128));
        acc += (-z2 * omega_sq + two_xz * omega).exp() * inv_phase;
    }
    let value = acc / j as f64 - head_sum(point);
    finite_or_overflow(value, "generating function closed form")
}

/// Defining series via the scaled terms `p_m = H_m(x) z^m/m!`, taking only
/// `m = jn + k`; the stall window therefore sees no structural zeros.
pub fn g_series(point: &GenFunPoint, control: &SeriesControl) -> Result<SeriesSum> {
    point.validate()?;
    let (j, k) = (point.idx.j as usize, point.idx.k as usize);
    let terms = ScaledTermIter::new(point.x, point.z).skip(k).step_by(j);
    sum_series(terms, control)
}

/// Residual between [`g_closed`] and the algebraically independent
/// shifted-Gaussian route
/// `exp(x^2) (1/j) Σ_l exp(-(x - z ω_l)^2) / ω_l^k`,
/// which applies the shift identity to the Gaussian instead of expanding the
/// exponent. Only defined on the principal offsets `0 <= k <= j-1`.
pub fn g_rodrigues_check(point: &GenFunPoint) -> Result<f64> {
    point.validate()?;
    let (j, k) = (point.idx.j, point.idx.k);
    if k >= j {
        return Err(Error::Domain(format!(
            "shifted-Gaussian route needs 0 <= k <= j-1, got j={j} k={k}"
        )));
    }
    let table = RootsTable::new(j)?;
    let gauss_inv = Complex64::new(point.x * point.x, 0.0).exp();
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 1..=j {
        let omega = table.root(l);
        let inv_phase = table.phase(-(l as i128 * k as i128));
        let shifted = Complex64::new(point.x, 0.0) - point.z * omega;
        acc += (-shifted * shifted).exp() * inv_phase;
    }
    let other_route = finite_or_overflow(gauss_inv * acc / j as f64, "shifted-Gaussian route")?;
    let expanded = g_closed(point)?;
    Ok((other_route - expanded).norm())
}
