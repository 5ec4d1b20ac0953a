//! Hermite sums with the half-index factorial denominator: the even series
//! `Σ z^{2n} H_{2n}(x)/n!`, the odd series `Σ z^{2n+1} H_{2n+1}(x)/n!`, and
//! their interleaving `Σ z^n H_n(x)/floor(n/2)!`, each with a closed form in
//! `1 + 4z^2` and a series oracle.
//!
//! The closed forms have branch points at `z = ±i/2`, so the defining series
//! converge only for `|z| < 1/2`; the series oracle is gated at `|z| <= 0.4`
//! to keep a margin. Fractional powers take the principal branch.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hermite::HalfIndexTerms;
use crate::numerics::{sum_series, SeriesControl, SeriesSum};

/// Series convergence gate; the radius of convergence is 1/2.
pub const SERIES_RADIUS_GATE: f64 = 0.4;

const SINGULARITY_FLOOR: f64 = 1e-6;

/// Evaluation point for the half-index-factorial sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KPoint {
    pub z: Complex64,
    pub x: f64,
}

impl KPoint {
    pub fn new(z: Complex64, x: f64) -> Self {
        Self { z, x }
    }

    fn validate(&self) -> Result<()> {
        if !self.z.re.is_finite() || !self.z.im.is_finite() || !self.x.is_finite() {
            return Err(Error::Domain("point must have finite z and x".into()));
        }
        Ok(())
    }
}

/// Which of the three sums to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KVariant {
    Even,
    Odd,
    Combined,
}

/// Shared closed-form pieces: `w = 1 + 4z^2`, its principal square root, and
/// the exponential factor `exp(4 z^2 x^2 / w)`.
fn closed_parts(p: &KPoint) -> Result<(Complex64, Complex64, Complex64)> {
    p.validate()?;
    let z2 = p.z * p.z;
    let w = Complex64::new(1.0, 0.0) + 4.0 * z2;
    if w.norm() < SINGULARITY_FLOOR {
        return Err(Error::Singularity(format!(
            "1 + 4z^2 = {w} is within {SINGULARITY_FLOOR} of the branch point"
        )));
    }
    let root = w.sqrt();
    let exp_factor = (4.0 * z2 * p.x * p.x / w).exp();
    if !exp_factor.re.is_finite() || !exp_factor.im.is_finite() {
        return Err(Error::Overflow("squeezed-sum exponential factor overflowed".into()));
    }
    Ok((w, root, exp_factor))
}

/// Even sum `Σ z^{2n} H_{2n}(x)/n! = (1+4z^2)^{-1/2} exp[4z^2x^2/(1+4z^2)]`.
pub fn k2010_closed(p: &KPoint) -> Result<Complex64> {
    let (_, root, exp_factor) = closed_parts(p)?;
    Ok(exp_factor / root)
}

/// Odd sum `Σ z^{2n+1} H_{2n+1}(x)/n! = 2zx (1+4z^2)^{-3/2} exp[...]`.
pub fn k2110_closed(p: &KPoint) -> Result<Complex64> {
    let (w, root, exp_factor) = closed_parts(p)?;
    // w^{3/2} on the principal branch is root * w
    Ok(2.0 * p.z * p.x * exp_factor / (root * w))
}

/// Interleaved sum `Σ z^n H_n(x)/floor(n/2)!
///   = (1 + 2zx + 4z^2)(1+4z^2)^{-3/2} exp[...]`,
/// identically the sum of the even and odd closed forms.
pub fn k_combined_closed(p: &KPoint) -> Result<Complex64> {
    let (w, root, exp_factor) = closed_parts(p)?;
    let numerator = Complex64::new(1.0, 0.0) + 2.0 * p.z * p.x + 4.0 * p.z * p.z;
    Ok(numerator * exp_factor / (root * w))
}

/// Defining series for the chosen variant, gated at `|z| <= 0.4`.
pub fn k_series(variant: KVariant, p: &KPoint, control: &SeriesControl) -> Result<SeriesSum> {
    p.validate()?;
    if p.z.norm() > SERIES_RADIUS_GATE {
        return Err(Error::Domain(format!(
            "series oracle is validated for |z| <= {SERIES_RADIUS_GATE}; got |z| = {} (radius of convergence is 1/2)",
            p.z.norm()
        )));
    }
    let terms = HalfIndexTerms::new(p.x, p.z);
    match variant {
        KVariant::Even => sum_series(terms.evens(), control),
        KVariant::Odd => sum_series(terms.odds(), control),
        KVariant::Combined => sum_series(terms.interleaved(), control),
    }
}
