//! Operator exponentials `exp[(a d/dx)^j]` applied to a closed family of
//! entire test functions, by derivative series and by phase-summed
//! Gauss–Laguerre quadrature.
//!
//! The family is closed on purpose: every member must supply exact n-th
//! derivatives and complex-argument evaluation, neither of which an arbitrary
//! callable can promise. Gaussians with `j >= 3` are refused outright — the
//! derivative series diverges for them — and `j = 2` requires `4a²β < 1`.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hermite::{hermite_eval, HalfIndexTerms, ScaledTermIter};
use crate::numerics::{gauss_laguerre, sum_series, QuadratureRule, SeriesControl, SeriesSum};

const MAX_POLY_DEGREE: usize = 32;

#[derive(Debug, Clone, PartialEq)]
enum FnKind {
    /// Coefficients in ascending powers.
    Polynomial(Vec<f64>),
    /// `exp(lambda * x)`.
    Exponential(f64),
    /// `exp(-beta * x^2)`, `beta > 0`.
    Gaussian(f64),
}

/// An entire test function with exact derivatives of every order.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    kind: FnKind,
}

impl TestFunction {
    pub fn polynomial(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() > MAX_POLY_DEGREE + 1 {
            return Err(Error::Domain(format!(
                "polynomial needs 1..={} coefficients, got {}",
                MAX_POLY_DEGREE + 1,
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("polynomial coefficients must be finite".into()));
        }
        Ok(Self {
            kind: FnKind::Polynomial(coeffs),
        })
    }

    pub fn exponential(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() {
            return Err(Error::Domain(format!("exponential rate must be finite, got {lambda}")));
        }
        Ok(Self {
            kind: FnKind::Exponential(lambda),
        })
    }

    pub fn gaussian(beta: f64) -> Result<Self> {
        if !beta.is_finite() || beta <= 0.0 {
            return Err(Error::Domain(format!(
                "gaussian width parameter must be positive and finite, got {beta}"
            )));
        }
        Ok(Self {
            kind: FnKind::Gaussian(beta),
        })
    }

    /// Evaluate at a complex argument (every kind is entire).
    pub fn eval(&self, w: Complex64) -> Complex64 {
        match &self.kind {
            FnKind::Polynomial(coeffs) => coeffs
                .iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * w + c),
            FnKind::Exponential(lambda) => (*lambda * w).exp(),
            FnKind::Gaussian(beta) => (-*beta * w * w).exp(),
        }
    }

    /// Exact n-th derivative at a real point.
    ///
    /// Polynomials use the falling-factorial shift, exponentials multiply by
    /// `lambda^n`, and Gaussians go through the Hermite chain
    /// `(-1)^n beta^{n/2} H_n(sqrt(beta) x) exp(-beta x^2)`.
    pub fn derivative(&self, n: u32, x: f64) -> Result<f64> {
        let v = match &self.kind {
            FnKind::Polynomial(coeffs) => {
                let mut acc = 0.0f64;
                for (m, &c) in coeffs.iter().enumerate() {
                    if (m as u32) < n || c == 0.0 {
                        continue;
                    }
                    let mut falling = 1.0f64;
                    for i in 0..n {
                        falling *= (m as u32 - i) as f64;
                    }
                    acc += c * falling * x.powi(m as i32 - n as i32);
                }
                acc
            }
            FnKind::Exponential(lambda) => lambda.powi(n as i32) * (lambda * x).exp(),
            FnKind::Gaussian(beta) => {
                let u = beta.sqrt() * x;
                let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
                sign * beta.powf(n as f64 / 2.0)
                    * hermite_eval(n, u)?
                    * (-beta * x * x).exp()
            }
        };
        if !v.is_finite() {
            return Err(Error::Overflow(format!("derivative of order {n} at {x} overflowed")));
        }
        Ok(v)
    }

    fn degree(&self) -> Option<usize> {
        match &self.kind {
            FnKind::Polynomial(coeffs) => Some(
                coeffs
                    .iter()
                    .rposition(|&c| c != 0.0)
                    .unwrap_or(0),
            ),
            _ => None,
        }
    }

    fn is_gaussian(&self) -> Option<f64> {
        match self.kind {
            FnKind::Gaussian(beta) => Some(beta),
            _ => None,
        }
    }
}

/// One application of `exp[(scale * d/dx)^j]` to `func` at the point `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorQuery {
    pub func: TestFunction,
    /// The operator length scale (the `a` in `exp[(a d/dx)^j]`); real.
    pub scale: f64,
    pub x: f64,
    pub j: u32,
}

impl OperatorQuery {
    pub fn new(func: TestFunction, scale: f64, x: f64, j: u32) -> Self {
        Self { func, scale, x, j }
    }

    fn validate(&self) -> Result<()> {
        if self.j == 0 {
            return Err(Error::Domain("operator order j must be >= 1".into()));
        }
        if !self.scale.is_finite() || !self.x.is_finite() {
            return Err(Error::Domain("operator scale and x must be finite".into()));
        }
        if let Some(beta) = self.func.is_gaussian() {
            if self.j >= 3 {
                return Err(Error::Divergence(format!(
                    "the derivative series for a Gaussian diverges at operator order {} (only j <= 2 is integrable)",
                    self.j
                )));
            }
            if self.j == 2 {
                let q = 4.0 * self.scale * self.scale * beta;
                if q >= 1.0 {
                    return Err(Error::Divergence(format!(
                        "Gaussian smoothing needs 4 a^2 beta < 1, got {q}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Pure shift `exp[a d/dx] g(x) = g(x + a)`; complex shifts are allowed
/// because every test function is entire.
pub fn shift_apply(func: &TestFunction, a: Complex64, x: f64) -> Complex64 {
    func.eval(Complex64::new(x, 0.0) + a)
}

/// Derivative series `Σ_n a^{jn} g^{[jn]}(x) / n!`.
pub fn ij_series(query: &OperatorQuery, control: &SeriesControl) -> Result<Complex64> {
    ij_series_counted(query, control).map(|s| s.value)
}

/// As [`ij_series`], also reporting the number of terms consumed.
pub fn ij_series_counted(query: &OperatorQuery, control: &SeriesControl) -> Result<SeriesSum> {
    query.validate()?;
    let (a, x, j) = (query.scale, query.x, query.j);
    if a == 0.0 {
        return Ok(SeriesSum {
            value: query.func.eval(Complex64::new(x, 0.0)),
            terms_used: 1,
        });
    }
    match &query.func.kind {
        FnKind::Polynomial(_) => {
            // terminates at jn > degree; summed directly so sparse
            // polynomials cannot fake a stall with structural zeros
            let degree = query.func.degree().unwrap_or(0);
            let mut acc = 0.0f64;
            let mut factor = 1.0f64; // a^{jn} / n!
            let a_pow_j = a.powi(j as i32);
            let mut n = 0u32;
            while (n * j) as usize <= degree {
                acc += factor * query.func.derivative(n * j, x)?;
                n += 1;
                factor *= a_pow_j / n as f64;
            }
            if !acc.is_finite() {
                return Err(Error::Overflow("polynomial operator series overflowed".into()));
            }
            Ok(SeriesSum {
                value: Complex64::new(acc, 0.0),
                terms_used: n as usize,
            })
        }
        FnKind::Exponential(lambda) => {
            let ratio = (a * lambda).powi(j as i32);
            let first = (lambda * x).exp();
            let terms = (0..).scan(Complex64::new(first, 0.0), move |t, n| {
                let out = *t;
                *t = *t * ratio / (n as f64 + 1.0);
                Some(out)
            });
            sum_series(terms, control)
        }
        FnKind::Gaussian(beta) => {
            let u = beta.sqrt() * x;
            let envelope = (-beta * x * x).exp();
            match j {
                1 => {
                    let w = Complex64::new(-a * beta.sqrt(), 0.0);
                    let terms = ScaledTermIter::new(u, w).map(move |p| p * envelope);
                    sum_series(terms, control)
                }
                2 => {
                    let w = Complex64::new(a * beta.sqrt(), 0.0);
                    let terms = HalfIndexTerms::new(u, w).evens().map(move |e| e * envelope);
                    sum_series(terms, control)
                }
                _ => unreachable!("validate() rejects Gaussian with j >= 3"),
            }
        }
    }
}

/// Gaussian-smoothing route for `j = 2`:
/// `(1/2√π) ∫_0^∞ ds e^{-s} s^{-1/2} [g(x + 2a√s) + g(x - 2a√s)]`
/// by generalized Gauss–Laguerre with `alpha = -1/2`.
pub fn i2_quadrature(query: &OperatorQuery, rule_order: usize) -> Result<Complex64> {
    if query.j != 2 {
        return Err(Error::Domain(format!(
            "this route is the j = 2 operator; got j = {}",
            query.j
        )));
    }
    query.validate()?;
    let (a, x) = (query.scale, query.x);
    if a == 0.0 {
        return Ok(query.func.eval(Complex64::new(x, 0.0)));
    }
    let rule = gauss_laguerre(-0.5, rule_order)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for (&s, &w) in rule.nodes().iter().zip(rule.weights()) {
        let step = 2.0 * a * s.sqrt();
        acc += w
            * (query.func.eval(Complex64::new(x + step, 0.0))
                + query.func.eval(Complex64::new(x - step, 0.0)));
    }
    let value = acc / (2.0 * PI.sqrt());
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Overflow("Gaussian-smoothing quadrature overflowed".into()));
    }
    Ok(value)
}

fn tensor_sum<F: FnMut(f64, f64)>(rules: &[QuadratureRule], visit: &mut F) {
    fn recurse<F: FnMut(f64, f64)>(rules: &[QuadratureRule], wprod: f64, nprod: f64, visit: &mut F) {
        match rules.split_first() {
            None => visit(nprod, wprod),
            Some((rule, rest)) => {
                for (&node, &weight) in rule.nodes().iter().zip(rule.weights()) {
                    recurse(rest, wprod * weight, nprod * node, visit);
                }
            }
        }
    }
    recurse(rules, 1.0, 1.0, visit)
}

/// General phase-summed route for `2 <= j <= 4`:
/// a `(j-1)`-fold tensor product of generalized Gauss–Laguerre rules with
/// `alpha_k = -k/j`, applied to
/// `Σ_l g(x + j a (x_1 ... x_{j-1})^{1/j} ω_l)`
/// and normalized by `(2π)^{-(j-1)/2} j^{-1/2}`.
///
/// Restricted to polynomial and exponential inputs; nodes are visited in a
/// fixed order so results are bit-reproducible.
pub fn ij_quadrature(query: &OperatorQuery, rule_order: usize) -> Result<Complex64> {
    if query.j < 2 || query.j > 4 {
        return Err(Error::Domain(format!(
            "tensor quadrature covers 2 <= j <= 4, got j = {}",
            query.j
        )));
    }
    query.validate()?;
    if query.func.is_gaussian().is_some() {
        return Err(Error::Domain(
            "tensor quadrature accepts polynomial and exponential inputs only".into(),
        ));
    }
    let (a, x, j) = (query.scale, query.x, query.j);
    if a == 0.0 {
        return Ok(query.func.eval(Complex64::new(x, 0.0)));
    }
    let roots = crate::numerics::roots_of_unity(j)?;
    let mut rules = Vec::with_capacity(j as usize - 1);
    for k in 1..j {
        rules.push(gauss_laguerre(-(k as f64) / j as f64, rule_order)?);
    }
    let inv_j = 1.0 / j as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    tensor_sum(&rules, &mut |nprod, wprod| {
        let radius = j as f64 * a * nprod.powf(inv_j);
        let mut phase_sum = Complex64::new(0.0, 0.0);
        for omega in &roots {
            phase_sum += query.func.eval(Complex64::new(x, 0.0) + radius * omega);
        }
        acc += wprod * phase_sum;
    });
    let prefactor = (2.0 * PI).powf(-(j as f64 - 1.0) / 2.0) / (j as f64).sqrt();
    let value = prefactor * acc;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Overflow("tensor quadrature overflowed".into()));
    }
    Ok(value)
}
