//! Hermite polynomials in the physicists' convention (`H_1 = 2x`), plus the
//! jointly scaled term sequences the series oracles are built from.
//!
//! The scaled forms matter: `H_m(x) z^m / m!` computed from separate factors
//! overflows near `m ≈ 170` even when the term itself is O(1). Folding the
//! powers and factorials into the three-term recurrence keeps every
//! intermediate near the size of the term it represents.

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_DEGREE: u32 = 400;
const MAX_SCALED_INDEX: usize = 2000;

/// `H_n(x)` by upward recurrence `H_{m+1} = 2x H_m - 2m H_{m-1}`.
pub fn hermite_eval(n: u32, x: f64) -> Result<f64> {
    if n > MAX_DEGREE {
        return Err(Error::Domain(format!(
            "hermite_eval supports n <= {MAX_DEGREE}, got {n}"
        )));
    }
    if !x.is_finite() {
        return Err(Error::Domain(format!("hermite_eval needs finite x, got {x}")));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * x;
    for m in 1..n {
        let next = 2.0 * x * cur - 2.0 * m as f64 * prev;
        if !next.is_finite() {
            return Err(Error::Overflow(format!(
                "H_{}({x}) exceeds double range",
                m + 1
            )));
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The values `H_0(x) .. H_n(x)` evaluated in one upward pass.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteSequence {
    x: f64,
    values: Vec<f64>,
}

impl HermiteSequence {
    /// Evaluate `H_0 .. H_n` at `x`; same guards as [`hermite_eval`].
    pub fn evaluate(n: u32, x: f64) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::Domain(format!(
                "HermiteSequence supports n <= {MAX_DEGREE}, got {n}"
            )));
        }
        if !x.is_finite() {
            return Err(Error::Domain(format!("HermiteSequence needs finite x, got {x}")));
        }
        let mut values = Vec::with_capacity(n as usize + 1);
        values.push(1.0);
        if n >= 1 {
            values.push(2.0 * x);
        }
        for m in 1..n as usize {
            let next = 2.0 * x * values[m] - 2.0 * m as f64 * values[m - 1];
            if !next.is_finite() {
                return Err(Error::Overflow(format!(
                    "H_{}({x}) exceeds double range",
                    m + 1
                )));
            }
            values.push(next);
        }
        Ok(Self { x, values })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// `H_0 .. H_n` in degree order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Iterator over `p_m = H_m(x) z^m / m!` via the joint recurrence
/// `p_{m+1} = (2xz p_m - 2z^2 p_{m-1}) / (m+1)`.
#[derive(Debug, Clone)]
pub(crate) struct ScaledTermIter {
    two_xz: Complex64,
    two_z2: Complex64,
    prev: Complex64,
    cur: Complex64,
    m: usize,
}

impl ScaledTermIter {
    pub fn new(x: f64, z: Complex64) -> Self {
        Self {
            two_xz: 2.0 * x * z,
            two_z2: 2.0 * z * z,
            prev: Complex64::new(0.0, 0.0),
            cur: Complex64::new(1.0, 0.0),
            m: 0,
        }
    }
}

impl Iterator for ScaledTermIter {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        let out = self.cur;
        let next = (self.two_xz * self.cur - self.two_z2 * self.prev) / (self.m + 1) as f64;
        self.prev = self.cur;
        self.cur = next;
        self.m += 1;
        Some(out)
    }
}

/// The scaled terms `p_0 .. p_{m_max}` with `p_m = H_m(x) z^m / m!`.
pub fn scaled_term_sequence(x: f64, z: Complex64, m_max: usize) -> Result<Vec<Complex64>> {
    if m_max > MAX_SCALED_INDEX {
        return Err(Error::Domain(format!(
            "scaled_term_sequence supports m_max <= {MAX_SCALED_INDEX}, got {m_max}"
        )));
    }
    if !x.is_finite() || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("scaled_term_sequence needs finite x and z".into()));
    }
    let mut out = Vec::with_capacity(m_max + 1);
    for (m, p) in ScaledTermIter::new(x, z).take(m_max + 1).enumerate() {
        if !p.re.is_finite() || !p.im.is_finite() {
            return Err(Error::Overflow(format!(
                "scaled Hermite term p_{m} left double range"
            )));
        }
        out.push(p);
    }
    Ok(out)
}

/// Paired sequences with the *half-index* factorial denominator:
/// `e_n = H_{2n}(u) w^{2n} / n!` and `o_n = H_{2n+1}(u) w^{2n+1} / n!`.
///
/// Splitting the Hermite recurrence across the even/odd pair gives
///   `e_n = (2uw o_{n-1} - 2(2n-1) w^2 e_{n-1}) / n`,
///   `o_n = 2uw e_n - 4 w^2 o_{n-1}`,
/// again keeping intermediates at term scale.
#[derive(Debug, Clone)]
pub(crate) struct HalfIndexTerms {
    two_uw: Complex64,
    w2: Complex64,
    e: Complex64,
    o: Complex64,
    n: usize,
}

impl HalfIndexTerms {
    pub fn new(u: f64, w: Complex64) -> Self {
        Self {
            two_uw: 2.0 * u * w,
            w2: w * w,
            e: Complex64::new(1.0, 0.0),
            o: 2.0 * u * w,
            n: 0,
        }
    }

    pub fn evens(self) -> impl Iterator<Item = Complex64> {
        self.map(|(e, _)| e)
    }

    pub fn odds(self) -> impl Iterator<Item = Complex64> {
        self.map(|(_, o)| o)
    }

    /// Full-index interleaving `e_0, o_0, e_1, o_1, ...`, i.e. the terms of
    /// `Σ w^n H_n(u) / floor(n/2)!`.
    pub fn interleaved(self) -> impl Iterator<Item = Complex64> {
        self.flat_map(|(e, o)| [e, o])
    }
}

impl Iterator for HalfIndexTerms {
    type Item = (Complex64, Complex64);

    fn next(&mut self) -> Option<(Complex64, Complex64)> {
        let out = (self.e, self.o);
        self.n += 1;
        let n = self.n as f64;
        let e_next = (self.two_uw * self.o - 2.0 * (2.0 * n - 1.0) * self.w2 * self.e) / n;
        let o_next = self.two_uw * e_next - 4.0 * self.w2 * self.o;
        self.e = e_next;
        self.o = o_next;
        Some(out)
    }
}
